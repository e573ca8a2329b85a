"""Shared helpers for the test suite.

The slow word product below is an independent oracle: it multiplies by
concatenating the letter strings and then sorting with explicit
transposition signs, collapsing equal neighbours with the square rule.
It shares no code with the fast implementation.
"""

import hashlib
import json
import random
from importlib import resources

from htype.words import Signature, Word


def slow_word_mul(sig, u, v):
    """Concatenate, bubble sort counting swaps, collapse squares."""
    sign = u.sign * v.sign
    letters = list(u.letters + v.letters)
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(letters):
            a, b = letters[i], letters[i + 1]
            if a > b:
                letters[i], letters[i + 1] = b, a
                sign = -sign
                changed = True
            elif a == b:
                del letters[i:i + 2]
                sign *= -sig.eps(a)
                changed = True
            else:
                i += 1
    return Word(sign, tuple(letters))


def random_signature(rng, max_n=8):
    n = rng.randint(1, max_n)
    r = rng.randint(0, n)
    return Signature(r, n - r)


def random_canonical_word(rng, n, allow_empty=True):
    low = 0 if allow_empty else 1
    k = rng.randint(low, n)
    letters = tuple(sorted(rng.sample(range(1, n + 1), k)))
    return Word(rng.choice((1, -1)), letters)


def raw_data(r, s):
    """The embedded table file for (r, s) as a plain dict."""
    path = resources.files("htype") / "golden_data" / ("n%d%d.json" % (r, s))
    return json.loads(path.read_text())


def resign(data):
    """Recompute the checksum after editing a raw table dict."""
    payload = {k: v for k, v in data.items() if k != "sha256"}
    data["sha256"] = hashlib.sha256(
        json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()
    return data
