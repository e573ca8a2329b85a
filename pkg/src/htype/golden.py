"""Embedded reference tables and the checks that run against them.

The JSON files under golden_data/ are verbatim transcriptions of the
published commutation tables, one file per signature, checksummed so a
corrupted copy cannot load.  Three signatures share a table with their
mirror image and are resolved through an alias map.

This module also hosts the doubled construction for the (0, 7) algebra,
whose module is two copies of the (7, 0) module with opposite central
action, and the isomorphism spot checks between low signatures.
"""

import hashlib
import json
from dataclasses import dataclass, replace
from importlib import resources

from .basis_builder import build_basis, find_initial_vector, reference_config
from .clifford_rep import build_generators, negate_generators
from .lie_algebra import (
    EQUAL,
    SIGN_EQUIVALENT,
    StructureTable,
    compare_tables,
    compute_table,
    generate_table,
    verify_htype,
)
from .words import Involution, Signature

_ALIASES = {(0, 1): (1, 0), (0, 2): (2, 0), (0, 8): (8, 0)}

ISOMORPHIC_PAIRS = (
    ((1, 0), (0, 1)),
    ((2, 0), (0, 2)),
    ((4, 0), (0, 4)),
    ((8, 0), (0, 8)),
)
NON_ISOMORPHIC_PAIR = ((2, 0), (1, 1))


def _data_dir():
    return resources.files("htype") / "golden_data"


def golden_signatures():
    """Signatures with their own embedded table file."""
    out = []
    for entry in _data_dir().iterdir():
        name = entry.name
        if name.endswith(".json"):
            out.append((int(name[1]), int(name[2])))
    return sorted(out)


def table_from_data(data):
    """Validate a raw table dict and build the StructureTable.

    Rejects bad checksums, out of range indices, nonzero diagonal and
    antisymmetry violations, so a damaged file never loads quietly.
    """
    required = {"table", "sig", "dim", "cells", "sha256"}
    missing_keys = required - set(data)
    if missing_keys:
        raise ValueError("table data lacks %s" % sorted(missing_keys))
    payload = {k: v for k, v in data.items() if k != "sha256"}
    digest = hashlib.sha256(
        json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()
    if digest != data["sha256"]:
        raise ValueError("table data fails its checksum")
    r, s = data["sig"]
    sig = Signature(r, s)
    dim = data["dim"]
    holes = frozenset((a, b) for a, b in data.get("missing", []))
    cells = {}
    for a, b, k, sign in data["cells"]:
        if not (1 <= a <= dim and 1 <= b <= dim):
            raise ValueError("cell (%d, %d) outside a %d by %d table" % (a, b, dim, dim))
        if a == b:
            raise ValueError("nonzero diagonal cell (%d, %d)" % (a, b))
        if not (1 <= k <= sig.n) or sign not in (1, -1):
            raise ValueError("cell (%d, %d) holds an invalid value" % (a, b))
        if (a, b) in cells:
            raise ValueError("duplicate cell (%d, %d)" % (a, b))
        cells[(a, b)] = (k, sign)
    for (a, b), (k, sign) in cells.items():
        if (b, a) in holes:
            continue
        if cells.get((b, a)) != (k, -sign):
            raise ValueError("cells (%d, %d) and (%d, %d) break antisymmetry"
                             % (a, b, b, a))
    label = "reference table %d" % data["table"]
    return StructureTable(sig, dim, cells, holes, label)


def golden_table(r, s):
    """The embedded reference table for the signature, aliases resolved."""
    key = _ALIASES.get((r, s), (r, s))
    path = _data_dir() / ("n%d%d.json" % key)
    try:
        raw = path.read_text()
    except FileNotFoundError:
        raise KeyError("no reference table for (%d, %d)" % (r, s)) from None
    return table_from_data(json.loads(raw))


def verify_all_golden():
    """Run the axiom checks on every embedded table."""
    return {key: verify_htype(golden_table(*key)) for key in golden_signatures()}


@dataclass(frozen=True)
class MatchResult:
    status: str
    sigma: tuple = None
    diffs: tuple = ()


def _cell_diffs(generated, reference):
    out = []
    keys = sorted(set(generated.cells) | set(reference.cells))
    for key in keys:
        if key in generated.missing or key in reference.missing:
            continue
        g = generated.cells.get(key)
        r = reference.cells.get(key)
        if g != r:
            out.append("(v%d, v%d): generated %s, reference %s"
                       % (key[0], key[1], _fmt(g), _fmt(r)))
    return tuple(out)


def _fmt(val):
    if val is None:
        return "0"
    k, s = val
    return "%sz%d" % ("-" if s < 0 else "", k)


def match_generated(r, s):
    """Compare the generated table for (r, s) against the embedded one."""
    reference = golden_table(r, s)
    generated = generate_table(Signature(r, s))
    cmp = compare_tables(generated, reference)
    if cmp.status == EQUAL:
        return MatchResult("exact", cmp.sigma)
    if cmp.status == SIGN_EQUIVALENT:
        return MatchResult("sign-equivalent", cmp.sigma)
    return MatchResult("unmatched", None, _cell_diffs(generated, reference))


def build_n07():
    """The 16-dimensional table for the (0, 7) algebra.

    The module doubles the (7, 0) one: the second half carries the same
    generators with flipped sign, which flips the eigensign of the one
    odd involution in the system, and the two halves never bracket into
    each other.
    """
    sig = Signature(7, 0)
    config = reference_config(sig)
    gens = build_generators(sig, system=config.involutions)
    v = find_initial_vector(gens, config)
    plus = compute_table(gens, build_basis(gens, config, v), label="first block")

    gens_neg = negate_generators(gens)
    flipped = tuple(
        Involution(p.word, -p.eigensign if len(p.word.letters) % 2 else p.eigensign)
        for p in config.involutions)
    config_neg = replace(config, involutions=flipped)
    w = find_initial_vector(gens_neg, config_neg)
    minus = compute_table(gens_neg, build_basis(gens_neg, config_neg, w),
                          label="second block")

    half = plus.dim
    cells = dict(plus.cells)
    for (a, b), val in minus.cells.items():
        cells[(a + half, b + half)] = val
    return StructureTable(Signature(0, 7), 2 * half, cells, frozenset(),
                          "doubled construction")


def split_blocks(table, block_sig=None):
    """Split a doubled table into its two diagonal blocks.

    Raises when any nonzero cell couples the halves, so a successful
    split certifies the cross brackets vanish.
    """
    half = table.dim // 2
    if 2 * half != table.dim:
        raise ValueError("odd dimension cannot split")
    first, second = {}, {}
    for (a, b), val in sorted(table.cells.items()):
        if a <= half and b <= half:
            first[(a, b)] = val
        elif a > half and b > half:
            second[(a - half, b - half)] = val
        else:
            raise ValueError("cell (v%d, v%d) couples the two halves" % (a, b))
    sig = block_sig if block_sig is not None else table.sig
    return (StructureTable(sig, half, first, frozenset(), table.label + ", block 1"),
            StructureTable(sig, half, second, frozenset(), table.label + ", block 2"))


def check_isomorphic_pairs(source="golden"):
    """Compare the tables of signature pairs known to agree, plus one
    pair known to differ as a control.

    source picks where the tables come from: the embedded files or the
    generation pipeline.
    """
    if source == "golden":
        fetch = lambda key: golden_table(*key)
    elif source == "generated":
        fetch = lambda key: generate_table(Signature(*key))
    else:
        raise ValueError("source must be 'golden' or 'generated'")
    results = []
    for left, right in ISOMORPHIC_PAIRS + (NON_ISOMORPHIC_PAIR,):
        results.append(((left, right), compare_tables(fetch(left), fetch(right))))
    return results
