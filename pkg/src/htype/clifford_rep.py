"""Clifford module generators as exact signed permutation matrices.

The entry point is build_generators, which realises the Clifford
relations J_i J_j + J_j J_i = -2 <z_i, z_j> Id on a module of the
minimal admissible dimension.  The construction is combinatorial: fix a
system of k commuting involution words with independent letter sets,
declare them to act as +1, and take as module basis the cosets of all
letter sets modulo the span of the system.  Each J_i then permutes the
cosets with signs given by exact word arithmetic, and the diagonal form
with entries eta(W) = prod eps over the representative letters makes
every J_i skew.

The minimal dimensions come from the classification grid of real
Clifford algebras Cl(r, s), stored verbatim below.
"""

from dataclasses import dataclass

from itertools import combinations

from . import exactlin
from .words import (
    ONE,
    Involution,
    Signature,
    Word,
    norm_sign,
    reduce_mod_system,
    span_products,
    word_inverse,
    word_mul,
    words_commute,
)


class ConstructionError(Exception):
    pass


# Classification grid for Cl(r, s), 0 <= r, s <= 8.  Rows are indexed by
# s, columns by r.  Cell syntax: kind, optional (size), trailing "*" when
# the minimal admissible module doubles the irreducible one.
_GRID_ROWS = {
    0: ["R", "C", "H", "H2", "H(2)", "C(4)", "R(8)", "R(8)", "R(16)"],
    1: ["R2*", "R(2)*", "C(2)*", "H(2)", "H2(2)*", "H(4)", "C(8)", "R(16)", "R2(16)*"],
    2: ["R(2)*", "R2(2)*", "R(4)*", "C(4)", "H(4)", "H2(4)", "H(8)", "C(16)", "R(32)*"],
    3: ["C(2)*", "R(4)*", "R2(4)*", "R(8)", "C(8)", "H(8)", "H2(8)*", "H(16)", "C(32)*"],
    4: ["H(2)", "C(4)", "R(8)", "R2(8)", "R(16)", "C(16)", "H(16)", "H2(16)", "H(32)"],
    5: ["H2(2)*", "H(4)", "C(8)", "R(16)", "R2(16)*", "R(32)*", "C(32)*", "H(32)", "H2(32)*"],
    6: ["H(4)", "H2(4)", "H(8)", "C(16)", "R(32)*", "R2(32)*", "R(64)*", "C(64)", "H(64)"],
    7: ["C(8)", "H(8)", "H2(8)*", "H(16)", "C(32)*", "R(64)*", "R2(64)*", "R(128)", "C(128)"],
    8: ["R(16)", "C(16)", "H(16)", "H2(16)", "H(32)", "C(64)", "R(128)", "R2(128)", "R(256)"],
}

# The (7, 0) cell repeats R(8); mod 8 periodicity of the grid would give
# R2(8) there.  The printed value is kept and the doubt surfaced.
GRID_NOTES = {(7, 0): "grid prints R(8), periodicity suggests R2(8)"}

_REAL_DIM_FACTOR = {"R": 1, "R2": 1, "C": 2, "H": 4, "H2": 4}


@dataclass(frozen=True)
class CliffordType:
    kind: str
    size: int
    doubled: bool

    @property
    def label(self):
        base = self.kind if self.size == 1 else "%s(%d)" % (self.kind, self.size)
        return base + ("*" if self.doubled else "")


def _parse_cell(cell):
    doubled = cell.endswith("*")
    if doubled:
        cell = cell[:-1]
    if "(" in cell:
        kind, rest = cell.split("(")
        size = int(rest.rstrip(")"))
    else:
        kind, size = cell, 1
    return CliffordType(kind, size, doubled)


def clifford_type(r, s):
    if not (0 <= r <= 8 and 0 <= s <= 8):
        raise ValueError("grid covers 0 <= r, s <= 8")
    return _parse_cell(_GRID_ROWS[s][r])


def minimal_admissible_dimension(r, s):
    """Real dimension of the smallest module carrying an admissible form."""
    t = clifford_type(r, s)
    dim = _REAL_DIM_FACTOR[t.kind] * t.size
    if t.doubled:
        dim *= 2
    return dim


def involution_count(sig):
    """Number of independent involutions cutting the module down to size.

    The coset module over k involutions has dimension 2^(n-k), so k is
    determined by the minimal admissible dimension.
    """
    dim = minimal_admissible_dimension(sig.r, sig.s)
    if dim & (dim - 1):
        raise ConstructionError("minimal dimension %d is not a power of two" % dim)
    k = sig.n - dim.bit_length() + 1
    if k < 0:
        raise ConstructionError("grid dimension too large for %s" % sig)
    return k


def _candidate_sets(sig):
    cands = []
    for size in (3, 4):
        for c in combinations(range(1, sig.n + 1), size):
            eta = 1
            for i in c:
                eta *= sig.eps(i)
            if eta == 1:
                cands.append(c)
    cands.sort()
    return cands


def find_involution_system(sig, k=None):
    """Deterministic search for k commuting independent involution words.

    Candidates are the length 3 and 4 letter sets whose eps product is
    +1 (so the word squares to +1), scanned in tuple order with
    backtracking.  All eigensigns are +1.  The first system found is
    returned, so the result is stable.
    """
    if k is None:
        k = involution_count(sig)
    if k == 0:
        return []
    cands = _candidate_sets(sig)
    chosen = []

    def extend(start, span):
        if len(chosen) == k:
            return True
        for idx in range(start, len(cands)):
            c = cands[idx]
            cset = frozenset(c)
            if cset in span:
                continue
            w = Word(1, c)
            if not all(words_commute(w, p.word) for p in chosen):
                continue
            chosen.append(Involution(w, 1))
            if extend(idx + 1, span | {s ^ cset for s in span}):
                return True
            chosen.pop()
        return False

    if not extend(0, {frozenset()}):
        raise ConstructionError("no involution system of size %d for %s" % (k, sig))
    return chosen


@dataclass(frozen=True)
class GeneratorSet:
    """Generators J_1 ... J_n on a module with a diagonal +-1 form."""

    sig: Signature
    dim: int
    mats: tuple
    form_v: tuple
    coset_words: tuple

    def apply_word(self, w):
        """Matrix of the word w in these generators."""
        m = exactlin.identity(self.dim)
        for i in w.letters:
            m = exactlin.mat_mul(m, self.mats[i - 1])
        if w.sign == -1:
            m = exactlin.mat_neg(m)
        return m


def build_generators(sig, system=None, negate=False):
    """Minimal admissible Clifford module for sig, as exact matrices.

    With negate=True every J_i is replaced by -J_i, which lands in the
    inequivalent twin module when there is one.  The result is checked
    against all invariants before being returned.
    """
    if system is None:
        system = find_involution_system(sig)
    table = span_products(sig, system)
    span_keys = list(table)

    # Enumerate cosets of letter sets modulo the span; scanning subsets
    # in tuple order makes the first member of each coset its smallest
    # representative.
    reps = []
    coset_index = {}
    subsets = []
    for size in range(sig.n + 1):
        subsets.extend(combinations(range(1, sig.n + 1), size))
    subsets.sort()
    for t in subsets:
        key = frozenset(t)
        if key in coset_index:
            continue
        idx = len(reps)
        reps.append(t)
        for sk in span_keys:
            coset_index[key ^ sk] = idx

    dim = len(reps)
    expected = minimal_admissible_dimension(sig.r, sig.s)
    if dim != expected:
        raise ConstructionError(
            "coset count %d does not match minimal dimension %d" % (dim, expected))

    rep_words = [Word(1, t) for t in reps]
    mats = []
    for i in range(1, sig.n + 1):
        gen = Word(1, (i,))
        m = exactlin.zeros(dim)
        for a, wa in enumerate(rep_words):
            u = word_mul(sig, gen, wa)
            b = coset_index[frozenset(u.letters)]
            residual = word_mul(sig, word_inverse(sig, rep_words[b]), u)
            tau = reduce_mod_system(sig, system, residual, table)
            m[b][a] = -tau if negate else tau
        mats.append(m)

    form_v = tuple(norm_sign(sig, w) for w in rep_words)
    gens = GeneratorSet(sig, dim, tuple(mats), form_v, tuple(rep_words))
    problems = verify_generators(gens)
    if problems:
        raise ConstructionError("; ".join(problems))
    return gens


def negate_generators(gens):
    """The same module with every generator replaced by its negative."""
    mats = tuple(exactlin.mat_neg(m) for m in gens.mats)
    return GeneratorSet(gens.sig, gens.dim, mats, gens.form_v, gens.coset_words)


def verify_generators(gens):
    """Check all invariants of a generator set; returns a list of problems."""
    sig = gens.sig
    out = []
    n = sig.n
    dim = gens.dim
    ident = exactlin.identity(dim)
    for i, m in enumerate(gens.mats, start=1):
        if not exactlin.is_signed_permutation(m):
            out.append("J_%d is not a signed permutation" % i)
        adj = exactlin.metric_adjoint(m, gens.form_v)
        if adj != exactlin.mat_neg(m):
            out.append("J_%d is not skew for the form" % i)
    for i in range(n):
        for j in range(i, n):
            anti = exactlin.mat_add(
                exactlin.mat_mul(gens.mats[i], gens.mats[j]),
                exactlin.mat_mul(gens.mats[j], gens.mats[i]))
            want = exactlin.zeros(dim)
            if i == j:
                want = exactlin.mat_scale(-2 * sig.eps(i + 1), ident)
            if anti != want:
                out.append("Clifford relation fails for J_%d, J_%d" % (i + 1, j + 1))
    pos = sum(1 for e in gens.form_v if e == 1)
    neg = dim - pos
    if sig.s == 0:
        if neg:
            out.append("form should be positive definite, got (%d,%d)" % (pos, neg))
    elif pos != neg:
        out.append("form should be neutral, got (%d,%d)" % (pos, neg))
    return out
