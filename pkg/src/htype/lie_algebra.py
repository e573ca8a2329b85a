"""Structure constant tables, their verification and comparison.

A StructureTable records the brackets of a 2-step nilpotent algebra
with centre z_1 ... z_n and module basis v_1 ... v_N.  Every bracket
[v_a, v_b] is either zero or a single signed central element, so a cell
is stored as (k, sign) under the key (a, b), with zero cells omitted.

verify_htype rebuilds the generator matrices from nothing but the table
and checks the Clifford relations, skewness for a diagonal form whose
signs are solved by propagation, and the expected form signature.  It
reports every defect it can pin to specific cells.
"""

from collections import deque
from dataclasses import dataclass, field

from . import exactlin
from .basis_builder import (ReferenceConfig, build_basis, find_initial_vector,
                            reference_config)
from .clifford_rep import (ConstructionError, build_generators,
                           find_involution_system)
from .words import Signature

EQUAL = "equal"
SIGN_EQUIVALENT = "sign-equivalent"
DIFFERENT = "different"


@dataclass(frozen=True)
class StructureTable:
    sig: Signature
    dim: int
    cells: dict
    missing: frozenset = frozenset()
    label: str = ""

    def entry(self, a, b):
        """(k, sign) for the bracket [v_a, v_b], or None when zero."""
        return self.cells.get((a, b))

    def sorted_cells(self):
        return [(a, b, k, s) for (a, b), (k, s) in sorted(self.cells.items())]


@dataclass(frozen=True)
class MissingCell:
    cell: tuple
    suggestion: object


@dataclass
class VerifyReport:
    sig: Signature
    label: str
    errata: list
    eta: tuple
    missing: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.errata


def compute_table(gens, vectors, label=""):
    """Expand J_k v_a over the frame and collect the bracket table.

    The frame must consist of exact unit vectors for the module form and
    every J_k v_a must hit exactly one frame vector, otherwise the frame
    does not present the algebra and a ValueError is raised.
    """
    sig = gens.sig
    n_vec = len(vectors)
    if n_vec != gens.dim:
        raise ValueError("expected %d basis vectors, got %d" % (gens.dim, n_vec))
    form = gens.form_v
    etas = []
    for v in vectors:
        e = exactlin.dot_form(v, v, form)
        if e not in (1, -1):
            raise ValueError("basis vector with square norm %d" % e)
        etas.append(e)
    cells = {}
    for k in range(1, sig.n + 1):
        jk = gens.mats[k - 1]
        for a in range(n_vec):
            u = exactlin.mat_apply(jk, vectors[a])
            hits = [(b, exactlin.dot_form(u, vectors[b], form))
                    for b in range(n_vec)]
            hits = [(b, p) for b, p in hits if p]
            if len(hits) != 1 or hits[0][1] not in (1, -1):
                raise ValueError(
                    "J_%d v_%d does not map to a single frame vector" % (k, a + 1))
            b, p = hits[0]
            if u != [p * etas[b] * x for x in vectors[b]]:
                raise ValueError("frame does not carry the module action")
            key = (a + 1, b + 1)
            if key in cells:
                raise ValueError("two central directions on pair (%d, %d)" % key)
            cells[key] = (k, sig.eps(k) * p)
    for (a, b), (k, s) in cells.items():
        if cells.get((b, a)) != (k, -s):
            raise ValueError("computed table is not antisymmetric at (%d, %d)" % (a, b))
    return StructureTable(sig, n_vec, cells, frozenset(), label)


def generate_table(sig, config=None, negate=False, label=""):
    """Full pipeline from a signature to its structure table."""
    if config is None:
        config = reference_config(sig)
    gens = build_generators(sig, system=config.involutions, negate=negate)
    v = find_initial_vector(gens, config)
    vectors = build_basis(gens, config, v)
    return compute_table(gens, vectors, label=label)


def derive_table(sig, label="derived"):
    """Structure table for a signature without stored basis data.

    Searches an involution system, takes the coset words it cuts as the
    module basis, and switches to the negated generators when the system
    fixes no vector in the first module.
    """
    system = find_involution_system(sig)
    gens = build_generators(sig, system=system)
    config = ReferenceConfig(involutions=system, basis_words=gens.coset_words)
    try:
        v = find_initial_vector(gens, config)
    except ConstructionError:
        gens = build_generators(sig, system=system, negate=True)
        v = find_initial_vector(gens, config)
    vectors = build_basis(gens, config, v)
    return compute_table(gens, vectors, label=label)


def _solve_eta(table):
    """Propagate norm signs from eta(v_1) = +1; returns (eta, errata).

    Every cell (a, b) = (k, s) forces eta_b = eps_k eta_a because J_k
    scales square norms by eps_k.  Components not reachable from v_1
    start at +1 as well.
    """
    sig = table.sig
    n_vec = table.dim
    adj = {a: [] for a in range(1, n_vec + 1)}
    for (a, b), (k, _s) in table.cells.items():
        adj[a].append((b, sig.eps(k), (a, b)))
    eta = [None] * (n_vec + 1)
    errata = []
    for start in range(1, n_vec + 1):
        if eta[start] is not None:
            continue
        eta[start] = 1
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b, e, cell in adj[a]:
                want = e * eta[a]
                if eta[b] is None:
                    eta[b] = want
                    queue.append(b)
                elif eta[b] != want:
                    errata.append("norm signs conflict at cell (v%d, v%d)" % cell)
    return tuple(eta[1:]), errata


def reconstruct_J(table, eta=None):
    """Generator matrices implied by the table, (J_k)[b][a] = eps_k c eta_b."""
    if eta is None:
        eta, conflicts = _solve_eta(table)
        if conflicts:
            raise ValueError("; ".join(conflicts))
    n_vec = table.dim
    mats = [exactlin.zeros(n_vec) for _ in range(table.sig.n)]
    for (a, b), (k, s) in table.cells.items():
        mats[k - 1][b - 1][a - 1] = table.sig.eps(k) * s * eta[b - 1]
    return mats


def _structural_errata(table):
    sig = table.sig
    n = sig.n
    n_vec = table.dim
    errata = []
    for (a, b), (k, s) in sorted(table.cells.items()):
        if not (1 <= a <= n_vec and 1 <= b <= n_vec):
            errata.append("cell (v%d, v%d) outside the table" % (a, b))
            continue
        if a == b:
            errata.append("nonzero diagonal at v%d" % a)
        if not (1 <= k <= n):
            errata.append("cell (v%d, v%d) uses unknown central z%d" % (a, b, k))
        if s not in (1, -1):
            errata.append("cell (v%d, v%d) has non-unit coefficient" % (a, b))
    if errata:
        return errata
    for (a, b), (k, s) in sorted(table.cells.items()):
        if (b, a) in table.missing:
            continue
        if table.cells.get((b, a)) != (k, -s):
            errata.append(
                "cells (v%d, v%d) and (v%d, v%d) break antisymmetry" % (a, b, b, a))
    rows_missing = {}
    cols_missing = {}
    for (a, b) in table.missing:
        rows_missing.setdefault(a, []).append(b)
        cols_missing.setdefault(b, []).append(a)
    for k in range(1, n + 1):
        row_hits = {}
        col_hits = {}
        for (a, b), (kk, s) in sorted(table.cells.items()):
            if kk != k:
                continue
            if a in row_hits:
                errata.append("z%d appears twice in row v%d" % (k, a))
            row_hits[a] = b
            if b in col_hits:
                errata.append("z%d appears twice in column v%d" % (k, b))
            col_hits[b] = a
        for a in range(1, n_vec + 1):
            if a not in row_hits and a not in rows_missing:
                errata.append("row v%d never reaches z%d" % (a, k))
            if a not in col_hits and a not in cols_missing:
                errata.append("column v%d never receives z%d" % (a, k))
    return errata


def _missing_reports(table):
    out = []
    cells = table.cells
    for (a, b) in sorted(table.missing):
        partner = cells.get((b, a))
        if partner is not None:
            sugg = (partner[0], -partner[1])
        elif (b, a) in table.missing:
            row_ks = {v[0] for key, v in cells.items() if key[0] == a}
            col_ks = {v[0] for key, v in cells.items() if key[1] == b}
            full = set(range(1, table.sig.n + 1))
            sugg = 0 if (row_ks == full and col_ks == full) else None
        else:
            # The mirror cell is recorded as zero, so antisymmetry pins
            # this one to zero too.
            sugg = 0
        out.append(MissingCell((a, b), sugg))
    return out


def verify_htype(table):
    """Check a table against every axiom it is supposed to satisfy."""
    sig = table.sig
    n = sig.n
    n_vec = table.dim
    errata = _structural_errata(table)
    missing = _missing_reports(table)
    if errata:
        return VerifyReport(sig, table.label, errata, None, missing)
    eta, conflicts = _solve_eta(table)
    errata.extend(conflicts)
    if conflicts:
        return VerifyReport(sig, table.label, errata, eta, missing)
    pos = sum(1 for e in eta if e == 1)
    neg = n_vec - pos
    want = (n_vec, 0) if sig.s == 0 else (n_vec // 2, n_vec // 2)
    if (pos, neg) != want:
        errata.append(
            "solved norms have signature (%d, %d), expected (%d, %d)"
            % (pos, neg, want[0], want[1]))
    mats = reconstruct_J(table, eta)
    perms = []
    for k in range(1, n + 1):
        jk = mats[k - 1]
        if not exactlin.is_signed_permutation(jk):
            errata.append("z%d does not act by a signed permutation" % k)
            perms.append(None)
            continue
        perm, _signs = exactlin.signed_perm_parts(jk)
        perms.append(perm)
        if exactlin.metric_adjoint(jk, eta) != exactlin.mat_neg(jk):
            errata.append("z%d is not skew for the solved norms" % k)
    ident = exactlin.identity(n_vec)
    for i in range(n):
        for j in range(i, n):
            anti = exactlin.mat_add(
                exactlin.mat_mul(mats[i], mats[j]),
                exactlin.mat_mul(mats[j], mats[i]))
            want_m = exactlin.zeros(n_vec)
            if i == j:
                want_m = exactlin.mat_scale(-2 * sig.eps(i + 1), ident)
            if anti == want_m:
                continue
            if i == j and perms[i] is not None:
                pi = perms[i]
                bad = [a for a in range(n_vec)
                       if [row[a] for row in anti] != [row[a] for row in want_m]]
                for a in bad:
                    errata.append(
                        "z%d square fails through cells (v%d, v%d) and (v%d, v%d)"
                        % (i + 1, a + 1, pi[a] + 1, pi[a] + 1, pi[pi[a]] + 1))
            else:
                errata.append("z%d and z%d do not anticommute" % (i + 1, j + 1))
    return VerifyReport(sig, table.label, errata, eta, missing)


@dataclass(frozen=True)
class TableComparison:
    status: str
    sigma: tuple = None
    reason: str = ""


def compare_tables(left, right):
    """Decide whether two tables agree up to signs of the module basis.

    A diagonal rescale v_a -> sigma_a v_a multiplies the cell at (a, b)
    by sigma_a sigma_b and keeps the central labels.  The comparison
    solves for such signs; sigma_1 is fixed to +1, which loses nothing
    because a global flip leaves every product unchanged.
    """
    if left.dim != right.dim:
        return TableComparison(DIFFERENT, reason="module dimensions differ")
    if left.sig.n != right.sig.n:
        return TableComparison(DIFFERENT, reason="centre dimensions differ")
    skip = set(left.missing) | set(right.missing)
    shared = []
    for key, (k, s) in left.cells.items():
        if key in skip:
            continue
        other = right.cells.get(key)
        if other is None:
            return TableComparison(
                DIFFERENT, reason="cell (v%d, v%d) is zero on one side" % key)
        if other[0] != k:
            return TableComparison(
                DIFFERENT,
                reason="cell (v%d, v%d) carries different central elements" % key)
        shared.append((key, s, other[1]))
    for key in right.cells:
        if key in skip or key in left.cells:
            continue
        return TableComparison(
            DIFFERENT, reason="cell (v%d, v%d) is zero on one side" % key)
    n_vec = left.dim
    adj = {a: [] for a in range(1, n_vec + 1)}
    for (a, b), s1, s2 in shared:
        adj[a].append((b, s1 * s2))
        adj[b].append((a, s1 * s2))
    sigma = [None] * (n_vec + 1)
    for start in range(1, n_vec + 1):
        if sigma[start] is not None:
            continue
        sigma[start] = 1
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b, rel in adj[a]:
                want = rel * sigma[a]
                if sigma[b] is None:
                    sigma[b] = want
                    queue.append(b)
                elif sigma[b] != want:
                    return TableComparison(
                        DIFFERENT, reason="no diagonal sign change matches")
    result = tuple(sigma[1:])
    if all(x == 1 for x in result):
        return TableComparison(EQUAL, result)
    return TableComparison(SIGN_EQUIVALENT, result)
