"""Reference basis data and initial vector search.

For each signature with a published table there is a ReferenceConfig
recording the involution system, the words whose action on a suitable
unit vector v produces the orthogonal module basis, any extra relations
the source states, and pairings required to vanish when picking v.

The initial vector must satisfy <v, v> = 1 and make the frame
{M(W_a) v} orthogonal with the expected norm signs.  Candidates are
integer combinations of a basis of the subspace fixed by the involution
system, enumerated with coefficients in {0, 1, -1} by growing support.
"""

from dataclasses import dataclass

from itertools import combinations, product

from . import exactlin
from .clifford_rep import ConstructionError
from .words import Involution, Word, norm_sign


def _w(sign, *letters):
    return Word(sign, letters)


def _p(*letters):
    return Involution(Word(1, letters), 1)


@dataclass(frozen=True)
class ReferenceConfig:
    involutions: tuple = ()
    basis_words: tuple = ()
    relations: tuple = ()
    zero_pairings: tuple = ()


_CONFIGS = {
    (1, 0): ReferenceConfig(
        basis_words=(_w(1), _w(1, 1)),
    ),
    (2, 0): ReferenceConfig(
        basis_words=(_w(1), _w(-1, 1, 2), _w(1, 1), _w(1, 2)),
    ),
    (1, 1): ReferenceConfig(
        basis_words=(_w(1), _w(1, 1, 2), _w(1, 1), _w(1, 2)),
    ),
    (3, 0): ReferenceConfig(
        involutions=(_p(1, 2, 3),),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3)),
    ),
    (2, 1): ReferenceConfig(
        basis_words=(_w(1), _w(-1, 1, 2), _w(1, 1, 3), _w(1, 2, 3),
                     _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 1, 2, 3)),
        zero_pairings=(_w(1, 1, 2, 3),),
    ),
    (1, 2): ReferenceConfig(
        involutions=(_p(1, 2, 3),),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3)),
    ),
    (0, 3): ReferenceConfig(
        basis_words=(_w(1), _w(1, 1, 2), _w(1, 1, 3), _w(1, 2, 3),
                     _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 1, 2, 3)),
        zero_pairings=(_w(1, 1, 2, 3),),
    ),
    (4, 0): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4),),
        basis_words=(_w(1), _w(1, 1, 2), _w(1, 1, 3), _w(1, 1, 4),
                     _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4)),
    ),
    (3, 1): ReferenceConfig(
        involutions=(_p(1, 2, 3),),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4),
                     _w(-1, 1, 4), _w(-1, 2, 4), _w(-1, 3, 4)),
    ),
    (2, 2): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4),),
        basis_words=(_w(1), _w(1, 1, 2), _w(1, 1, 3), _w(1, 1, 4),
                     _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4)),
    ),
    (1, 3): ReferenceConfig(
        involutions=(_p(1, 2, 3),),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4),
                     _w(-1, 1, 4), _w(-1, 2, 4), _w(-1, 3, 4)),
    ),
    (0, 4): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4),),
        basis_words=(_w(1), _w(-1, 1, 2), _w(-1, 1, 3), _w(-1, 1, 4),
                     _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4)),
    ),
    (5, 0): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4), _p(1, 2, 5)),
        basis_words=(_w(1), _w(1, 5), _w(1, 1, 3), _w(1, 1, 4),
                     _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4)),
    ),
    (4, 1): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4),),
        basis_words=(_w(1), _w(1, 1, 2), _w(1, 1, 3), _w(1, 1, 4),
                     _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4),
                     _w(1, 5), _w(1, 1, 2, 5), _w(1, 1, 3, 5), _w(1, 1, 4, 5),
                     _w(-1, 1, 5), _w(-1, 2, 5), _w(-1, 3, 5), _w(-1, 4, 5)),
    ),
    (3, 2): ReferenceConfig(
        involutions=(_p(2, 3, 4, 5), _p(1, 2, 3)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4), _w(1, 5),
                     _w(-1, 2, 4), _w(-1, 3, 4)),
    ),
    (2, 3): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4), _p(1, 4, 5)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4), _w(1, 5),
                     _w(-1, 2, 4), _w(-1, 3, 4)),
    ),
    (1, 4): ReferenceConfig(
        involutions=(_p(2, 3, 4, 5), _p(1, 2, 3)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4), _w(1, 5),
                     _w(-1, 2, 4), _w(-1, 3, 4)),
    ),
    (0, 5): ReferenceConfig(
        involutions=(_p(2, 3, 4, 5),),
        basis_words=(_w(1), _w(1, 1, 2), _w(1, 1, 3), _w(1, 1, 4), _w(1, 1, 5),
                     _w(1, 2, 5), _w(1, 3, 5), _w(1, 4, 5),
                     _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4), _w(1, 5),
                     _w(1, 1, 2, 5), _w(1, 1, 3, 5), _w(1, 1, 4, 5)),
    ),
    (6, 0): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4), _p(1, 2, 5, 6), _p(1, 4, 5)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4),
                     _w(1, 5), _w(1, 6), _w(1, 1, 2)),
        relations=(_w(1, 1, 3, 6), _w(-1, 2, 3, 5), _w(1, 2, 4, 6)),
    ),
    (5, 1): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4), _p(1, 2, 5)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4), _w(1, 5),
                     _w(1, 1, 3), _w(1, 1, 4),
                     _w(1, 6), _w(1, 1, 6), _w(1, 2, 6), _w(1, 3, 6),
                     _w(1, 4, 6), _w(1, 5, 6), _w(1, 1, 3, 6), _w(1, 1, 4, 6)),
        relations=(_w(1, 1, 2, 5),),
    ),
    (4, 2): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4), _p(1, 2, 5, 6)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4),
                     _w(1, 1, 2), _w(1, 1, 3), _w(1, 1, 4),
                     _w(1, 5), _w(1, 6), _w(1, 1, 5), _w(1, 1, 6),
                     _w(1, 3, 5), _w(1, 3, 6), _w(1, 1, 3, 5), _w(1, 2, 3, 5)),
        relations=(_w(-1, 3, 4, 5, 6),),
    ),
    (3, 3): ReferenceConfig(
        involutions=(_p(1, 2, 4, 5), _p(2, 3, 5, 6), _p(1, 2, 3)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4),
                     _w(1, 5), _w(1, 6), _w(1, 1, 4)),
        relations=(_w(-1, 1, 5, 6), _w(-1, 3, 4, 5), _w(-1, 2, 4, 6),
                   _w(-1, 1, 3, 4, 6)),
    ),
    (2, 4): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4), _p(1, 2, 5, 6), _p(1, 3, 5)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 1, 2),
                     _w(1, 3), _w(1, 4), _w(1, 5), _w(1, 6)),
        relations=(_w(-1, 2, 4, 5), _w(-1, 1, 4, 6), _w(-1, 2, 3, 6)),
    ),
    (1, 5): ReferenceConfig(
        involutions=(_p(2, 3, 4, 5), _p(1, 2, 3)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2, 6), _w(1, 3, 6), _w(1, 4, 6),
                     _w(1, 5, 6), _w(1, 2, 4), _w(1, 2, 5),
                     _w(1, 6), _w(1, 1, 6), _w(1, 2), _w(1, 3), _w(1, 4),
                     _w(1, 5), _w(1, 2, 4, 6), _w(1, 2, 5, 6)),
        relations=(_w(-1, 1, 4, 5),),
    ),
    (0, 6): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4), _p(1, 2, 5, 6)),
        basis_words=(_w(1), _w(1, 1, 2), _w(1, 1, 3), _w(1, 1, 4),
                     _w(1, 1, 5), _w(1, 1, 6), _w(1, 3, 5), _w(1, 3, 6),
                     _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4), _w(1, 5),
                     _w(1, 6), _w(1, 1, 3, 5), _w(1, 1, 3, 6)),
        relations=(_w(-1, 3, 4, 5, 6),),
    ),
    (7, 0): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4), _p(1, 2, 5, 6), _p(1, 3, 5, 7), _p(5, 6, 7)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4),
                     _w(1, 5), _w(1, 6), _w(1, 7)),
        relations=(_w(-1, 1, 2, 7), _w(1, 1, 3, 6), _w(1, 1, 4, 5),
                   _w(-1, 2, 3, 5), _w(1, 2, 4, 6), _w(1, 3, 4, 7)),
    ),
    (3, 4): ReferenceConfig(
        involutions=(_p(1, 2, 4, 5), _p(1, 2, 6, 7), _p(1, 3, 5, 7), _p(1, 2, 3)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4),
                     _w(1, 5), _w(1, 6), _w(1, 7)),
        relations=(_w(-1, 1, 4, 7), _w(-1, 1, 5, 6), _w(-1, 2, 4, 6),
                   _w(1, 2, 5, 7), _w(-1, 3, 4, 5), _w(-1, 3, 6, 7)),
    ),
    (8, 0): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4), _p(1, 2, 5, 6), _p(2, 3, 5, 7), _p(1, 2, 7, 8)),
        basis_words=(_w(1), _w(1, 1, 2), _w(1, 1, 3), _w(1, 1, 4), _w(1, 1, 5),
                     _w(1, 1, 6), _w(1, 1, 7), _w(1, 1, 8),
                     _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4), _w(1, 5),
                     _w(1, 6), _w(1, 7), _w(1, 8)),
        relations=(_w(-1, 1, 3, 5, 8), _w(-1, 1, 3, 6, 7), _w(-1, 1, 4, 5, 7),
                   _w(1, 1, 4, 6, 8)),
    ),
    (7, 1): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4), _p(1, 2, 5, 6), _p(1, 3, 5, 7), _p(5, 6, 7)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4),
                     _w(1, 5), _w(1, 6), _w(1, 7),
                     _w(1, 8), _w(-1, 1, 8), _w(-1, 2, 8), _w(-1, 3, 8),
                     _w(-1, 4, 8), _w(-1, 5, 8), _w(-1, 6, 8), _w(-1, 7, 8)),
        relations=(_w(-1, 1, 2, 7), _w(1, 1, 3, 6), _w(1, 1, 4, 5),
                   _w(-1, 2, 3, 5), _w(1, 2, 4, 6), _w(1, 3, 4, 7)),
    ),
    (4, 4): ReferenceConfig(
        involutions=(_p(1, 2, 3, 4), _p(1, 2, 5, 6), _p(2, 3, 5, 7), _p(1, 2, 7, 8)),
        basis_words=(_w(1), _w(1, 1, 2), _w(1, 1, 3), _w(1, 1, 4), _w(1, 1, 5),
                     _w(1, 1, 6), _w(1, 1, 7), _w(1, 1, 8),
                     _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4), _w(1, 5),
                     _w(1, 6), _w(1, 7), _w(1, 8)),
        relations=(_w(1, 1, 3, 5, 8), _w(1, 1, 3, 6, 7), _w(-1, 1, 4, 5, 7),
                   _w(1, 1, 4, 6, 8)),
    ),
    (3, 5): ReferenceConfig(
        involutions=(_p(1, 2, 4, 5), _p(1, 2, 6, 7), _p(1, 3, 5, 7), _p(1, 2, 3)),
        basis_words=(_w(1), _w(1, 1), _w(1, 2), _w(1, 3), _w(1, 4),
                     _w(1, 5), _w(1, 6), _w(1, 7),
                     _w(1, 8), _w(-1, 1, 8), _w(-1, 2, 8), _w(-1, 3, 8),
                     _w(-1, 4, 8), _w(-1, 5, 8), _w(-1, 6, 8), _w(-1, 7, 8)),
        relations=(_w(1, 2, 5, 7), _w(-1, 3, 4, 5), _w(-1, 3, 6, 7),
                   _w(-1, 1, 4, 7), _w(-1, 1, 5, 6), _w(-1, 2, 4, 6)),
    ),
}

# Signatures whose module data coincides with an already listed one.
_SHARED = {(0, 1): (1, 0), (0, 2): (2, 0), (0, 8): (8, 0)}


def reference_config(sig):
    key = (sig.r, sig.s)
    key = _SHARED.get(key, key)
    try:
        return _CONFIGS[key]
    except KeyError:
        raise KeyError("no reference basis data for %s" % sig) from None


def has_reference_config(sig):
    key = (sig.r, sig.s)
    return key in _CONFIGS or key in _SHARED


def configured_signatures(include_shared=False):
    keys = set(_CONFIGS)
    if include_shared:
        keys |= set(_SHARED)
    return sorted(keys)


def fixed_subspace(gens, involutions):
    """Integer basis of the joint eigenspace of the involution words.

    For each involution P with eigensign sigma the operator Id + sigma M(P)
    projects (up to a factor 2) onto the right eigenspace, and the
    operators commute, so the column space of their product is the joint
    eigenspace.
    """
    m = exactlin.identity(gens.dim)
    for p in involutions:
        step = exactlin.mat_add(
            exactlin.identity(gens.dim),
            exactlin.mat_scale(p.eigensign, gens.apply_word(p.word)))
        m = exactlin.mat_mul(m, step)
    return exactlin.column_space_basis(m)


def _frame_perms(gens, config):
    out = []
    for w in config.basis_words:
        out.append(exactlin.signed_perm_parts(gens.apply_word(w)))
    return out


def _apply_perm(perm_signs, v):
    perm, signs = perm_signs
    out = [0] * len(v)
    for j, x in enumerate(v):
        if x:
            out[perm[j]] = signs[j] * x
    return out


def _coeff_patterns(d):
    # Growing support keeps the short vectors first; within one support
    # the sign tuples follow itertools order with +1 before -1.
    for size in range(1, d + 1):
        for pos in combinations(range(d), size):
            for signs in product((1, -1), repeat=size):
                yield pos, signs


def is_valid_initial_vector(gens, config, v):
    """True when v generates an orthogonal frame with the right norms."""
    sig = gens.sig
    form = gens.form_v
    frame = [_apply_perm(p, v) for p in _frame_perms(gens, config)]
    for a, u in enumerate(frame):
        want = norm_sign(sig, config.basis_words[a])
        if exactlin.dot_form(u, u, form) != want:
            return False
    for a in range(len(frame)):
        for b in range(a + 1, len(frame)):
            if exactlin.dot_form(frame[a], frame[b], form) != 0:
                return False
    for w in config.zero_pairings:
        pw = exactlin.signed_perm_parts(gens.apply_word(w))
        if exactlin.dot_form(_apply_perm(pw, v), v, form) != 0:
            return False
    return True


def initial_vector_candidates(gens, config, max_candidates=200000):
    """Yield valid initial vectors in a fixed deterministic order."""
    basis = fixed_subspace(gens, config.involutions)
    if not basis:
        return
    frames = _frame_perms(gens, config)
    pairings = [exactlin.signed_perm_parts(gens.apply_word(w))
                for w in config.zero_pairings]
    form = gens.form_v
    norms = [norm_sign(gens.sig, w) for w in config.basis_words]
    tried = 0
    for pos, signs in _coeff_patterns(len(basis)):
        if tried >= max_candidates:
            return
        tried += 1
        v = [0] * gens.dim
        for p, s in zip(pos, signs):
            col = basis[p]
            for i, x in enumerate(col):
                v[i] += s * x
        ok = True
        frame = []
        for a, fp in enumerate(frames):
            u = _apply_perm(fp, v)
            if exactlin.dot_form(u, u, form) != norms[a]:
                ok = False
                break
            frame.append(u)
        if ok:
            for a in range(len(frame)):
                for b in range(a + 1, len(frame)):
                    if exactlin.dot_form(frame[a], frame[b], form) != 0:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            for pw in pairings:
                if exactlin.dot_form(_apply_perm(pw, v), v, form) != 0:
                    ok = False
                    break
        if ok:
            yield v


def find_initial_vector(gens, config, max_candidates=200000):
    basis = fixed_subspace(gens, config.involutions)
    if not basis:
        raise ConstructionError(
            "the involution system fixes no vector; the twin module with "
            "negated generators may carry this basis instead")
    for v in initial_vector_candidates(gens, config, max_candidates):
        return v
    raise ConstructionError("no valid initial vector found")


def build_basis(gens, config, v=None):
    """The frame M(W_a) v as exact column vectors, in word order."""
    if v is None:
        v = find_initial_vector(gens, config)
    return [_apply_perm(p, v) for p in _frame_perms(gens, config)]
