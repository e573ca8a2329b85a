from dataclasses import replace

import pytest

from htype.basis_builder import reference_config
from htype.clifford_rep import build_generators, minimal_admissible_dimension
from htype.exactlin import (
    identity,
    is_signed_permutation,
    mat_add,
    mat_eq,
    mat_mul,
    mat_neg,
    mat_scale,
    metric_adjoint,
    zeros,
)
from htype.lie_algebra import (
    DIFFERENT,
    EQUAL,
    SIGN_EQUIVALENT,
    StructureTable,
    compare_tables,
    compute_table,
    derive_table,
    generate_table,
    reconstruct_J,
    verify_htype,
)
from htype.words import Signature


def test_generate_n10_hand_table():
    t = generate_table(Signature(1, 0))
    assert t.sig == Signature(1, 0)
    assert t.dim == 2
    assert t.cells == {(1, 2): (1, 1), (2, 1): (1, -1)}
    assert reconstruct_J(t) == [[[0, -1], [1, 0]]]
    assert verify_htype(t).ok


def test_generate_n20_hand_table():
    t = generate_table(Signature(2, 0))
    assert t.dim == 4
    assert t.sorted_cells() == [
        (1, 3, 1, 1), (1, 4, 2, 1), (2, 3, 2, -1), (2, 4, 1, 1),
        (3, 1, 1, -1), (3, 2, 2, 1), (4, 1, 2, -1), (4, 2, 1, -1)]
    assert verify_htype(t).ok


def test_structure_table_accessors():
    t = generate_table(Signature(2, 0))
    assert t.entry(1, 3) == (1, 1)
    assert t.entry(1, 2) is None


def test_tables_are_antisymmetric():
    for key in ((3, 0), (2, 2), (0, 5), (4, 4)):
        t = generate_table(Signature(*key))
        for (a, b), (k, s) in t.cells.items():
            assert t.cells[(b, a)] == (k, -s)
            assert a != b


def test_compute_table_from_parts():
    sig = Signature(3, 0)
    config = reference_config(sig)
    gens = build_generators(sig, system=config.involutions)
    from htype.basis_builder import build_basis
    vectors = build_basis(gens, config)
    t = compute_table(gens, vectors, label="by hand")
    assert t.label == "by hand"
    assert t == replace(generate_table(sig), label="by hand")


def test_verify_rejects_zeroed_pair():
    t = generate_table(Signature(1, 0))
    cells = dict(t.cells)
    del cells[(1, 2)]
    del cells[(2, 1)]
    report = verify_htype(replace(t, cells=cells))
    assert not report.ok
    assert any("z1" in e for e in report.errata)
    assert any("never reaches" in e for e in report.errata)


def test_verify_rejects_broken_antisymmetry():
    t = generate_table(Signature(1, 0))
    cells = dict(t.cells)
    cells[(1, 2)] = (1, -1)
    report = verify_htype(replace(t, cells=cells))
    assert not report.ok
    assert any("break antisymmetry" in e for e in report.errata)
    assert any("(v1, v2)" in e for e in report.errata)


def test_verify_rejects_unknown_central():
    t = generate_table(Signature(1, 0))
    cells = dict(t.cells)
    cells[(1, 2)] = (2, 1)
    cells[(2, 1)] = (2, -1)
    report = verify_htype(replace(t, cells=cells))
    assert not report.ok
    assert any("unknown central z2" in e for e in report.errata)


def test_verify_rejects_diagonal_cell():
    t = generate_table(Signature(1, 0))
    cells = dict(t.cells)
    cells[(1, 1)] = (1, 1)
    report = verify_htype(replace(t, cells=cells))
    assert not report.ok
    assert any("diagonal" in e for e in report.errata)


def test_verify_catches_consistent_sign_flip():
    t = generate_table(Signature(3, 0))
    cells = dict(t.cells)
    k, s = cells[(1, 2)]
    cells[(1, 2)] = (k, -s)
    cells[(2, 1)] = (k, s)
    report = verify_htype(replace(t, cells=cells))
    assert not report.ok
    assert any("anticommute" in e for e in report.errata)


def test_missing_cell_with_present_partner_gets_a_suggestion():
    t = generate_table(Signature(2, 0))
    cells = dict(t.cells)
    del cells[(1, 3)]
    report = verify_htype(replace(t, cells=cells,
                                  missing=frozenset({(1, 3)})))
    assert [(m.cell, m.suggestion) for m in report.missing] == [((1, 3), (1, 1))]
    assert not report.ok
    assert any("signed permutation" in e for e in report.errata)


def test_missing_pair_has_no_determined_value():
    t = generate_table(Signature(2, 0))
    cells = dict(t.cells)
    del cells[(1, 3)]
    del cells[(3, 1)]
    report = verify_htype(replace(t, cells=cells,
                                  missing=frozenset({(1, 3), (3, 1)})))
    assert [(m.cell, m.suggestion) for m in report.missing] == [
        ((1, 3), None), ((3, 1), None)]
    assert not report.ok


def test_reconstructed_generators_satisfy_the_axioms():
    sig = Signature(4, 2)
    t = generate_table(sig)
    mats = reconstruct_J(t)
    assert len(mats) == sig.n
    report = verify_htype(t)
    assert report.ok
    form = list(report.eta)
    ident = identity(t.dim)
    for i, m in enumerate(mats, start=1):
        assert is_signed_permutation(m)
        assert mat_eq(metric_adjoint(m, form), mat_neg(m))
        square = mat_mul(m, m)
        assert mat_eq(square, mat_scale(-sig.eps(i), ident))
        for j, other in enumerate(mats, start=1):
            if i < j:
                anti = mat_add(mat_mul(m, other), mat_mul(other, m))
                assert mat_eq(anti, zeros(t.dim))


def test_compare_tables_equal_and_flipped():
    t = generate_table(Signature(2, 0))
    assert compare_tables(t, t).status == EQUAL
    sigma = (1, -1, 1, -1)
    flipped = {(a, b): (k, s * sigma[a - 1] * sigma[b - 1])
               for (a, b), (k, s) in t.cells.items()}
    cmp = compare_tables(t, replace(t, cells=flipped))
    assert cmp.status == SIGN_EQUIVALENT
    assert cmp.sigma == sigma


def test_compare_tables_different():
    t = generate_table(Signature(2, 0))
    cells = dict(t.cells)
    cells[(1, 3)] = (2, 1)
    cells[(3, 1)] = (2, -1)
    assert compare_tables(t, replace(t, cells=cells)).status == DIFFERENT
    assert compare_tables(generate_table(Signature(1, 0)), t).status == DIFFERENT


def test_compare_tables_skips_missing_cells():
    t = generate_table(Signature(2, 0))
    cells = dict(t.cells)
    del cells[(1, 3)]
    partial = replace(t, cells=cells, missing=frozenset({(1, 3)}))
    assert compare_tables(t, partial).status == EQUAL


def test_generate_table_verifies_for_mixed_signatures():
    for key in ((1, 1), (2, 3), (3, 3), (0, 8), (7, 1)):
        t = generate_table(Signature(*key))
        assert verify_htype(t).ok
        assert t.dim == minimal_admissible_dimension(*key)


def test_derive_table_for_signatures_without_stored_data():
    for key in ((6, 1), (2, 6), (5, 2)):
        t = derive_table(Signature(*key))
        assert t.label == "derived"
        assert verify_htype(t).ok
        assert t.dim == minimal_admissible_dimension(*key)
