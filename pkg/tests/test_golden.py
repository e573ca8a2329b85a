from dataclasses import replace

import pytest

from conftest import raw_data, resign
from htype.golden import (
    ISOMORPHIC_PAIRS,
    NON_ISOMORPHIC_PAIR,
    build_n07,
    check_isomorphic_pairs,
    golden_signatures,
    golden_table,
    match_generated,
    split_blocks,
    table_from_data,
    verify_all_golden,
)
from htype.lie_algebra import DIFFERENT, EQUAL, SIGN_EQUIVALENT, verify_htype
from htype.words import Signature

EXPECTED_CORRECTIONS = {
    (2, 2): [[8, 2, 3, -1]],
    (3, 2): [[7, 4, 5, -1], [8, 3, 5, 1]],
    (3, 5): [[16, 15, 3, 1]],
    (7, 1): [[7, 2, 3, 1]],
}


def test_golden_signatures():
    sigs = golden_signatures()
    assert len(sigs) == 31
    assert (1, 0) in sigs
    assert (5, 1) in sigs
    assert (3, 5) in sigs
    assert (0, 1) not in sigs
    assert (0, 7) not in sigs


def test_aliases_reuse_the_shared_files():
    assert golden_table(0, 1).cells == golden_table(1, 0).cells
    assert golden_table(0, 2).cells == golden_table(2, 0).cells
    assert golden_table(0, 8).cells == golden_table(8, 0).cells
    with pytest.raises(KeyError):
        golden_table(0, 7)
    with pytest.raises(KeyError):
        golden_table(6, 1)


def test_every_table_loads_and_verifies():
    reports = verify_all_golden()
    assert len(reports) == 31
    for key, report in reports.items():
        assert report.ok, (key, report.errata)


def test_table_labels_cover_every_appearance():
    labels = {golden_table(*key).label for key in golden_signatures()}
    assert labels == {"reference table %d" % i for i in range(1, 32)}


def test_first_four_tables_are_the_hand_checkable_ones():
    by_label = {golden_table(*key).label: key for key in golden_signatures()}
    assert by_label["reference table 1"] == (1, 0)
    assert by_label["reference table 2"] == (2, 0)
    assert by_label["reference table 3"] == (1, 1)
    assert by_label["reference table 4"] == (3, 0)
    for i in (1, 2, 3, 4):
        key = by_label["reference table %d" % i]
        assert verify_htype(golden_table(*key)).errata == []


def test_n51_reports_its_empty_cell():
    table = golden_table(5, 1)
    assert table.missing == frozenset({(13, 4)})
    report = verify_htype(table)
    assert report.ok
    assert [(m.cell, m.suggestion) for m in report.missing] == [((13, 4), 0)]


def test_checksum_rejects_tampering():
    data = raw_data(2, 2)
    table_from_data(data)
    data["cells"][0][3] *= -1
    with pytest.raises(ValueError, match="checksum"):
        table_from_data(data)


def test_antisymmetry_rejects_resigned_tampering():
    data = raw_data(2, 2)
    data["cells"][0][3] *= -1
    with pytest.raises(ValueError, match="antisymmetry"):
        table_from_data(resign(data))


def test_loader_rejects_structural_damage():
    data = raw_data(1, 0)
    data["cells"].append([1, 1, 1, 1])
    with pytest.raises(ValueError, match="diagonal"):
        table_from_data(resign(data))

    data = raw_data(1, 0)
    data["cells"].append([1, 5, 1, 1])
    with pytest.raises(ValueError, match="outside"):
        table_from_data(resign(data))

    data = raw_data(1, 0)
    data["cells"][0] = [1, 2, 2, 1]
    with pytest.raises(ValueError, match="invalid value"):
        table_from_data(resign(data))

    data = raw_data(1, 0)
    del data["dim"]
    with pytest.raises(ValueError, match="lacks"):
        table_from_data(data)


def test_corrections_archive_the_printed_originals():
    seen = {}
    for key in golden_signatures():
        data = raw_data(*key)
        if "corrections" in data:
            seen[key] = data["corrections"]
    assert seen == EXPECTED_CORRECTIONS
    for key, corrections in seen.items():
        table = golden_table(*key)
        for a, b, k, printed_sign in corrections:
            assert table.cells[(a, b)] == (k, -printed_sign)
            assert table.cells[(b, a)] == (k, printed_sign)


def test_match_anchors():
    assert match_generated(1, 0).status == "exact"
    assert match_generated(3, 0).status == "exact"
    assert match_generated(5, 1).status == "exact"
    res = match_generated(0, 2)
    assert res.status == "sign-equivalent"
    assert res.sigma == (1, -1, 1, 1)
    res = match_generated(0, 8)
    assert res.status == "sign-equivalent"
    assert res.sigma[0] == 1
    with pytest.raises(KeyError):
        match_generated(6, 1)


def test_build_n07_shape():
    t = build_n07()
    assert t.sig == Signature(0, 7)
    assert t.dim == 16
    assert t.label == "doubled construction"
    crossing = [key for key in t.cells
                if (key[0] <= 8) != (key[1] <= 8)]
    assert crossing == []


def test_build_n07_blocks_verify_as_the_positive_twin():
    t = build_n07()
    first, second = split_blocks(t, Signature(7, 0))
    assert verify_htype(first).ok
    assert verify_htype(second).ok
    for (a, b), (k, s) in first.cells.items():
        expect = (k, -s) if a >= 2 and b >= 2 else (k, s)
        assert second.cells[(a, b)] == expect


def test_build_n07_works_under_the_definite_form_too():
    t = build_n07()
    assert verify_htype(replace(t, sig=Signature(7, 0))).ok


def test_split_blocks_rejects_coupled_halves():
    t = build_n07()
    cells = dict(t.cells)
    cells[(1, 9)] = (1, 1)
    cells[(9, 1)] = (1, -1)
    with pytest.raises(ValueError, match="couples"):
        split_blocks(replace(t, cells=cells), Signature(7, 0))


def test_isomorphic_pairs_from_the_embedded_files():
    results = dict(check_isomorphic_pairs("golden"))
    for pair in ISOMORPHIC_PAIRS:
        assert results[pair].status == EQUAL
    assert results[NON_ISOMORPHIC_PAIR].status == DIFFERENT


def test_isomorphic_pairs_from_generation():
    results = dict(check_isomorphic_pairs("generated"))
    for pair in ISOMORPHIC_PAIRS:
        assert results[pair].status in (EQUAL, SIGN_EQUIVALENT)
    assert results[((1, 0), (0, 1))].status == EQUAL
    assert results[((2, 0), (0, 2))].status == SIGN_EQUIVALENT
    assert results[NON_ISOMORPHIC_PAIR].status == DIFFERENT
