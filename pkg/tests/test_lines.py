from __future__ import annotations

import pytest

from cubic_atlas.errors import NotARoot, NotSkew, SameLine
from cubic_atlas.lattice import enumerate_roots, hyperplane_class, is_root, neg, pair
from cubic_atlas.lines import (
    decompose_root,
    enumerate_lines,
    incidence,
    incidence_matrix,
    line,
    root_from_pair,
    skew_pairs,
)


def test_27_lines_in_canonical_order():
    ls = enumerate_lines()
    assert len(ls) == 27
    labels = [L.label for L in ls]
    assert labels[:6] == [f"E_{i}" for i in range(1, 7)]
    assert labels[6:8] == ["F_12", "F_13"]
    assert labels[20] == "F_56"
    assert labels[21:] == [f"G_{i}" for i in range(1, 7)]
    assert line("G_1").cls == (2, 0, -1, -1, -1, -1, -1)


def test_lines_are_degree_one_minus_one_curves():
    h = hyperplane_class()
    for L in enumerate_lines():
        assert pair(L.cls, L.cls) == -1
        assert pair(L.cls, h) == 1


@pytest.mark.parametrize(
    "a, b, expected",
    [("E_1", "E_2", 0), ("E_1", "F_12", 1), ("E_1", "G_1", 0), ("E_1", "G_2", 1)],
)
def test_incidence_examples(a, b, expected):
    assert incidence(line(a), line(b)) == expected


def test_incidence_same_line():
    with pytest.raises(SameLine):
        incidence(line("E_1"), line("E_1"))


def test_incidence_graph_is_10_regular():
    A = incidence_matrix()
    for k, row in enumerate(A):
        assert row[k] == 0
        assert set(row) <= {0, 1}
        assert sum(row) == 10
        assert row.count(0) - 1 == 16
    assert all(A[i][j] == A[j][i] for i in range(27) for j in range(27))


def test_skew_pairs():
    sp = skew_pairs()
    assert len(sp) == 432
    labels = {(a.label, b.label) for a, b in sp}
    assert ("G_1", "E_1") in labels
    assert all(a != b for a, b in sp)


def test_root_from_pair():
    assert root_from_pair(line("G_1"), line("E_1")) == (2, -1, -1, -1, -1, -1, -1)
    assert root_from_pair(line("E_1"), line("E_2")) == (0, 1, -1, 0, 0, 0, 0)
    with pytest.raises(NotSkew):
        root_from_pair(line("E_1"), line("F_12"))
    with pytest.raises(SameLine):
        root_from_pair(line("E_1"), line("E_1"))


def test_every_skew_difference_is_a_root():
    assert all(is_root(root_from_pair(a, b)) for a, b in skew_pairs())


def test_decompose_nodal_root():
    pairs = decompose_root((2, -1, -1, -1, -1, -1, -1))
    assert [(a.label, b.label) for a, b in pairs] == [(f"G_{i}", f"E_{i}") for i in range(1, 7)]


def test_decompose_matches_brute_force():
    # brute force over all ordered pairs of lines, not only the precomputed skew ones
    ls = enumerate_lines()
    for r in enumerate_roots():
        want = sorted(
            (a.label, b.label)
            for a in ls
            for b in ls
            if a != b and tuple(x - y for x, y in zip(a.cls, b.cls)) == r
        )
        got = [(a.label, b.label) for a, b in decompose_root(r)]
        assert got == want
        assert len(got) == 6


def test_decompose_e1_minus_e2():
    got = [(a.label, b.label) for a, b in decompose_root((0, 1, -1, 0, 0, 0, 0))]
    assert got == [
        ("E_1", "E_2"),
        ("F_23", "F_13"),
        ("F_24", "F_14"),
        ("F_25", "F_15"),
        ("F_26", "F_16"),
        ("G_1", "G_2"),
    ]


def test_decompose_negation_reverses():
    for r in enumerate_roots():
        fwd = sorted((b.label, a.label) for a, b in decompose_root(r))
        back = sorted((a.label, b.label) for a, b in decompose_root(neg(r)))
        assert fwd == back


def test_decompositions_cover_skew_pairs_once():
    total = sum(len(decompose_root(r)) for r in enumerate_roots())
    assert total == len(skew_pairs()) == 432


def test_decompose_rejects_non_root():
    with pytest.raises(NotARoot):
        decompose_root(hyperplane_class())
