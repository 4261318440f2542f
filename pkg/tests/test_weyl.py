from __future__ import annotations

import zlib

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cubic_atlas.atlas import PUBLISHED_TABLE1
from cubic_atlas.config import parse_config
from cubic_atlas.errors import (
    NotAnOrbit,
    NotARoot,
    NotClosed,
    NotEmbeddable,
    NotSimpleSystem,
    RankTooLarge,
)
from cubic_atlas.lattice import enumerate_roots, hyperplane_class, neg, pair, simple_roots
from cubic_atlas.weyl import (
    WeylElement,
    classify,
    close_subsystem,
    generate_group,
    height,
    orbit_max,
    orbits,
    picard_lefschetz_word,
    realize,
    reflect,
    simple_system,
    weyl_e6,
)

import oracles

DELTA = (2, -1, -1, -1, -1, -1, -1)
A = simple_roots()
ROOTS = enumerate_roots()
TABLE_LABELS = [label for label, _, _ in PUBLISHED_TABLE1]

# |W(E6)|, frozen from the 27-line closure oracle (tests/oracles.py)
GOLDEN_W_E6_ORDER = 51840

root_idx = st.integers(0, 71)


def test_reflect_examples():
    assert reflect(DELTA, DELTA) == neg(DELTA)
    assert reflect(DELTA, (0, 1, -1, 0, 0, 0, 0)) == (0, 1, -1, 0, 0, 0, 0)
    assert reflect(DELTA, (1, -1, -1, -1, 0, 0, 0)) == (-1, 0, 0, 0, 1, 1, 1)


def test_reflect_rejects_non_root():
    with pytest.raises(NotARoot):
        reflect(hyperplane_class(), DELTA)


@given(root_idx, st.tuples(*[st.integers(-9, 9)] * 7), st.tuples(*[st.integers(-9, 9)] * 7))
def test_reflection_is_involutive_isometry(a, u, v):
    alpha = ROOTS[a]
    ru, rv = reflect(alpha, u), reflect(alpha, v)
    assert reflect(alpha, ru) == u
    assert pair(ru, rv) == pair(u, v)
    assert reflect(alpha, hyperplane_class()) == hyperplane_class()


def test_picard_lefschetz_words():
    assert picard_lefschetz_word([]).is_identity()
    assert picard_lefschetz_word([DELTA, DELTA]).is_identity()
    assert picard_lefschetz_word([A[0], A[3]] * 3).is_identity()
    assert picard_lefschetz_word([A[0], A[3]]).order == 3
    with pytest.raises(NotARoot):
        picard_lefschetz_word([DELTA, hyperplane_class()])


def test_picard_lefschetz_word_composition_order():
    # r_a o r_b applied to a root equals reflect(a, reflect(b, x))
    g = picard_lefschetz_word([A[0], A[3]])
    for i, x in enumerate(ROOTS):
        assert ROOTS[g.perm[i]] == reflect(A[0], reflect(A[3], x))


@settings(max_examples=50)
@given(st.lists(root_idx, max_size=12))
def test_words_are_isometries_fixing_h(word):
    g = picard_lefschetz_word([ROOTS[i] for i in word])
    M = g.matrix
    J = np.diag([1, -1, -1, -1, -1, -1, -1])
    Mn = np.array(M)
    assert (Mn.T @ J @ Mn == J).all()
    assert g.apply(hyperplane_class()) == hyperplane_class()
    for i, r in enumerate(ROOTS):
        assert g.apply(r) == ROOTS[g.perm[i]]
    assert (g * g.inverse()).is_identity()
    assert WeylElement.from_matrix(M) == g


def test_identity_is_only_trivial_element():
    assert WeylElement.identity().matrix == tuple(
        tuple(int(i == j) for j in range(7)) for i in range(7)
    )
    G = weyl_e6().elements
    ident = np.arange(72, dtype=G.dtype)
    assert int((G == ident).all(axis=1).sum()) == 1


def test_group_orders():
    assert weyl_e6().order == GOLDEN_W_E6_ORDER
    assert len(oracles.close_on_lines(A)) == GOLDEN_W_E6_ORDER
    assert generate_group([DELTA]).order == 2
    assert generate_group([A[0], A[3]]).order == 6
    assert generate_group([]).order == 1


def test_group_closed_and_starts_with_identity():
    G = generate_group([A[0], A[3], A[4]])
    assert G.order == 24
    rows = {r.tobytes() for r in G.elements}
    for x in G.elements:
        for y in G.elements:
            assert x[y].tobytes() in rows
    assert (G.elements[0] == np.arange(72)).all()
    assert WeylElement.identity() in G


@pytest.mark.parametrize("label", TABLE_LABELS)
def test_subgroup_order_product_formula(label):
    cfg = parse_config(label)
    gens = realize(cfg)
    order = generate_group(gens).order
    assert order == cfg.weyl_order()
    if cfg.rank < 6:
        assert order == len(oracles.close_on_lines(gens))


def test_orbits_examples():
    assert orbits([]) == [(i,) for i in range(72)]
    blocks = orbits([DELTA])
    assert len(blocks) == 51
    sizes = sorted(len(b) for b in blocks)
    assert sizes.count(1) == 30 and sizes.count(2) == 21
    assert orbits(A) == [tuple(range(72))]


@pytest.mark.parametrize("label", TABLE_LABELS)
def test_orbits_match_group_action(label):
    gens = realize(label)
    blocks = orbits(gens)
    assert sum(len(b) for b in blocks) == 72
    assert [b[0] for b in blocks] == sorted(b[0] for b in blocks)
    G = generate_group(gens).elements
    via_group = sorted({tuple(sorted(set(int(x) for x in G[:, i]))) for i in range(72)})
    assert sorted(blocks) == via_group
    assert len(blocks) == oracles.orbit_count_on_roots(gens)


def test_close_subsystem_examples():
    assert set(close_subsystem([DELTA]).roots) == {DELTA, neg(DELTA)}
    assert len(close_subsystem([A[0], A[3]])) == 6
    assert len(close_subsystem(A)) == 72


@pytest.mark.parametrize("label", TABLE_LABELS)
def test_close_subsystem_sizes(label):
    cfg = parse_config(label)
    sub = close_subsystem(realize(cfg))
    assert len(sub) == cfg.root_count()
    idx = set(sub.indices)
    for r in sub.roots:
        assert neg(r) in sub
        for s in sub.roots:
            assert ROOTS.index[reflect(r, s)] in idx
    assert sub.label == cfg


def test_simple_system_examples():
    assert simple_system([DELTA, neg(DELTA)]) == [DELTA if height(DELTA) > 0 else neg(DELTA)]
    s = simple_system(close_subsystem([A[0], A[3]]).roots)
    assert len(s) == 2 and pair(s[0], s[1]) == 1
    full = simple_system(ROOTS.roots)
    assert len(full) == 6
    gram = np.array([[pair(a, b) for b in full] for a in full])
    want = np.array(parse_config("E6").gram())
    g1 = nx.from_numpy_array((gram == 1).astype(int))
    g2 = nx.from_numpy_array((want == 1).astype(int))
    assert nx.is_isomorphic(g1, g2)
    with pytest.raises(NotClosed):
        simple_system([A[0], A[3]])


def test_simple_system_coefficients_sign_coherent():
    # every root is an integer combination of the simple roots, all >= 0 or all <= 0
    import sympy

    full = simple_system(ROOTS.roots)
    B = sympy.Matrix([list(s) for s in full]).T
    for r in ROOTS:
        c, _ = B.gauss_jordan_solve(sympy.Matrix(r))
        assert all(x.is_integer for x in c)
        assert all(x >= 0 for x in c) or all(x <= 0 for x in c)


def test_positivity_functional_never_vanishes():
    assert all(height(r) != 0 for r in ROOTS)


@pytest.mark.parametrize(
    "roots, label",
    [
        ([DELTA], "A1"),
        (A, "E6"),
        ([(0, 1, -1, 0, 0, 0, 0), (0, 0, 0, 1, -1, 0, 0)], "2A1"),
        ([A[0], A[3]], "A2"),
        ([A[1], A[2], A[3], A[0]], "A4"),
        ([A[0], A[2], A[3], A[4]], "D4"),
        ([], "∅"),
    ],
)
def test_classify(roots, label):
    assert str(classify(roots)) == label


def test_realize_examples():
    assert realize("E6") == A
    assert realize("∅") == []
    with pytest.raises(NotEmbeddable):
        realize("A2+A3")
    with pytest.raises(RankTooLarge):
        realize("4A2")


@pytest.mark.parametrize("label", ["5A1", "A6", "D6", "A1+D5", "2A3", "A2+D4"])
def test_realize_not_embeddable(label):
    with pytest.raises(NotEmbeddable):
        realize(label)


@pytest.mark.parametrize("label", TABLE_LABELS)
def test_realize_round_trip_and_determinism(label):
    cfg = parse_config(label)
    gens = realize(cfg)
    assert classify(gens) == cfg
    assert realize(cfg) == gens
    G = [[pair(a, b) for b in gens] for a in gens]
    assert G == cfg.gram() or cfg == parse_config("E6")


@pytest.mark.parametrize("label", TABLE_LABELS)
def test_orbit_count_invariant_under_random_realizations(label):
    base = len(orbits(realize(label)))
    rng = np.random.default_rng(zlib.crc32(label.encode()))
    seen = set()
    for _ in range(20):
        gens = realize(label, rng=rng)
        assert classify(gens) == parse_config(label)
        assert len(orbits(gens)) == base
        seen.add(tuple(sorted(gens)))
    if label not in ("∅",):
        assert len(seen) > 1


def test_orbit_max_examples():
    assert orbit_max([DELTA, neg(DELTA)], [DELTA]) == [DELTA]
    a2 = close_subsystem([A[0], A[3]])
    top = orbit_max(a2.roots, a2.simple)
    assert top == [tuple(x + y for x, y in zip(*a2.simple))]
    fixed = (0, 1, -1, 0, 0, 0, 0)
    assert orbit_max([fixed], [DELTA]) == [fixed]
    with pytest.raises(NotAnOrbit):
        orbit_max([DELTA, neg(DELTA), fixed], [DELTA])
    with pytest.raises(NotSimpleSystem):
        orbit_max([DELTA], [DELTA, neg(DELTA)])


@pytest.mark.parametrize("label", TABLE_LABELS[1:])
def test_orbit_max_gives_highest_root_per_component(label):
    sub = close_subsystem(realize(label))
    inside = set(sub.indices)
    for block in orbits(sub.simple):
        if not inside.issuperset(block):
            continue
        members = [ROOTS[i] for i in block]
        top = orbit_max(members, sub.simple)
        assert len(top) == 1
        assert top[0] == max(members, key=height)
