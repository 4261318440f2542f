"""Monodromy-orbit counts for ADE degenerations and the Eckardt Z/3 action.

The number of limiting primitive vanishing cycles on a cubic surface with a
given ADE configuration equals the number of W(R_e)-orbits on the 72 roots,
where R_e is the sub-root system spanned by the effective roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .config import SubsystemConfig, parse_config
from .errors import NotIsometry
from .graphs import find_isomorphism
from .lattice import (
    Root,
    enumerate_roots,
    lattice_rank,
    pair,
    rational_inverse,
    simple_roots,
)
from .lines import enumerate_lines, incidence_matrix
from .weyl import (
    WeylElement,
    close_subsystem,
    is_isometry_fixing_h,
    orbit_partition,
    orbits,
    realize,
    weyl_e6,
)

# (label, Bruce-Wall type, published count), read down the columns of the
# published table.
PUBLISHED_TABLE1: tuple[tuple[str, str, int], ...] = (
    ("∅", "I", 72),
    ("A1", "II", 51),
    ("2A1", "IV", 36),
    ("A2", "III", 31),
    ("3A1", "VIII", 25),
    ("A1+A2", "VI", 22),
    ("A3", "V", 17),
    ("4A1", "XVI", 17),
    ("2A1+A2", "XIII", 15),
    ("A1+A3", "X", 12),
    ("2A2", "IX", 14),
    ("A4", "VII", 9),
    ("D4", "XII", 7),
    ("2A1+A3", "XVIII", 8),
    ("A1+2A2", "XVII", 9),
    ("A1+A4", "XIV", 6),
    ("A5", "XI", 5),
    ("D5", "XV", 3),
    ("A1+A5", "XIX", 3),
    ("3A2", "XXI", 5),
    ("E6", "XX", 1),
)

BRUCE_WALL_TYPE = {label: t for label, t, _ in PUBLISHED_TABLE1}


@dataclass(frozen=True)
class Table1Row:
    config: SubsystemConfig
    bruce_wall_type: str
    count: int

    def to_json(self) -> dict:
        return {"config": str(self.config), "type": self.bruce_wall_type, "count": self.count}


def orbit_count(config: str | SubsystemConfig) -> int:
    """Number of W(R_e)-orbits on the 72 roots for a realization of ``config``."""
    return len(orbits(realize(config)))


def table1() -> list[Table1Row]:
    """All 21 configurations with freshly computed orbit counts."""
    rows = []
    for label, bw, _ in PUBLISHED_TABLE1:
        cfg = parse_config(label)
        rows.append(Table1Row(cfg, bw, orbit_count(cfg)))
    return rows


def table1_diff(rows: Sequence[Table1Row] | None = None) -> list[tuple[str, int, int]]:
    """(label, published, computed) for every row that disagrees."""
    rows = table1() if rows is None else rows
    published = {parse_config(label): n for label, _, n in PUBLISHED_TABLE1}
    return [
        (str(r.config), published[r.config], r.count)
        for r in rows
        if published.get(r.config) != r.count
    ]


@dataclass(frozen=True)
class OrbitReport:
    config: SubsystemConfig
    realization: tuple[Root, ...]
    blocks: tuple[tuple[int, ...], ...]
    inside: int
    outside: int

    @property
    def count(self) -> int:
        return len(self.blocks)


def orbit_report(generators: Sequence[Sequence[int]]) -> OrbitReport:
    gens = [tuple(g) for g in generators]
    sub = close_subsystem(gens)
    blocks = orbits(gens)
    eff = set(sub.indices)
    inside = sum(1 for b in blocks if eff.issuperset(b))
    return OrbitReport(sub.label, tuple(gens), tuple(blocks), inside, len(blocks) - inside)


def effective_orbit_split(config: str | SubsystemConfig) -> tuple[int, int]:
    """(orbits contained in R_e, orbits meeting the complement)."""
    rep = orbit_report(realize(config))
    return rep.inside, rep.outside


# -- the A1 worked example ---------------------------------------------------

NODAL_CYCLE: Root = (2, -1, -1, -1, -1, -1, -1)


@dataclass(frozen=True)
class A1Breakdown:
    delta: Root
    classes: dict[str, tuple[Root, ...]]
    contributions: dict[str, int]
    orthogonal: tuple[Root, ...]
    total: int

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(v) for v in self.classes.values())


def a1_example_breakdown() -> A1Breakdown:
    """Split the 72 roots against delta = 2e0 - e1 - ... - e6 and count orbits per class.

    Classes: +-delta, +-(e0 - e_i - e_j - e_k), and e_i - e_j.
    """
    rs = enumerate_roots()
    delta = NODAL_CYCLE
    classes: dict[str, list[Root]] = {"nodal": [], "three_point": [], "difference": []}
    for r in rs:
        if abs(r[0]) == 2:
            classes["nodal"].append(r)
        elif abs(r[0]) == 1:
            classes["three_point"].append(r)
        else:
            classes["difference"].append(r)
    blocks = orbits([delta])
    contributions = {}
    for name, members in classes.items():
        idx = {rs.index[r] for r in members}
        contributions[name] = sum(1 for b in blocks if idx.issuperset(b))
    if sum(contributions.values()) != len(blocks):
        raise AssertionError("an orbit straddles two root classes")
    orth = tuple(r for r in rs if pair(r, delta) == 0)
    return A1Breakdown(
        delta,
        {k: tuple(v) for k, v in classes.items()},
        contributions,
        orth,
        len(blocks),
    )


# -- transitivity ------------------------------------------------------------


def transitivity_check() -> bool:
    """W(E6) is transitive on the roots and the roots span a rank-6 lattice."""
    return len(orbits(simple_roots())) == 1 and lattice_rank(enumerate_roots()) == 6


# -- Eckardt degeneration ----------------------------------------------------


def eckardt_search() -> list[WeylElement]:
    """All order-3 elements of W(E6) with no fixed root, in lexicographic order."""
    G = weyl_e6().elements
    G2 = np.take_along_axis(G, G.astype(np.intp), axis=1)
    G3 = np.take_along_axis(G, G2.astype(np.intp), axis=1)
    ident = np.arange(G.shape[1], dtype=G.dtype)
    mask = (G3 == ident).all(axis=1) & (G != ident).all(axis=1)
    hits = G[mask]
    hits = hits[np.lexsort(hits.T[::-1])]
    return [WeylElement.from_array(row) for row in hits]


def _flex_point(i: int) -> tuple[int, int]:
    # flex i (1..9) as a point of the affine plane over F_3
    return divmod(i - 1, 3)


def eckardt_adjacency(convention: str = "affine") -> tuple[tuple[int, ...], ...]:
    """Meeting relation on the lines L_ij (flex i = 1..9, sheet j = 1..3).

    Lines over the same flex always meet.  For lines over different flexes
    p, q the two conventions are:

    ``"affine"``  -- L_pj meets L_qk iff k - j = det(p, q) mod 3, with the
                     nine flexes forming the affine plane over F_3.
    ``"literal"`` -- L_pj meets L_qk iff j == k (same sheet).

    Both give a 10-regular graph invariant under the sheet shift; only the
    affine one has the incidence structure of the 27 lines (the literal one
    contains 9-cliques).
    """
    verts = [(i, j) for i in range(1, 10) for j in range(1, 4)]
    n = len(verts)
    A = [[0] * n for _ in range(n)]
    for a, (i, j) in enumerate(verts):
        for b, (k, l) in enumerate(verts):
            if a == b:
                continue
            if i == k:
                meet = True
            elif convention == "affine":
                p, q = _flex_point(i), _flex_point(k)
                meet = (l - j) % 3 == (p[0] * q[1] - p[1] * q[0]) % 3
            elif convention == "literal":
                meet = j == l
            else:
                raise ValueError(f"unknown convention {convention!r}")
            A[a][b] = int(meet)
    return tuple(tuple(r) for r in A)


@dataclass(frozen=True)
class EckardtModel:
    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    sheet_shift: tuple[int, ...]
    isomorphism: tuple[int, ...]
    line_permutation: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]
    induced: WeylElement
    transcript: tuple[str, ...] = field(default=(), compare=False)

    @property
    def orbit_blocks(self) -> list[tuple[int, ...]]:
        return orbit_partition([self.induced.perm])


def eckardt_line_model(convention: str = "affine") -> EckardtModel:
    """Transport the sheet shift of the L_ij model to a lattice isometry.

    Raises NoIsomorphism if the abstract adjacency is not the 27-line
    incidence graph, NotIsometry if the transported map fails to be one.
    """
    log: list[str] = []
    labels = tuple(f"L_{i}{j}" for i in range(1, 10) for j in range(1, 4))
    A = eckardt_adjacency(convention)
    degrees = {sum(row) for row in A}
    log.append(f"model degrees: {sorted(degrees)}")
    shift = tuple(3 * (a // 3) + (a % 3 + 1) % 3 for a in range(27))
    if any(A[a][b] != A[shift[a]][shift[b]] for a in range(27) for b in range(27)):
        raise NotIsometry("sheet shift does not preserve the model adjacency")
    log.append("sheet shift preserves adjacency")

    std = incidence_matrix()
    phi = find_isomorphism(A, std)
    log.append("isomorphism onto the 27-line incidence graph found")

    # sigma = phi o shift o phi^-1 on the standard lines
    phi_inv = [0] * 27
    for a, w in enumerate(phi):
        phi_inv[w] = a
    sigma = tuple(phi[shift[phi_inv[w]]] for w in range(27))

    lines = enumerate_lines()
    # E_1..E_6 and F_12 form a Z-basis of the lattice
    basis_idx = list(range(6)) + [6]
    B = [[lines[k].cls[i] for k in basis_idx] for i in range(7)]
    Bp = [[lines[sigma[k]].cls[i] for k in basis_idx] for i in range(7)]
    Binv = rational_inverse(B)
    M = []
    for i in range(7):
        row = []
        for c in range(7):
            x = sum(Bp[i][j] * Binv[j][c] for j in range(7))
            if x.denominator != 1:
                raise NotIsometry("transported map is not integral")
            row.append(int(x))
        M.append(tuple(row))
    M = tuple(M)
    for k, L in enumerate(lines):
        image = tuple(sum(M[i][c] * L.cls[c] for c in range(7)) for i in range(7))
        if image != lines[sigma[k]].cls:
            raise NotIsometry(f"lattice map disagrees with the line permutation on {L}")
    if not is_isometry_fixing_h(M):
        raise NotIsometry("transported map does not preserve the pairing and h")
    log.append("lattice map is an integral isometry fixing h")

    g = WeylElement.from_matrix(M)
    blocks = orbit_partition([g.perm])
    log.append(f"induced order {g.order}, fixed roots {len(g.fixed_points())}, orbits {len(blocks)}")
    return EckardtModel(labels, A, shift, tuple(phi), sigma, M, g, tuple(log))
