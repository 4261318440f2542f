"""Reflections, Weyl (sub)groups acting on the 72 roots, and ADE sub-root systems.

Group elements are permutations of the canonical root order produced by
:func:`cubic_atlas.lattice.enumerate_roots`.  Composition of permutations is
the hot path, so whole groups are held as ``uint8`` arrays of shape
``(order, 72)``; the 7x7 lattice matrix of an element is rebuilt on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .config import Factor, SubsystemConfig, parse_config
from .errors import (
    NotAnOrbit,
    NotClosed,
    NotEmbeddable,
    NotIsometry,
    NotSimpleSystem,
    RankTooLarge,
    UnrecognizedDiagram,
)
from .lattice import (
    LatticeVector,
    Root,
    check_root,
    enumerate_roots,
    hyperplane_class,
    pair,
    rational_inverse,
    scale,
    add,
    simple_roots,
    sub,
)

NROOTS = 72
J = tuple(1 if i == 0 else -1 for i in range(7))  # diagonal of the Gram matrix


def reflect(alpha: Sequence[int], beta: Sequence[int]) -> LatticeVector:
    """Picard-Lefschetz reflection r_alpha(beta) = beta + (beta, alpha) alpha."""
    alpha = check_root(alpha)
    return add(beta, scale(pair(beta, alpha), alpha))


@lru_cache(maxsize=None)
def gram_table() -> np.ndarray:
    """72x72 matrix of pairings between roots in canonical order."""
    R = np.array(enumerate_roots().roots, dtype=np.int64)
    return (R * np.array(J)) @ R.T


@lru_cache(maxsize=None)
def reflection_table() -> np.ndarray:
    """``table[a, i]`` is the index of r_{root a}(root i)."""
    rs = enumerate_roots()
    table = np.empty((NROOTS, NROOTS), dtype=np.uint8)
    for a, alpha in enumerate(rs):
        for i, beta in enumerate(rs):
            table[a, i] = rs.index[add(beta, scale(pair(beta, alpha), alpha))]
    return table


def _indices(roots: Iterable[Sequence[int]]) -> list[int]:
    rs = enumerate_roots()
    out = []
    for r in roots:
        r = check_root(r)
        out.append(rs.index[r])
    return out


# -- positivity --------------------------------------------------------------

WEIGHT_BASE = 100
WEIGHTS = tuple(WEIGHT_BASE ** (6 - i) for i in range(7))


def height(v: Sequence[int]) -> int:
    """Generic integer functional used to split roots into positive/negative."""
    return sum(w * c for w, c in zip(WEIGHTS, v))


def _check_functional() -> None:
    if any(height(r) == 0 for r in enumerate_roots()):
        raise AssertionError("positivity functional vanishes on a root")


_check_functional()


# -- group elements ----------------------------------------------------------


@lru_cache(maxsize=None)
def _basis_inverse() -> list[list[Fraction]]:
    # columns: alpha_1..alpha_6, h
    cols = simple_roots() + [hyperplane_class()]
    B = [[cols[j][i] for j in range(7)] for i in range(7)]
    return rational_inverse(B)


@dataclass(frozen=True)
class WeylElement:
    """An isometry of I^{1,6} fixing h, stored as a permutation of the 72 roots.

    ``perm[i] = j`` means root i is sent to root j.
    """

    perm: tuple[int, ...]

    @classmethod
    def identity(cls) -> "WeylElement":
        return cls(tuple(range(NROOTS)))

    @classmethod
    def reflection(cls, alpha: Sequence[int]) -> "WeylElement":
        (a,) = _indices([alpha])
        return cls(tuple(int(x) for x in reflection_table()[a]))

    @classmethod
    def from_array(cls, arr) -> "WeylElement":
        return cls(tuple(int(x) for x in arr))

    @classmethod
    def from_matrix(cls, M: Sequence[Sequence[int]]) -> "WeylElement":
        """Restrict a lattice isometry fixing h to the roots."""
        M = [list(row) for row in M]
        if not is_isometry_fixing_h(M):
            raise NotIsometry("matrix does not preserve the pairing and fix h")
        rs = enumerate_roots()
        return cls(tuple(rs.index[_apply(M, r)] for r in rs))

    def __post_init__(self):
        if sorted(self.perm) != list(range(NROOTS)):
            raise ValueError("perm is not a permutation of 0..71")

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """Composition self after other."""
        return WeylElement(tuple(self.perm[i] for i in other.perm))

    def inverse(self) -> "WeylElement":
        inv = [0] * NROOTS
        for i, j in enumerate(self.perm):
            inv[j] = i
        return WeylElement(tuple(inv))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(NROOTS))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * NROOTS
        out = []
        for start in range(NROOTS):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.perm[i]
            out.append(tuple(cyc))
        return out

    @property
    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.perm) if i == j]

    def cycle_notation(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cyc)

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """The unique 7x7 integer matrix acting on coordinates.

        Solved from the images of the simple roots together with h; roots span
        h-perp, so this is determined by the permutation.
        """
        rs = enumerate_roots()
        images = [rs[self.perm[rs.index[a]]] for a in simple_roots()] + [hyperplane_class()]
        Bp = [[images[j][i] for j in range(7)] for i in range(7)]
        Binv = _basis_inverse()
        M = []
        for i in range(7):
            row = []
            for k in range(7):
                x = sum(Bp[i][j] * Binv[j][k] for j in range(7))
                if x.denominator != 1:
                    raise NotIsometry("permutation does not come from an integral isometry")
                row.append(int(x))
            M.append(tuple(row))
        M = tuple(M)
        if not is_isometry_fixing_h(M):
            raise NotIsometry("reconstructed matrix is not an isometry fixing h")
        # the permutation must be the restriction of M
        for i, r in enumerate(rs):
            if _apply(M, r) != rs[self.perm[i]]:
                raise NotIsometry("permutation is not induced by a lattice map")
        return M

    def apply(self, v: Sequence[int]) -> LatticeVector:
        return _apply(self.matrix, v)


def _apply(M: Sequence[Sequence[int]], v: Sequence[int]) -> LatticeVector:
    return tuple(sum(M[i][k] * v[k] for k in range(7)) for i in range(7))


def is_isometry_fixing_h(M: Sequence[Sequence[int]]) -> bool:
    cols = [tuple(M[i][k] for i in range(7)) for k in range(7)]
    for a in range(7):
        for b in range(7):
            if pair(cols[a], cols[b]) != (J[a] if a == b else 0):
                return False
    return _apply(M, hyperplane_class()) == hyperplane_class()


def picard_lefschetz_word(deltas: Sequence[Sequence[int]]) -> WeylElement:
    """r_{d1} o r_{d2} o ... o r_{dk}, the monodromy of a loop word."""
    idx = _indices(deltas)
    table = reflection_table()
    p = np.arange(NROOTS, dtype=np.uint8)
    for a in idx:
        p = p[table[a]]
    return WeylElement.from_array(p)


# -- groups ------------------------------------------------------------------


@dataclass(frozen=True)
class ReflectionGroup:
    """A reflection subgroup materialized as an ``(order, 72)`` permutation array.

    Rows appear in breadth-first discovery order, starting with the identity.
    """

    generators: tuple[Root, ...]
    elements: np.ndarray = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return int(self.elements.shape[0])

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[WeylElement]:
        for row in self.elements:
            yield WeylElement.from_array(row)

    @cached_property
    def _keys(self) -> frozenset[bytes]:
        return frozenset(row.tobytes() for row in self.elements)

    def __contains__(self, g: object) -> bool:
        if not isinstance(g, WeylElement):
            return False
        return np.array(g.perm, dtype=np.uint8).tobytes() in self._keys

    def to_json(self) -> dict:
        return {"generators": [list(g) for g in self.generators], "order": self.order}


def generate_group(generators: Sequence[Sequence[int]]) -> ReflectionGroup:
    """Breadth-first closure of the reflections in ``generators``."""
    idx = _indices(generators)
    gens = tuple(enumerate_roots()[a] for a in idx)
    table = reflection_table()
    # dedupe generator reflections but keep first-seen order
    gen_perms = []
    for a in dict.fromkeys(idx):
        gen_perms.append(table[a])
    identity = np.arange(NROOTS, dtype=np.uint8)
    seen = {identity.tobytes()}
    found = [identity[None, :]]
    frontier = identity[None, :]
    while frontier.shape[0] and gen_perms:
        # new[f, g] = r_g o frontier[f]
        cand = np.stack([g[frontier] for g in gen_perms], axis=1).reshape(-1, NROOTS)
        fresh = []
        for row in cand:
            key = row.tobytes()
            if key not in seen:
                seen.add(key)
                fresh.append(row)
        frontier = np.array(fresh, dtype=np.uint8).reshape(-1, NROOTS)
        if frontier.shape[0]:
            found.append(frontier)
    return ReflectionGroup(gens, np.concatenate(found, axis=0))


@lru_cache(maxsize=None)
def weyl_e6() -> ReflectionGroup:
    """W(E6), generated by the six simple reflections."""
    return generate_group(simple_roots())


def orbit_partition(perms: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Orbits of the group generated by index permutations of the 72 roots.

    Blocks are sorted internally and ordered by their least element.
    """
    src, dst = [], []
    for p in perms:
        src.extend(range(NROOTS))
        dst.extend(int(x) for x in p)
    graph = coo_matrix(
        (np.ones(len(src), dtype=np.int8), (src, dst)), shape=(NROOTS, NROOTS)
    )
    _, labels = connected_components(graph, directed=True, connection="weak")
    blocks: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        blocks.setdefault(int(lab), []).append(i)
    return sorted((tuple(b) for b in blocks.values()), key=lambda b: b[0])


def orbits(generators: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Orbits of the reflection group on root indices, without building the group."""
    table = reflection_table()
    return orbit_partition([table[a] for a in _indices(generators)])


# -- sub-root systems --------------------------------------------------------


@dataclass(frozen=True)
class ClosedSubsystem:
    roots: tuple[Root, ...]
    simple: tuple[Root, ...]
    label: SubsystemConfig

    @property
    def indices(self) -> tuple[int, ...]:
        rs = enumerate_roots()
        return tuple(rs.index[r] for r in self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, v: object) -> bool:
        return tuple(v) in set(self.roots)


def _close_indices(idx: Iterable[int]) -> list[int]:
    table = reflection_table()
    members = set(idx)
    queue = list(members)
    while queue:
        b = queue.pop()
        for c in list(members):
            for new in (int(table[b, c]), int(table[c, b])):
                if new not in members:
                    members.add(new)
                    queue.append(new)
    return sorted(members)


def close_subsystem(S: Sequence[Sequence[int]]) -> ClosedSubsystem:
    """Smallest reflection-closed set of roots containing S."""
    members = _close_indices(_indices(S))
    rs = enumerate_roots()
    roots = tuple(rs[i] for i in members)
    simple = simple_system(roots)
    return ClosedSubsystem(roots, tuple(simple), dynkin_label(simple))


def is_reflection_closed(roots: Iterable[Sequence[int]]) -> bool:
    idx = set(_indices(roots))
    table = reflection_table()
    return all(int(table[b, c]) in idx for b in idx for c in idx)


def simple_system(roots: Sequence[Sequence[int]]) -> list[Root]:
    """Simple roots of a closed subsystem for the fixed positivity functional.

    Returned in canonical root order.
    """
    roots = [check_root(r) for r in roots]
    if not is_reflection_closed(roots):
        raise NotClosed("root set is not closed under its own reflections")
    pos = [r for r in roots if height(r) > 0]
    sums = {add(a, b) for a in pos for b in pos}
    simple = [r for r in pos if r not in sums]
    rs = enumerate_roots()
    return sorted(simple, key=lambda r: rs.index[r])


def _components(adj: np.ndarray) -> list[list[int]]:
    n = adj.shape[0]
    if n == 0:
        return []
    _, labels = connected_components(adj, directed=False)
    comps: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        comps.setdefault(int(lab), []).append(i)
    return sorted(comps.values(), key=lambda c: c[0])


def recognize_component(adj: np.ndarray, nodes: Sequence[int]) -> Factor:
    """Name a connected simply-laced Dynkin diagram that can sit inside E6."""
    n = len(nodes)
    sub_adj = adj[np.ix_(nodes, nodes)]
    deg = sub_adj.sum(axis=1)
    if int(sub_adj.sum()) // 2 != n - 1:
        raise UnrecognizedDiagram(f"diagram on {n} nodes is not a tree")
    branch = [i for i in range(n) if deg[i] >= 3]
    if not branch:
        if n and deg.max(initial=0) > 2:  # pragma: no cover - excluded by tree + no branch
            raise UnrecognizedDiagram("not a path")
        return Factor("A", n)
    if len(branch) > 1 or deg[branch[0]] > 3:
        raise UnrecognizedDiagram(f"diagram on {n} nodes has degrees {sorted(deg)}")
    # arm lengths from the branch node
    b = branch[0]
    arms = []
    for start in np.flatnonzero(sub_adj[b]):
        length, prev, cur = 1, b, int(start)
        while True:
            nxt = [int(x) for x in np.flatnonzero(sub_adj[cur]) if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms == [1, 2, 2]:
        return Factor("E", 6)
    if arms[:2] == [1, 1]:
        return Factor("D", n)
    raise UnrecognizedDiagram(f"branch arms {arms} do not occur inside E6")


def dynkin_label(simple: Sequence[Sequence[int]]) -> SubsystemConfig:
    """ADE label read off the Dynkin graph of a simple system."""
    n = len(simple)
    G = np.array([[pair(a, b) for b in simple] for a in simple], dtype=np.int64).reshape(n, n)
    if n and (np.diag(G) != -2).any():
        raise UnrecognizedDiagram("simple roots must have square -2")
    off = G - np.diag(np.diag(G))
    if not np.isin(off, (0, 1)).all():
        raise UnrecognizedDiagram("simple roots pair outside {0, 1}")
    adj = off.astype(np.int64)
    return SubsystemConfig.from_factors(
        recognize_component(adj, comp) for comp in _components(adj)
    )


def classify(S: Sequence[Sequence[int]]) -> SubsystemConfig:
    """ADE type of the sub-root system generated by S."""
    return close_subsystem(S).label


def realize(config: str | SubsystemConfig, rng: np.random.Generator | None = None) -> list[Root]:
    """Simple roots of a sub-root system of the given type.

    Candidate tuples are tried in canonical root order (or in a shuffled order
    when ``rng`` is given) with pruning on the target Gram matrix; the first
    tuple whose closure classifies as ``config`` is returned.
    """
    config = parse_config(config)
    if config.rank > 6:
        raise RankTooLarge(f"{config} has rank {config.rank} > 6")
    if not config.factors:
        return []
    if config == parse_config("E6") and rng is None:
        return simple_roots()
    target = config.gram()
    n = len(target)
    G = gram_table()
    # masks[v, k] = roots pairing to (k - 2) with root v
    masks = np.stack([G == k for k in range(-2, 3)], axis=1)
    order = np.arange(NROOTS) if rng is None else rng.permutation(NROOTS)
    rs = enumerate_roots()
    chosen: list[int] = []

    def extend() -> list[int] | None:
        t = len(chosen)
        if t == n:
            roots = [rs[i] for i in chosen]
            if classify(roots) == config:
                return list(chosen)
            return None
        ok = np.ones(NROOTS, dtype=bool)
        for s, v in enumerate(chosen):
            ok &= masks[v, target[s][t] + 2]
        for c in order[ok[order]]:
            chosen.append(int(c))
            res = extend()
            if res is not None:
                return res
            chosen.pop()
        return None

    found = extend()
    if found is None:
        raise NotEmbeddable(f"exhaustive search found no sub-root system of type {config} in E6")
    return [rs[i] for i in found]


# -- maximal roots of orbits -------------------------------------------------


def _simple_coefficients(v: Sequence[int], simple: Sequence[Root], ginv) -> list[Fraction] | None:
    rhs = [pair(v, s) for s in simple]
    coeffs = [sum(ginv[i][j] * rhs[j] for j in range(len(simple))) for i in range(len(simple))]
    recon = [sum(c * s[k] for c, s in zip(coeffs, simple)) for k in range(7)]
    if any(x != y for x, y in zip(recon, v)):
        return None
    return coeffs


def orbit_max(orbit: Iterable[Sequence[int]], simple: Sequence[Sequence[int]]) -> list[Root]:
    """Maximal elements of a W(R_e)-orbit under the dominance order of ``simple``.

    beta >= gamma when beta - gamma is a nonnegative integer combination of the
    simple roots.
    """
    simple = [check_root(s) for s in simple]
    try:
        dynkin_label(simple)
        ginv = rational_inverse([[pair(a, b) for b in simple] for a in simple]) if simple else []
    except (UnrecognizedDiagram, ValueError):
        raise NotSimpleSystem("input roots are not a simple system") from None
    members = sorted(set(_indices(orbit)))
    if not members:
        raise NotAnOrbit("empty orbit")
    blocks = orbits(simple)
    if tuple(members) not in blocks:
        raise NotAnOrbit("root set is not a single orbit of the simple reflections")
    rs = enumerate_roots()
    vecs = [rs[i] for i in members]

    def dominates(b: Root, c: Root) -> bool:
        coeffs = _simple_coefficients(sub(b, c), simple, ginv)
        return coeffs is not None and all(x.denominator == 1 and x >= 0 for x in coeffs)

    return [b for b in vecs if not any(c != b and dominates(c, b) for c in vecs)]
