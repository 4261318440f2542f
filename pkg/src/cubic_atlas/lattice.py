"""The odd unimodular lattice I^{1,6} carrying the Picard group of a cubic surface.

Vectors are plain tuples of 7 Python ints (coefficients of e0, ..., e6).
Nothing in this module touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import NotARoot

RANK = 7
_J = (1, -1, -1, -1, -1, -1, -1)

LatticeVector = tuple[int, ...]
Root = LatticeVector


def vector(coords: Iterable[int]) -> LatticeVector:
    v = tuple(int(c) for c in coords)
    if len(v) != RANK:
        raise ValueError(f"expected {RANK} coordinates, got {len(v)}")
    return v


def basis(i: int) -> LatticeVector:
    """The basis vector e_i, 0 <= i <= 6."""
    return tuple(1 if k == i else 0 for k in range(RANK))


def pair(u: Sequence[int], v: Sequence[int]) -> int:
    """Intersection pairing of signature (1, 6): u0*v0 - sum(u_i*v_i)."""
    return u[0] * v[0] - sum(u[i] * v[i] for i in range(1, RANK))


def add(u: Sequence[int], v: Sequence[int]) -> LatticeVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> LatticeVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(k: int, v: Sequence[int]) -> LatticeVector:
    return tuple(k * a for a in v)


def neg(v: Sequence[int]) -> LatticeVector:
    return tuple(-a for a in v)


def gram_matrix(vectors: Sequence[Sequence[int]]) -> list[list[int]]:
    return [[pair(u, v) for v in vectors] for u in vectors]


def hyperplane_class() -> LatticeVector:
    """h = 3e0 - e1 - ... - e6, the anticanonical class."""
    return (3, -1, -1, -1, -1, -1, -1)


def is_root(v: Sequence[int]) -> bool:
    return pair(v, v) == -2 and pair(v, hyperplane_class()) == 0


def check_root(v: Sequence[int]) -> Root:
    """Return ``v`` as a tuple, raising NotARoot with the offending pairings."""
    v = vector(v)
    if not is_root(v):
        raise NotARoot(
            f"{v} is not a root: pair(v,v)={pair(v, v)} (need -2), "
            f"pair(v,h)={pair(v, hyperplane_class())} (need 0)"
        )
    return v


def simple_roots() -> list[Root]:
    """alpha_1 = e0-e1-e2-e3, alpha_i = e_{i-1} - e_i for i = 2..6."""
    out = [(1, -1, -1, -1, 0, 0, 0)]
    for i in range(2, 7):
        out.append(sub(basis(i - 1), basis(i)))
    return out


@dataclass(frozen=True)
class RootSystem72:
    """The 72 roots in lexicographic order, with a vector -> position index."""

    roots: tuple[Root, ...]
    index: dict[Root, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i: int) -> Root:
        return self.roots[i]

    def __contains__(self, v: object) -> bool:
        return v in self.index

    def position(self, v: Sequence[int]) -> int:
        try:
            return self.index[tuple(v)]
        except KeyError:
            raise NotARoot(f"{tuple(v)} is not one of the 72 roots") from None


# If v is a root then sum(c_i) = -3*c0 and sum(c_i^2) = c0^2 + 2.  Cauchy-Schwarz
# over the six c_i gives 9*c0^2 <= 6*(c0^2 + 2), i.e. c0^2 <= 4, so |c0| <= 2,
# and then c_i^2 <= c0^2 + 2 <= 6 forces |c_i| <= 2.  The window [-3, 3]^7
# therefore contains every root with room to spare.
SEARCH_BOUND = 3


@lru_cache(maxsize=None)
def enumerate_roots() -> RootSystem72:
    """Exhaustive search of the bounded window for all roots."""
    window = np.arange(-SEARCH_BOUND, SEARCH_BOUND + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([window] * RANK), indexing="ij"), axis=-1).reshape(-1, RANK)
    square = grid[:, 0] ** 2 - (grid[:, 1:] ** 2).sum(axis=1)
    h = np.array(hyperplane_class(), dtype=np.int64) * np.array(_J, dtype=np.int64)
    degree = grid @ h
    hits = grid[(square == -2) & (degree == 0)]
    found = sorted(tuple(int(x) for x in row) for row in hits)
    if len(found) != 72:
        raise AssertionError(f"root search found {len(found)} vectors, expected 72")
    return RootSystem72(tuple(found), {v: i for i, v in enumerate(found)})


def lattice_rank(vectors: Iterable[Sequence[int]]) -> int:
    """Rank over Q of a set of integer vectors (fraction-free elimination)."""
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                f = rows[r][col]
                rows[r] = [p[col] * x - f * y for x, y in zip(rows[r], p)]
        rank += 1
    return rank


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (Bareiss)."""
    m = [list(row) for row in matrix]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def rational_inverse(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q; raises ValueError on a singular matrix."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
