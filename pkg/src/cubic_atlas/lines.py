"""The 27 lines on a smooth cubic surface as divisor classes in I^{1,6}."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotARoot, NotSkew, SameLine
from .lattice import LatticeVector, Root, basis, check_root, pair, sub


@dataclass(frozen=True)
class Line:
    label: str
    cls: LatticeVector

    def __str__(self) -> str:
        return self.label


def _e(i: int) -> LatticeVector:
    return basis(i)


@lru_cache(maxsize=None)
def enumerate_lines() -> tuple[Line, ...]:
    """E_1..E_6, then F_ij in lexicographic order, then G_1..G_6."""
    out = [Line(f"E_{i}", _e(i)) for i in range(1, 7)]
    for i, j in itertools.combinations(range(1, 7), 2):
        out.append(Line(f"F_{i}{j}", sub(sub(_e(0), _e(i)), _e(j))))
    for i in range(1, 7):
        c = [2] + [0 if k == i else -1 for k in range(1, 7)]
        out.append(Line(f"G_{i}", tuple(c)))
    return tuple(out)


@lru_cache(maxsize=None)
def _line_index() -> dict[str, int]:
    return {L.label: k for k, L in enumerate(enumerate_lines())}


def line(label: str) -> Line:
    """Look up a line by label, e.g. ``line("F_12")``."""
    try:
        return enumerate_lines()[_line_index()[label]]
    except KeyError:
        raise KeyError(f"unknown line label {label!r}") from None


def line_position(L: Line) -> int:
    return _line_index()[L.label]


def incidence(L: Line, M: Line) -> int:
    """Intersection number of two distinct lines: 1 if they meet, 0 if skew."""
    if L == M:
        raise SameLine(f"{L} paired with itself")
    return pair(L.cls, M.cls)


@lru_cache(maxsize=None)
def incidence_matrix() -> tuple[tuple[int, ...], ...]:
    lines = enumerate_lines()
    return tuple(
        tuple(0 if a == b else incidence(a, b) for b in lines) for a in lines
    )


@lru_cache(maxsize=None)
def skew_pairs() -> tuple[tuple[Line, Line], ...]:
    """All 432 ordered pairs of disjoint lines."""
    lines = enumerate_lines()
    return tuple(
        (a, b) for a in lines for b in lines if a != b and incidence(a, b) == 0
    )


def root_from_pair(L1: Line, L2: Line) -> Root:
    """[L1] - [L2] for skew lines; always a root."""
    if incidence(L1, L2) != 0:
        raise NotSkew(f"{L1} and {L2} meet")
    return sub(L1.cls, L2.cls)


@lru_cache(maxsize=None)
def _decompositions() -> dict[Root, tuple[tuple[Line, Line], ...]]:
    table: dict[Root, list[tuple[Line, Line]]] = {}
    for a, b in skew_pairs():
        table.setdefault(sub(a.cls, b.cls), []).append((a, b))
    return {
        r: tuple(sorted(ps, key=lambda p: (p[0].label, p[1].label)))
        for r, ps in table.items()
    }


def decompose_root(alpha) -> tuple[tuple[Line, Line], ...]:
    """Every ordered skew pair (L1, L2) with [L1] - [L2] = alpha.

    Computed by filtering the 432 skew pairs; the result is ordered by
    (L1 label, L2 label).
    """
    alpha = check_root(alpha)
    try:
        return _decompositions()[alpha]
    except KeyError:  # pragma: no cover - every root is hit by some skew pair
        raise NotARoot(f"{alpha} has no decomposition") from None
