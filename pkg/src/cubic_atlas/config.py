"""ADE configuration labels such as ``"2A1+A3"``.

Terms are ``k?TYPE`` joined by ``+``; ``"∅"``, ``"I"`` and ``""`` all name the
empty configuration.  Canonical order is family (A < D < E), then rank.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

from .errors import LabelError

_TERM = re.compile(r"^(\d*)([ADE])(\d+)$")
_FAMILY_ORDER = {"A": 0, "D": 1, "E": 2}
EMPTY_LABELS = frozenset({"∅", "I", ""})


@dataclass(frozen=True, order=True)
class Factor:
    family: str
    rank: int

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def sort_key(self) -> tuple[int, int]:
        return (_FAMILY_ORDER[self.family], self.rank)

    def weyl_order(self) -> int:
        n = self.rank
        if self.family == "A":
            return math.factorial(n + 1)
        if self.family == "D":
            return 2 ** (n - 1) * math.factorial(n)
        return {6: 51840, 7: 2903040, 8: 696729600}[n]

    def root_count(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * (n + 1)
        if self.family == "D":
            return 2 * n * (n - 1)
        return {6: 72, 7: 126, 8: 240}[n]

    def edges(self) -> list[tuple[int, int]]:
        """Dynkin edges, numbered so every node after the first touches an earlier one."""
        n = self.rank
        path = [(i, i + 1) for i in range(n - 1)]
        if self.family == "A":
            return path
        if self.family == "D":
            return path[: n - 2] + [(n - 3, n - 1)]
        # E_n: a path of n-1 nodes with the extra node hanging off the third one
        return path[: n - 2] + [(2, n - 1)]


def _check_factor(family: str, rank: int, text: str) -> Factor:
    if rank < 1:
        raise LabelError(f"rank must be positive in {text!r}")
    if family == "D" and rank < 4:
        raise LabelError(f"D{rank} is not a distinct type (use A/2A1) in {text!r}")
    if family == "E" and rank not in (6, 7, 8):
        raise LabelError(f"E{rank} is not a finite simply-laced type in {text!r}")
    return Factor(family, rank)


@dataclass(frozen=True)
class SubsystemConfig:
    """A multiset of irreducible ADE factors, stored in canonical order."""

    factors: tuple[Factor, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "SubsystemConfig":
        if isinstance(text, SubsystemConfig):
            return text
        label = text.strip().replace(" ", "")
        if label in EMPTY_LABELS:
            return cls(())
        factors: list[Factor] = []
        for term in label.split("+"):
            m = _TERM.match(term)
            if m is None:
                raise LabelError(f"cannot parse term {term!r} in label {text!r}")
            mult = int(m.group(1)) if m.group(1) else 1
            if mult < 1:
                raise LabelError(f"zero multiplicity in {text!r}")
            factors.extend([_check_factor(m.group(2), int(m.group(3)), text)] * mult)
        return cls.from_factors(factors)

    @classmethod
    def from_factors(cls, factors) -> "SubsystemConfig":
        return cls(tuple(sorted(factors, key=lambda f: f.sort_key)))

    def __str__(self) -> str:
        if not self.factors:
            return "∅"
        counts = Counter(self.factors)
        terms = []
        for f in sorted(counts, key=lambda f: f.sort_key):
            k = counts[f]
            terms.append(f"{k}{f}" if k > 1 else str(f))
        return "+".join(terms)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def weyl_order(self) -> int:
        return math.prod(f.weyl_order() for f in self.factors)

    def root_count(self) -> int:
        return sum(f.root_count() for f in self.factors)

    def gram(self) -> list[list[int]]:
        """Intersection-form Gram matrix of a simple system of this type.

        Diagonal -2, +1 on Dynkin edges, 0 elsewhere (block diagonal by factor).
        """
        n = self.rank
        g = [[0] * n for _ in range(n)]
        offset = 0
        for f in self.factors:
            for i in range(f.rank):
                g[offset + i][offset + i] = -2
            for i, j in f.edges():
                g[offset + i][offset + j] = g[offset + j][offset + i] = 1
            offset += f.rank
        return g


def parse_config(text: str | SubsystemConfig) -> SubsystemConfig:
    return SubsystemConfig.parse(text)
