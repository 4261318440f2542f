"""Backtracking isomorphism search for small regular graphs."""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .errors import NoIsomorphism

Adjacency = Sequence[Sequence[int]]


def _neighbours(adj: Adjacency) -> list[frozenset[int]]:
    return [frozenset(j for j, x in enumerate(row) if x) for row in adj]


def _profile(nbrs: list[frozenset[int]], v: int) -> tuple:
    # degree plus the sorted common-neighbour counts with each neighbour
    return (len(nbrs[v]), tuple(sorted(len(nbrs[v] & nbrs[u]) for u in nbrs[v])))


def find_isomorphism(A: Adjacency, B: Adjacency) -> list[int]:
    """Return ``phi`` with ``A[i][j] == B[phi[i]][phi[j]]`` for all i, j.

    Vertices of A are placed in breadth-first order; a candidate image must
    share the vertex profile (degree and common-neighbour counts) and agree
    on adjacency with everything already placed.  The first map found wins.
    """
    n = len(A)
    if n != len(B):
        raise NoIsomorphism("graphs have different sizes")
    na, nb = _neighbours(A), _neighbours(B)
    pa = [_profile(na, v) for v in range(n)]
    pb = [_profile(nb, v) for v in range(n)]
    if sorted(pa) != sorted(pb):
        raise NoIsomorphism("vertex profiles differ")

    order: list[int] = []
    seen = set()
    for root in range(n):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in sorted(na[v]):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)

    phi: dict[int, int] = {}
    used: set[int] = set()

    def search(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if w in used or pb[w] != pa[v]:
                continue
            if any((u in na[v]) != (phi[u] in nb[w]) for u in phi):
                continue
            phi[v] = w
            used.add(w)
            if search(k + 1):
                return True
            del phi[v]
            used.discard(w)
        return False

    if not search(0):
        raise NoIsomorphism("exhaustive backtracking found no isomorphism")
    return [phi[i] for i in range(n)]
