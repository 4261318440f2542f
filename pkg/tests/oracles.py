"""Independent reference computations used by the tests.

These never go through the 72-root permutation tables of cubic_atlas.weyl:
groups are closed as permutations of the 27 lines, with reflections applied
to line classes directly.
"""

from __future__ import annotations

import itertools
from collections import deque

import numpy as np

LINES_E = [tuple(1 if k == i else 0 for k in range(7)) for i in range(1, 7)]


def ip(u, v):
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def line_classes():
    out = list(LINES_E)
    for i, j in itertools.combinations(range(1, 7), 2):
        c = [1] + [0] * 6
        c[i] = c[j] = -1
        out.append(tuple(c))
    for i in range(1, 7):
        out.append(tuple([2] + [0 if k == i else -1 for k in range(1, 7)]))
    return out


def line_reflection(alpha, classes):
    index = {c: k for k, c in enumerate(classes)}
    img = []
    for c in classes:
        t = ip(c, alpha)
        img.append(index[tuple(x + t * a for x, a in zip(c, alpha))])
    return tuple(img)


def close_on_lines(generators):
    """All products of the line permutations induced by reflections in ``generators``."""
    classes = line_classes()
    gens = [line_reflection(a, classes) for a in generators]
    ident = tuple(range(27))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def orbit_count_on_roots(generators):
    """Orbits on roots through the line action: g(L1 - L2) = g(L1) - g(L2)."""
    classes = line_classes()
    group = close_on_lines(generators)
    skew = [(a, b) for a in range(27) for b in range(27) if a != b and ip(classes[a], classes[b]) == 0]
    root_of = {}
    for a, b in skew:
        root_of[(a, b)] = tuple(x - y for x, y in zip(classes[a], classes[b]))
    roots = sorted(set(root_of.values()))
    seen, count = set(), 0
    rep = {}
    for (a, b), r in root_of.items():
        rep.setdefault(r, (a, b))
    for r in roots:
        if r in seen:
            continue
        count += 1
        a, b = rep[r]
        for g in group:
            seen.add(tuple(x - y for x, y in zip(classes[g[a]], classes[g[b]])))
    return count


def brute_force_roots(bound=4):
    """Roots found by a vectorized scan of [-bound, bound]^7."""
    rng = np.arange(-bound, bound + 1, dtype=np.int16)
    grids = np.stack(np.meshgrid(*([rng] * 7), indexing="ij"), axis=-1).reshape(-1, 7)
    sq = grids[:, 0].astype(np.int32) ** 2 - (grids[:, 1:].astype(np.int32) ** 2).sum(axis=1)
    deg = 3 * grids[:, 0].astype(np.int32) + grids[:, 1:].sum(axis=1)
    hits = grids[(sq == -2) & (deg == 0)]
    return sorted(tuple(int(x) for x in row) for row in hits)
