"""The invariant suite behind ``atlas check``.

Each check returns ``None`` on success or a short counterexample string.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import atlas, lattice, lines, weyl
from .config import parse_config
from .lattice import enumerate_roots, hyperplane_class, pair, simple_roots


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: str | None = None

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "counterexample": self.counterexample}


CHECKS: list[tuple[str, Callable[[], str | None]]] = []


def check(name: str):
    def deco(fn):
        CHECKS.append((name, fn))
        return fn

    return deco


@check("gram matrix of e0..e6 is diag(1,-1,...,-1)")
def _gram():
    G = lattice.gram_matrix([lattice.basis(i) for i in range(7)])
    want = [[(1 if i == 0 else -1) if i == j else 0 for j in range(7)] for i in range(7)]
    return None if G == want else f"got {G}"


@check("exactly 72 roots")
def _count_roots():
    n = len(enumerate_roots())
    return None if n == 72 else f"found {n}"


@check("root set is closed under negation")
def _negation():
    rs = enumerate_roots()
    for r in rs:
        if lattice.neg(r) not in rs:
            return f"-{r} missing"
    return None


@check("root pairings lie in {-2..2} and +-2 only for +-alpha")
def _simply_laced():
    rs = enumerate_roots()
    for a in rs:
        for b in rs:
            p = pair(a, b)
            if a == b:
                continue
            if p not in (-1, 0, 1, 2) or (p == 2) != (b == lattice.neg(a)):
                return f"pair({a},{b}) = {p}"
    return None


@check("simple roots have Gram determinant of absolute value 3")
def _det():
    d = lattice.determinant(lattice.gram_matrix(simple_roots()))
    return None if abs(d) == 3 else f"det = {d}"


@check("roots span a rank-6 lattice and the simple roots are a Z-basis of h-perp")
def _span():
    if lattice.lattice_rank(enumerate_roots()) != 6:
        return "rank != 6"
    # e1-e2, ..., e5-e6 together with e0-e1-e2-e3 form a Z-basis of h-perp
    # and are themselves simple roots, so the two lattices coincide
    hperp_basis = [(1, -1, -1, -1, 0, 0, 0)] + [
        lattice.sub(lattice.basis(i), lattice.basis(i + 1)) for i in range(1, 6)
    ]
    if sorted(hperp_basis) != sorted(simple_roots()):
        return "simple roots differ from the h-perp basis"
    return None


@check("27 lines, each a (-1)-class of degree 1")
def _lines():
    ls = lines.enumerate_lines()
    if len(ls) != 27:
        return f"{len(ls)} lines"
    h = hyperplane_class()
    for L in ls:
        if pair(L.cls, L.cls) != -1 or pair(L.cls, h) != 1:
            return str(L)
    return None


@check("incidence graph is 10-regular with pairings in {0, 1}")
def _regular():
    A = lines.incidence_matrix()
    for k, row in enumerate(A):
        if any(x not in (0, 1) for x in row) or sum(row) != 10:
            return lines.enumerate_lines()[k].label
    return None


@check("432 ordered skew pairs")
def _skew():
    n = len(lines.skew_pairs())
    return None if n == 432 else f"{n} pairs"


@check("each root decomposes in exactly 6 ways")
def _six_ways():
    total = 0
    for r in enumerate_roots():
        d = lines.decompose_root(r)
        total += len(d)
        if len(d) != 6:
            return f"{r}: {len(d)} decompositions"
        rev = sorted((b.label, a.label) for a, b in d)
        if rev != sorted((a.label, b.label) for a, b in lines.decompose_root(lattice.neg(r))):
            return f"{r}: -root is not the reversed decomposition"
    return None if total == 432 else f"total {total}"


@check("reflections are involutions preserving the pairing and fixing h")
def _reflections():
    rs = enumerate_roots()
    h = hyperplane_class()
    for a in rs:
        if weyl.reflect(a, h) != h:
            return f"r_{a} moves h"
        imgs = [weyl.reflect(a, b) for b in rs]
        if sorted(imgs) != list(rs):
            return f"r_{a} does not permute the roots"
        for b, ib in zip(rs, imgs):
            if weyl.reflect(a, ib) != b:
                return f"r_{a} not an involution on {b}"
    G = weyl.gram_table()
    T = weyl.reflection_table().astype(np.intp)
    for a in range(72):
        if not (G[np.ix_(T[a], T[a])] == G).all():
            return f"r_{rs[a]} does not preserve the pairing"
    return None


@check("|W(E6)| = 51840")
def _order():
    n = weyl.weyl_e6().order
    return None if n == 51840 else f"order {n}"


@check("reflections in all 72 roots generate the same group as the simple ones")
def _all_roots_group():
    n = weyl.generate_group(list(enumerate_roots())).order
    return None if n == weyl.weyl_e6().order else f"order {n}"


@check("only the identity acts trivially on the roots")
def _faithful():
    ident = weyl.WeylElement.identity()
    M = ident.matrix
    want = tuple(tuple(int(i == j) for j in range(7)) for i in range(7))
    return None if M == want else f"identity matrix {M}"


@check("W(E6) is transitive on the 72 roots")
def _transitive():
    return None if atlas.transitivity_check() else "more than one orbit"


@check("Table 1 orbit counts match the published values")
def _table1():
    diff = atlas.table1_diff()
    return None if not diff else f"{diff[0][0]}: published {diff[0][1]}, computed {diff[0][2]}"


@check("orbits inside R_e correspond to the singularities")
def _effective():
    for label, _, _ in atlas.PUBLISHED_TABLE1:
        cfg = parse_config(label)
        inside, outside = atlas.effective_orbit_split(cfg)
        if inside != len(cfg) or inside + outside != atlas.orbit_count(cfg):
            return f"{label}: inside={inside}, outside={outside}"
    return None


@check("W(R_e) orders and |R_e| agree with the product formulas")
def _product_formula():
    for label, _, _ in atlas.PUBLISHED_TABLE1:
        cfg = parse_config(label)
        gens = weyl.realize(cfg)
        sub = weyl.close_subsystem(gens)
        if weyl.classify(gens) != cfg:
            return f"{label}: realization classifies as {weyl.classify(gens)}"
        if len(sub) != cfg.root_count():
            return f"{label}: |R_e| = {len(sub)}"
        if weyl.generate_group(gens).order != cfg.weyl_order():
            return f"{label}: group order mismatch"
    return None


@check("orbit counts agree across 20 randomized realizations")
def _randomized():
    rng = np.random.default_rng(20260)
    for label, _, _ in atlas.PUBLISHED_TABLE1:
        base = atlas.orbit_count(label)
        for _ in range(20):
            gens = weyl.realize(label, rng=rng)
            if len(weyl.orbits(gens)) != base:
                return f"{label}: realization {gens} gives a different count"
    return None


@check("A1 example: classes 2/40/30 contribute 1/20/30 orbits")
def _a1():
    rep = atlas.a1_example_breakdown()
    if rep.class_sizes != (2, 40, 30):
        return f"class sizes {rep.class_sizes}"
    if tuple(rep.contributions.values()) != (1, 20, 30) or rep.total != 51:
        return f"contributions {rep.contributions}"
    if set(rep.orthogonal) != set(rep.classes["difference"]):
        return "orthogonal roots differ from the e_i - e_j class"
    return None


@check("free order-3 elements exist and each has 24 orbits of size 3")
def _eckardt():
    found = atlas.eckardt_search()
    if not found:
        return "no element"
    for g in found:
        sizes = {len(b) for b in weyl.orbit_partition([g.perm])}
        if sizes != {3} or len(weyl.orbit_partition([g.perm])) != 24:
            return g.cycle_notation()
    return None


@check("L_ij line model induces a free order-3 isometry in the search result")
def _eckardt_model():
    m = atlas.eckardt_line_model()
    g = m.induced
    if g.order != 3 or g.fixed_points() or g.apply(hyperplane_class()) != hyperplane_class():
        return "; ".join(m.transcript)
    if g not in set(atlas.eckardt_search()):
        return "induced element not among the search results"
    return None


def run_checks() -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        try:
            cx = fn()
        except Exception as exc:  # a crash is a failure with the exception as witness
            cx = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, cx is None, cx))
    return results
