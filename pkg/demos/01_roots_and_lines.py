"""The Picard lattice of a cubic surface, its 72 roots and its 27 lines.

Run with:  python demos/01_roots_and_lines.py
"""

from collections import Counter

from cubic_atlas import lattice, lines

# The lattice has basis e0..e6 and pairing diag(1, -1, ..., -1).
h = lattice.hyperplane_class()
print("h =", h, " (h, h) =", lattice.pair(h, h))

# Roots: square -2 and orthogonal to h.  There are 72 of them.
roots = lattice.enumerate_roots()
print("number of roots:", len(roots))
print("first three in canonical order:", roots[:3])

# How the roots split by their e0 coefficient.
print("e0 coefficients:", sorted(Counter(r[0] for r in roots).items()))

# A simple system.  alpha_1 = e0-e1-e2-e3 attaches to alpha_4.
simple = lattice.simple_roots()
for row in lattice.gram_matrix(simple):
    print("  ", " ".join(f"{x:3d}" for x in row))
print("det of simple Gram matrix:", lattice.determinant(lattice.gram_matrix(simple)))

# The 27 lines: six exceptional curves, fifteen lines through two points,
# six conics through five points.
ls = lines.enumerate_lines()
print("lines:", " ".join(L.label for L in ls))
A = lines.incidence_matrix()
print("each line meets", {sum(r) for r in A}, "others")
print("ordered skew pairs:", len(lines.skew_pairs()))

# Every root is a difference of two skew lines in six ways.
for r in [(2, -1, -1, -1, -1, -1, -1), (0, 1, -1, 0, 0, 0, 0)]:
    pairs = lines.decompose_root(r)
    print(r, "=", ", ".join(f"[{a}]-[{b}]" for a, b in pairs))
