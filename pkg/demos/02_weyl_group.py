"""Reflections, Picard-Lefschetz words and the Weyl group W(E6).

Run with:  python demos/02_weyl_group.py
"""

import time

from cubic_atlas import lattice, weyl

a = lattice.simple_roots()
delta = (2, -1, -1, -1, -1, -1, -1)

# A loop around a node acts by the reflection in its vanishing cycle.
beta = (1, -1, -1, -1, 0, 0, 0)
print("r_delta(beta) =", weyl.reflect(delta, beta))

# Adjacent simple roots braid: (r1 r4)^3 = 1.
g = weyl.picard_lefschetz_word([a[0], a[3]])
print("order of r1 r4:", g.order)
print("matrix of r1 r4:")
for row in g.matrix:
    print("  ", row)

# Close the six simple reflections into the full group.
t = time.perf_counter()
W = weyl.weyl_e6()
print(f"|W(E6)| = {W.order}  ({time.perf_counter() - t:.2f}s)")

# The group is transitive on the roots.
print("orbits of W(E6) on roots:", len(weyl.orbits(a)))

# Sub-root systems and their types.
for S in ([delta], [a[0], a[3]], [a[0], a[2], a[3], a[4]], a):
    sub = weyl.close_subsystem(S)
    print(f"{str(sub.label):>4}: {len(sub):2d} roots, simple system of size {len(sub.simple)}")
