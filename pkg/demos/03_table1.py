"""Limiting primitive vanishing cycles for every ADE configuration.

For each configuration we pick simple roots of a sub-root system R_e of that
type, let W(R_e) act on the 72 roots, and count orbits.  Orbits inside R_e
correspond to the singular points.

Run with:  python demos/03_table1.py
"""

from cubic_atlas import atlas, lattice, weyl

print(f"{'R_e':>8} {'type':>6} {'#':>4} {'in R_e':>7}")
for row in atlas.table1():
    inside, outside = atlas.effective_orbit_split(row.config)
    print(f"{str(row.config):>8} {row.bruce_wall_type:>6} {row.count:>4} {inside:>7}")

print("mismatches against the published table:", atlas.table1_diff() or "none")

# The nodal case in detail.
rep = atlas.a1_example_breakdown()
print("A1 classes:", dict(zip(rep.classes, rep.class_sizes)))
print("orbits per class:", rep.contributions, "total", rep.total)

# The fundamental cycle of each singularity is the top root of its orbit.
sub = weyl.close_subsystem(weyl.realize("A1+A2"))
inside = set(sub.indices)
for block in weyl.orbits(sub.simple):
    if inside.issuperset(block):
        members = [lattice.enumerate_roots()[i] for i in block]
        print("orbit of size", len(block), "-> maximal root", weyl.orbit_max(members, sub.simple))

# A configuration that cannot occur.
try:
    weyl.realize("A2+A3")
except Exception as exc:
    print(type(exc).__name__, "-", exc)
