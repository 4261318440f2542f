"""Monodromy around an Eckardt hyperplane section: a free Z/3 on the roots.

Run with:  python demos/04_eckardt.py
"""

from cubic_atlas import atlas, weyl

found = atlas.eckardt_search()
print("fixed-point-free elements of order 3 in W(E6):", len(found))
g = found[0]
print("representative has", len(weyl.orbit_partition([g.perm])), "orbits on the roots")

# Lines L_ij: i runs over the nine flexes of the branch curve, j over the
# three sheets.  The flexes form the affine plane over F_3.
model = atlas.eckardt_line_model()
for step in model.transcript:
    print("  ", step)
print("sheet shift as a lattice map:")
for row in model.matrix:
    print("  ", row)
print("induced element is in the search result:", model.induced in set(found))

# Reading "same sheet" as "meets" gives nine mutually meeting lines, which
# is not the 27-line configuration.
try:
    atlas.eckardt_line_model("literal")
except Exception as exc:
    print("literal sheet model:", type(exc).__name__, "-", exc)
