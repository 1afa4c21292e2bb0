"""Petrie duals: same edges, new faces, and an involution.

A Petrie polygon walks edges so that any two consecutive edges share a
face but no three do.  Swapping a polyhedron's faces for its Petrie
polygons is an involution and turns the cube into a skew-faced torus map.
"""

from skelforge import build, classify_polygon, petrie_dual, trace, trace_report
from skelforge.serialization import complex_to_json

cube = build("cube")
dual = petrie_dual(cube)
print("cube        :", cube.summary())
print("petrie(cube):", dual.summary())
for f in dual.faces:
    print("  ", classify_polygon(f).symbol, f)

print("\npetrie circuits of the dual close after 4 steps:")
print(trace_report(trace(dual, "petrie")))

back = petrie_dual(dual)
a, b = complex_to_json(back), complex_to_json(cube)
a.pop("name"), b.pop("name")
print("\npetrie(petrie(cube)) == cube:", a == b)

# On the plane, the Petrie dual of the square tessellation has zigzag
# apeirogons as faces, four through every vertex.
sq = build("sq44")
zig = petrie_dual(sq)
print("\npetrie({4,4}):", zig.summary())
print("  sample face:", zig.faces[0])
print("  faces at the origin:", len(zig.faces_at_vertex((0, 0, 0))))
print("  trace:", trace_report(trace(sq, "petrie"))["lengths"][0])
