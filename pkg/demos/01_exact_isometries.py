"""Exact isometries: rational matrices, orders, screws, fixed spaces.

Every symmetry in this library is an exactly orthogonal rational matrix
plus a rational translation.  There are no tolerances anywhere: two points
coincide when their fractions coincide.
"""

from fractions import Fraction

from skelforge import Isometry, compose, fixed_space_dim, order_or_translation
from skelforge.geometry import half_turn, point_reflection, reflection_in_plane

# The rotatory reflection that cycles the vertex figure of the {6,6}-family
# polyhedra: x -> -(x3, x1, x2).
s2 = Isometry(((0, 0, -1), (-1, 0, 0), (0, -1, 0)))
print("s2 =", s2)
print("  determinant:", s2.det())
print("  order:", order_or_translation(s2, 12))
print("  squared:", compose(s2, s2), "(a plain 3-cycle of coordinates)")

# A screw motion: rotation by a quarter turn plus a push along the axis.
# Its fourth power is a pure translation, which is how helical faces know
# they rise over squares.
s1 = Isometry(((0, 0, -1), (0, 1, 0), (1, 0, 0)), (0, 1, -1))
print("\ns1 =", s1)
print("  s1^4:", order_or_translation(s1, 8))
print("  fixed points:", fixed_space_dim(s1), "(None means a true screw)")

# Mirror dimensions: the building blocks of mirror vectors.
for name, g in [
    ("plane reflection", reflection_in_plane((1, -1, 0), (0, 0, 0))),
    ("half turn", half_turn((0, 0, 0), (1, 1, 0))),
    ("point reflection", point_reflection((Fraction(1, 2), 0, 0))),
]:
    print(f"\n{name}: fixed-space dimension {fixed_space_dim(g)}")

# Exactness matters: a rational rotation by acos(3/5) is orthogonal but has
# infinite order, and the engine can tell.
pythagorean = Isometry((
    (Fraction(3, 5), Fraction(-4, 5), 0),
    (Fraction(4, 5), Fraction(3, 5), 0),
    (0, 0, 1),
))
print("\n3-4-5 rotation:", order_or_translation(pythagorean, 100))
