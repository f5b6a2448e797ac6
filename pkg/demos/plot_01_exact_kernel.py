"""
Exact predicates
================

Every coordinate is a ``Fraction``. Orientation, side tests and quadrant
membership are therefore decided exactly, with no tolerance anywhere.
"""
from farey_complex.exact_geom import (
    Pt,
    Vec2,
    canonical_line,
    opposite_quadrants,
    quadrant_set,
    segments_cross,
    shares_quadrant,
    side_of,
)

# The oriented line through A and B is f(M) = det(AB, AM); it is positive on
# the left of A -> B.
A, B = Pt.of(0, 1), Pt.of(1, 0)
f = canonical_line(A, B)
print("f =", f)
for M in (Pt.of(0, 0), Pt.of("1/2", "1/2"), Pt.of(1, 1)):
    print(f"side of {tuple(map(str, M))}: {side_of(f, M):+d}")

# Reversing the direction flips the sign.
print("reversed:", canonical_line(B, A))

# Two open segments cross only when each separates the other's endpoints.
print("square diagonals cross:", segments_cross(Pt.of(0, 0), Pt.of(1, 1), Pt.of(0, 1), Pt.of(1, 0)))
print("shared endpoint only:", segments_cross(Pt.of(0, 0), Pt.of(1, 1), Pt.of(1, 1), Pt.of(2, 0)))

# Quadrants are closed, so an axis vector belongs to two of them.
for v in (Vec2.of(1, 1), Vec2.of(1, 0), Vec2.of(-1, -2)):
    print(tuple(map(str, v)), sorted(q.name for q in quadrant_set(v)))

print("(1,0) and (0,1) share Q1:", shares_quadrant(Vec2.of(1, 0), Vec2.of(0, 1)))
print("(1,0) and (-1,0) opposite:", opposite_quadrants(Vec2.of(1, 0), Vec2.of(-1, 0)))
