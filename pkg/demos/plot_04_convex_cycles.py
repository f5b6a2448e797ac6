"""
Convex vertex cycles
====================

Random strictly convex counterclockwise polygons: deleting any vertex keeps
them convex, the diagonals from A_0 cross [A_{n-1}, A_1], and from five
vertices on some two consecutive edges always share a quadrant.
"""
import random
from collections import Counter

from farey_complex.cpd import (
    diagonals_cross,
    edge_quadrants,
    no_consecutive_same_quadrant,
    random_cpd,
    reduce,
    validate,
)
from farey_complex.exact_geom import Pt

square = validate([Pt.of(0, 0), Pt.of(1, 0), Pt.of(1, 1), Pt.of(0, 1)])
print("square edge quadrants:", [sorted(q.name for q in qs) for qs in edge_quadrants(square)])
print("drop (0,0):", [f"({p.x},{p.y})" for p in reduce(square, 0).vertices])

rng = random.Random(0)
sizes = Counter()
for _ in range(2000):
    c = random_cpd(rng)
    n = len(c)
    sizes[n] += 1
    if n >= 4:
        assert all(len(reduce(c, k)) == n - 1 for k in range(n))
        assert all(diagonals_cross(c, k) for k in range(2, n - 1))
    if n >= 5:
        assert not no_consecutive_same_quadrant(c)
print("checked polygons by size:", dict(sorted(sizes.items())))
