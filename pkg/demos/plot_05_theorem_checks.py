"""
Checking every cell
===================

``verify_all`` classifies each cell and records anything unexpected. The
denominator scan lists quadrilaterals that have a vertex (p/q, p'/q') with
q <= m or q' <= n; a non-empty list means that statement fails.
"""
import random

from farey_complex import arrangement as arr
from farey_complex.farey_lines import UNIT_SQUARE, FareyParams, enumerate_lines
from farey_complex.verifier import classify, denominator_scan, harvest_triples, three_point_line, verify_all

for m, n in [(1, 1), (2, 2), (4, 3)]:
    r = verify_all(FareyParams(m, n))
    print(f"CF({m},{n}): {r.cell_count} cells = {r.triangle_count} triangles + {r.quad_count} quads,"
          f" violations {r.violations}")

r = verify_all(FareyParams(1, 2))
quad = next(c for c in r.cells if len(c) == 4)
print("a quadrilateral:", [f"({p.x},{p.y})" for p in quad.vertices], classify(quad))

for mode in ("either", "both"):
    hits = denominator_scan(r.cells, FareyParams(1, 2), mode=mode)
    print(f"denominator scan ({mode}):", [[f"({p.x},{p.y})" for p in r.cells[k].vertices] for k in hits])

# A family line through the middle of two same-quadrant steps separates the ends.
params = FareyParams(3, 2)
s = arr.build(enumerate_lines(params), UNIT_SQUARE)
for a, b, c in harvest_triples(s, params, 3, random.Random(1)):
    phi = three_point_line(a, b, c, params)
    print(f"A=({a.x},{a.y}) B=({b.x},{b.y}) C=({c.x},{c.y}) -> {phi}:"
          f" phi(A)={phi.value(a)}, phi(C)={phi.value(c)}")
