"""
Beyond the unit square
======================

Cells strictly inside a larger window. With every bounded-coefficient line
that meets the window, all interior cells are triangles or quadrilaterals.
Keeping only the lines that meet the unit square changes the picture: at
m = n = 3 pentagons appear.
"""
from collections import Counter
from pathlib import Path

from farey_complex.farey_lines import FareyParams, RectWindow
from farey_complex.render import render_svg
from farey_complex.verifier import window_scan

window = RectWindow.of(-2, 3, -2, 3)
for family in ("window", "unit"):
    for m, n in [(1, 1), (2, 2), (3, 3)]:
        r = window_scan(FareyParams(m, n), window, family=family)
        sizes = dict(sorted(Counter(len(c) for c in r.cells).items()))
        print(f"{family:6s} m={m} n={n}: {r.cell_count:6d} interior cells, sizes {sizes}")

r = window_scan(FareyParams(3, 3), window, family="unit")
for c in r.cells:
    if len(c) == 5:
        print("pentagon:", [f"({p.x},{p.y})" for p in c.vertices])
        break

out = Path("plane_3_3.svg")
out.write_text(render_svg(FareyParams(3, 3), window, family="unit"))
print("wrote", out)
