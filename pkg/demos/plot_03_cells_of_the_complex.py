"""
Cells of the complex
====================

Build the arrangement exactly, pull out the bounded faces and draw them.
The SVG written here is the m = 4, n = 3 picture: triangles in sand,
quadrilaterals in blue.
"""
from collections import Counter
from pathlib import Path

from farey_complex import arrangement as arr
from farey_complex.farey_lines import UNIT_SQUARE, FareyParams, enumerate_lines
from farey_complex.render import render_svg

s = arr.build(enumerate_lines(FareyParams(1, 1)), UNIT_SQUARE)
for cell in arr.bounded_cells(s):
    print([f"({p.x},{p.y})" for p in cell.vertices], "area", arr.area(cell))

params = FareyParams(4, 3)
s = arr.build(enumerate_lines(params), UNIT_SQUARE)
cells = arr.bounded_cells(s)
print("vertices", len(s.vertices), "edges", len(s.edges), "faces", len(s.faces))
print("V - E + F =", s.euler_characteristic())
print("cell sizes:", dict(Counter(len(c) for c in cells)))
print("total area:", sum(arr.area(c) for c in cells))

out = Path("farey_4_3.svg")
out.write_text(render_svg(params))
print("wrote", out)
