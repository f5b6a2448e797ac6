"""Static SVG drawings of the complex.

This is the only place rationals become decimals, and only for display.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import quoteattr

from . import arrangement as arr
from .exact_geom import Pt
from .farey_lines import (
    UNIT_SQUARE,
    FareyParams,
    RectWindow,
    clip_to_rect,
    enumerate_lines,
    sorted_lines,
)


@dataclass(frozen=True)
class Style:
    size: int = 600
    margin: int = 12
    stroke: str = "#1f1f1f"
    stroke_width: float = 0.6
    triangle_fill: str = "#f3d9a4"
    quad_fill: str = "#8fb8de"
    other_fill: str = "#e0453a"


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(params: FareyParams, window: RectWindow = UNIT_SQUARE,
               family: str = "unit", style: Style = Style()) -> str:
    """Lines of the family clipped to ``window``, cells filled by vertex count.

    ``family="unit"`` draws the lines meeting the unit square; ``"window"``
    draws every bounded-coefficient line meeting the window.
    """
    lines = enumerate_lines(params, UNIT_SQUARE if family == "unit" else window)
    s = arr.build(lines, window)
    cells = arr.bounded_cells(s)

    inner = style.size - 2 * style.margin
    scale = Fraction(inner) / max(window.x_max - window.x_min, window.y_max - window.y_min)

    def xy(p: Pt) -> str:
        x = style.margin + (p.x - window.x_min) * scale
        y = style.margin + (window.y_max - p.y) * scale
        return f"{_fmt(float(x))},{_fmt(float(y))}"

    tri = sum(1 for c in cells if len(c) == 3)
    quad = sum(1 for c in cells if len(c) == 4)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{style.size}" '
        f'height="{style.size}" viewBox="0 0 {style.size} {style.size}" '
        f'data-m="{params.m}" data-n="{params.n}" data-lines="{len(lines)}" '
        f'data-cells="{len(cells)}" data-triangles="{tri}" data-quadrilaterals="{quad}">',
        f"<title>Farey complex m={params.m} n={params.n}</title>",
        '<g id="cells" stroke="none">',
    ]
    for c in cells:
        n = len(c)
        fill = style.triangle_fill if n == 3 else style.quad_fill if n == 4 else style.other_fill
        kind = {3: "triangle", 4: "quadrilateral"}.get(n, "other")
        pts = " ".join(xy(p) for p in c.vertices)
        out.append(f'<polygon class="cell {kind}" fill={quoteattr(fill)} points="{pts}"/>')
    out.append("</g>")
    out.append(f'<g id="lines" stroke={quoteattr(style.stroke)} '
               f'stroke-width="{_fmt(style.stroke_width)}" fill="none">')
    for line in sorted_lines(lines):
        seg = clip_to_rect(line, window)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = (xy(p).split(",") for p in seg)
        out.append(f'<line class="farey-line" data-uvw="{line.u} {line.v} {line.w}" '
                   f'x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    corners = " ".join(xy(p) for p in window.corners())
    out.append(f'<polygon id="frame" fill="none" stroke={quoteattr(style.stroke)} '
               f'stroke-width="{_fmt(2 * style.stroke_width)}" points="{corners}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
