"""Mechanical checks of the structural theorems on computed cells.

Every check records failures as data in a :class:`VerificationReport`; only
:func:`classify` raises, and only on inputs that contradict the shape theorem.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import arrangement as arr
from .arrangement import Cell
from .cpd import (
    Cpd,
    edge_quadrants,
    find_violation,
    no_consecutive_same_quadrant,
)
from .exact_geom import (
    Pt,
    Quadrant,
    opposite_quadrants,
    orient,
    quadrant_set,
    rat_str,
)
from .farey_lines import (
    UNIT_SQUARE,
    FareyParams,
    PrimitiveLine,
    RectWindow,
    enumerate_lines,
    is_member,
    line_through,
    reflect_point_x,
    reflect_point_y,
    reflect_x,
    reflect_y,
)


class ShapeTheoremViolation(AssertionError):
    """A cell contradicts the triangle-or-quadrilateral classification."""


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class ShapeClass:
    kind: str  # "triangle" or "quadrilateral"
    offset: int | None = None  # quadrilaterals: edge offset+i-1 -> offset+i lies in Q_i

    @property
    def is_triangle(self) -> bool:
        return self.kind == "triangle"


def check_t2(cell: Cell | Cpd, lines: Iterable[PrimitiveLine] | None = None) -> bool:
    """No two consecutive boundary edges share a closed quadrant.

    ``lines`` documents which family the cell came from; the check itself only
    needs the boundary.
    """
    boundary = cell.boundary if isinstance(cell, Cell) else cell
    return no_consecutive_same_quadrant(boundary)


def quadrant_offset(boundary: Cpd) -> int | None:
    """Some p with edge p+i-1 in Q_i for i = 1..4, or None."""
    if len(boundary) != 4:
        return None
    qs = edge_quadrants(boundary)
    for p in range(4):
        if all(Quadrant(i) in qs[(p + i - 1) % 4] for i in range(1, 5)):
            return p
    return None


def has_q1_then_q3(boundary: Cpd) -> bool:
    qs = edge_quadrants(boundary)
    n = len(qs)
    return any(Quadrant.Q1 in qs[k] and Quadrant.Q3 in qs[(k + 1) % n] for k in range(n))


def has_opposite_consecutive(boundary: Cpd) -> bool:
    es = boundary.edges()
    n = len(es)
    return any(opposite_quadrants(es[k], es[(k + 1) % n]) for k in range(n))


def classify(cell: Cell | Cpd) -> ShapeClass:
    boundary = cell.boundary if isinstance(cell, Cell) else cell
    n = len(boundary)
    if n == 3:
        if not has_opposite_consecutive(boundary):
            raise ShapeTheoremViolation("triangle without a consecutive pair in opposite quadrants")
        return ShapeClass("triangle")
    if n == 4:
        if has_opposite_consecutive(boundary):
            raise ShapeTheoremViolation("quadrilateral with consecutive edges in opposite quadrants")
        offset = quadrant_offset(boundary)
        if offset is None:
            raise ShapeTheoremViolation("quadrilateral edges do not run through Q1..Q4 cyclically")
        return ShapeClass("quadrilateral", offset)
    raise ShapeTheoremViolation(f"cell with {n} vertices")


# -- three-point lemma -------------------------------------------------------

def _positive_multiple_of_canonical(line: PrimitiveLine, a: Pt, b: Pt) -> tuple[int, int, int]:
    """Integer equation of line (a, b), signed as a positive multiple of det(AB, AM)."""
    alpha, beta = -(b.y - a.y), b.x - a.x
    if line.u != 0:
        flip = (line.u > 0) != (alpha > 0)
    else:
        flip = (line.v > 0) != (beta > 0)
    return (-line.u, -line.v, -line.w) if flip else tuple(line)


def three_point_line(a: Pt, b: Pt, c: Pt, params: FareyParams) -> PrimitiveLine:
    """A line of the family through ``b`` strictly separating ``a`` from ``c``.

    Follows the constructive argument: reflect the configuration so the shared
    quadrant becomes Q1, take the two integer equations signed with u <= 0 and
    v >= 0, subtract them, and reflect the result back.
    """
    if len({a, b, c}) < 3:
        raise PreconditionViolated("points must be distinct")
    if orient(a, b, c) == 0:
        raise PreconditionViolated("points are collinear")
    for p in (a, b, c):
        if not UNIT_SQUARE.contains(p):
            raise PreconditionViolated(f"{p} is outside the unit square")
    shared = quadrant_set(b - a) & quadrant_set(c - b)
    if not shared:
        raise PreconditionViolated("A->B and B->C share no quadrant")
    ab, bc = line_through(a, b), line_through(b, c)
    for name, l in (("(A,B)", ab), ("(B,C)", bc)):
        if not is_member(l, params):
            raise PreconditionViolated(f"line {name} = {l} is not in the family for {params}")

    q = min(shared)
    flip_y = q in (Quadrant.Q2, Quadrant.Q3)  # x -> 1 - x
    flip_x = q in (Quadrant.Q4, Quadrant.Q3)  # y -> 1 - y

    def to_q1(p: Pt) -> Pt:
        if flip_y:
            p = reflect_point_y(p)
        if flip_x:
            p = reflect_point_x(p)
        return p

    def line_to_q1(l: PrimitiveLine) -> PrimitiveLine:
        if flip_y:
            l = reflect_y(l)
        if flip_x:
            l = reflect_x(l)
        return l

    a1, b1, c1 = to_q1(a), to_q1(b), to_q1(c)
    u, v, w = _positive_multiple_of_canonical(line_to_q1(ab), a1, b1)
    u2, v2, w2 = _positive_multiple_of_canonical(line_to_q1(bc), b1, c1)
    phi = PrimitiveLine.normalized(u - u2, v - v2, w - w2)
    # both reflections are involutions on lines as well as on points
    phi = line_to_q1(phi)

    if not (is_member(phi, params) and phi.value(b) == 0 and phi.value(a) * phi.value(c) < 0):
        raise AssertionError(f"three-point construction produced an invalid line {phi}")
    return phi


def harvest_triples(s: arr.Subdivision, params: FareyParams, count: int,
                    rng: random.Random, max_tries: int | None = None) -> list[tuple[Pt, Pt, Pt]]:
    """Admissible (A, B, C) triples built from family lines through a shared vertex B."""
    # lines touching the region in a single point carry no second vertex
    members = [k for k, l in enumerate(s.lines)
               if is_member(l, params) and len(s.line_vertices[k]) >= 2]
    through: dict[int, list[int]] = {}
    for li in members:
        for vid in s.line_vertices[li]:
            through.setdefault(vid, []).append(li)
    hubs = sorted(v for v, ls in through.items() if len(ls) >= 2)
    out: list[tuple[Pt, Pt, Pt]] = []
    seen = set()
    tries = 0
    limit = max_tries if max_tries is not None else 200 * count
    while len(out) < count and tries < limit and hubs:
        tries += 1
        b = rng.choice(hubs)
        l1, l2 = rng.sample(through[b], 2)
        ia = rng.choice([v for v in s.line_vertices[l1] if v != b])
        ic = rng.choice([v for v in s.line_vertices[l2] if v != b])
        key = (ia, b, ic)
        if key in seen:
            continue
        A, B, C = s.vertices[ia], s.vertices[b], s.vertices[ic]
        if quadrant_set(B - A) & quadrant_set(C - B):
            seen.add(key)
            out.append((A, B, C))
    return out


# -- reports -----------------------------------------------------------------

@dataclass
class VerificationReport:
    params: FareyParams
    cell_count: int = 0
    triangle_count: int = 0
    quad_count: int = 0
    violations: list[tuple[int, str]] = field(default_factory=list)
    denominator_claim_exceptions: list[int] = field(default_factory=list)
    line_count: int = 0
    vertex_count: int = 0
    edge_count: int = 0
    window: RectWindow = UNIT_SQUARE
    family: str = "unit"
    cells: list[Cell] = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "params": {"m": self.params.m, "n": self.params.n},
            "window": self.window.to_json(),
            "family": self.family,
            "line_count": self.line_count,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "cell_count": self.cell_count,
            "triangle_count": self.triangle_count,
            "quad_count": self.quad_count,
            "violations": [{"cell": c, "property": p} for c, p in self.violations],
            "denominator_claim_exceptions": [
                {"cell": k, "vertices": self.cells[k].boundary.to_json()}
                for k in self.denominator_claim_exceptions
            ],
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def _check_cells(report: VerificationReport, cells: Sequence[Cell]) -> None:
    for k, cell in enumerate(cells):
        b = cell.boundary
        n = len(b)
        if n == 3:
            report.triangle_count += 1
        elif n == 4:
            report.quad_count += 1
        else:
            report.violations.append((k, "vertex_count"))
        if find_violation(b.vertices) is not None:
            report.violations.append((k, "convexity"))
            continue
        if not check_t2(b):
            report.violations.append((k, "T2"))
        if n == 4 and has_q1_then_q3(b):
            report.violations.append((k, "q1_then_q3"))
        if n in (3, 4):
            try:
                classify(b)
            except ShapeTheoremViolation:
                report.violations.append((k, "classification"))


def _check_interiors(report: VerificationReport, cells: Sequence[Cell],
                     lines: Sequence[PrimitiveLine]) -> None:
    for k, cell in enumerate(cells):
        c = arr.centroid(cell)
        if any(l.value(c) == 0 for l in lines):
            report.violations.append((k, "interior"))


def verify_all(params: FareyParams, check_interior: bool = False,
               denominator_mode: str = "either") -> VerificationReport:
    """Build the complex on the unit square and check every cell.

    ``check_interior`` adds a centroid-vs-every-line test; it is quadratic in
    practice and off by default.
    """
    lines = enumerate_lines(params)
    s = arr.build(lines, UNIT_SQUARE)
    cells = arr.bounded_cells(s)
    report = VerificationReport(params, cell_count=len(cells), line_count=len(lines),
                                vertex_count=len(s.vertices), edge_count=len(s.edges),
                                cells=cells)
    _check_cells(report, cells)
    if check_interior:
        _check_interiors(report, cells, s.lines)
    if sum((arr.area(c) for c in cells), Fraction(0)) != UNIT_SQUARE.area():
        report.violations.append((-1, "area_sum"))
    if s.euler_characteristic() != 2:
        report.violations.append((-1, "euler"))
    report.denominator_claim_exceptions = denominator_scan(cells, params, denominator_mode)
    return report


def denominator_scan(cells: Sequence[Cell], params: FareyParams, mode: str = "either") -> list[int]:
    """Indices of quadrilateral cells with a vertex whose reduced coordinates
    p/q, p'/q' satisfy ``q <= m or q' <= n`` (``mode="either"``) or
    ``q <= m and q' <= n`` (``mode="both"``).
    """
    if mode not in ("either", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    join = any if mode == "either" else all
    out = []
    for k, cell in enumerate(cells):
        if len(cell) != 4:
            continue
        for p in cell.vertices:
            if join((p.x.denominator <= params.m, p.y.denominator <= params.n)):
                out.append(k)
                break
    return out


def window_scan(params: FareyParams, window: RectWindow, family: str = "window") -> VerificationReport:
    """Check the shape properties on bounded cells strictly inside ``window``.

    ``family="window"`` uses every bounded-coefficient line meeting the window;
    ``family="unit"`` keeps only lines meeting the unit square, i.e. the plane
    complement of the original finite family.
    """
    if family == "window":
        lines = enumerate_lines(params, window)
    elif family == "unit":
        lines = enumerate_lines(params, UNIT_SQUARE)
    else:
        raise ValueError(f"unknown family {family!r}")
    s = arr.build(lines, window)
    cells = [c for c in arr.bounded_cells(s) if not arr.touches_frame(c, window)]
    report = VerificationReport(params, cell_count=len(cells), line_count=len(lines),
                                vertex_count=len(s.vertices), edge_count=len(s.edges),
                                window=window, family=family, cells=cells)
    _check_cells(report, cells)
    return report


def report_cells_rat(report: VerificationReport) -> list[list[list[str]]]:
    return [[[rat_str(p.x), rat_str(p.y)] for p in c.vertices] for c in report.cells]
