"""The finite family of integer lines ``u*x + v*y - w = 0`` with ``|u| <= m``,
``|v| <= n`` meeting a rectangle, plus the two mirror symmetries of the unit
square that permute it.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .exact_geom import AffineForm, DegeneratePoints, Pt, RatLike, rat, rat_str


class PrimitiveLine(NamedTuple):
    """Integer line ``u*x + v*y - w = 0`` in its unique primitive form.

    Build instances with :meth:`normalized`; the raw constructor does not
    check the invariants (gcd 1, ``(u, v)`` lexicographically positive).
    """

    u: int
    v: int
    w: int

    @classmethod
    def normalized(cls, u: int, v: int, w: int) -> "PrimitiveLine":
        if u == 0 and v == 0:
            raise ValueError("a line needs (u, v) != (0, 0)")
        g = math.gcd(math.gcd(u, v), w)
        u, v, w = u // g, v // g, w // g
        if u < 0 or (u == 0 and v < 0):
            u, v, w = -u, -v, -w
        return cls(u, v, w)

    def value(self, p: Pt) -> Fraction:
        return self.u * p.x + self.v * p.y - self.w

    def form(self) -> AffineForm:
        return AffineForm(Fraction(self.u), Fraction(self.v), Fraction(-self.w))

    def to_json(self) -> dict:
        return {"u": self.u, "v": self.v, "w": self.w}

    def __str__(self) -> str:
        return f"{self.u}x{self.v:+d}y={self.w}"


@dataclass(frozen=True)
class FareyParams:
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise TypeError("m and n must be integers")
        if self.m < 1 or self.n < 1:
            raise ValueError(f"m and n must be >= 1, got m={self.m}, n={self.n}")

    def swapped(self) -> "FareyParams":
        return FareyParams(self.n, self.m)


@dataclass(frozen=True)
class RectWindow:
    x_min: Fraction
    x_max: Fraction
    y_min: Fraction
    y_max: Fraction

    def __post_init__(self):
        for name in ("x_min", "x_max", "y_min", "y_max"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError(f"degenerate or inverted window {self}")

    @classmethod
    def of(cls, x_min: RatLike, x_max: RatLike, y_min: RatLike, y_max: RatLike) -> "RectWindow":
        return cls(rat(x_min), rat(x_max), rat(y_min), rat(y_max))

    def corners(self) -> tuple[Pt, Pt, Pt, Pt]:
        """Counterclockwise from the lower-left corner."""
        return (
            Pt(self.x_min, self.y_min),
            Pt(self.x_max, self.y_min),
            Pt(self.x_max, self.y_max),
            Pt(self.x_min, self.y_max),
        )

    def area(self) -> Fraction:
        return (self.x_max - self.x_min) * (self.y_max - self.y_min)

    def contains(self, p: Pt) -> bool:
        return self.x_min <= p.x <= self.x_max and self.y_min <= p.y <= self.y_max

    def on_frame(self, p: Pt) -> bool:
        return self.contains(p) and (
            p.x in (self.x_min, self.x_max) or p.y in (self.y_min, self.y_max)
        )

    def boundary_lines(self) -> list[PrimitiveLine]:
        """The four sides as integer lines (``q*x - p = 0`` for ``x = p/q``)."""
        out = []
        for c in (self.x_min, self.x_max):
            out.append(PrimitiveLine.normalized(c.denominator, 0, c.numerator))
        for c in (self.y_min, self.y_max):
            out.append(PrimitiveLine.normalized(0, c.denominator, c.numerator))
        return out

    def to_json(self) -> dict:
        return {k: rat_str(getattr(self, k)) for k in ("x_min", "x_max", "y_min", "y_max")}


UNIT_SQUARE = RectWindow(Fraction(0), Fraction(1), Fraction(0), Fraction(1))


def meets_rect(line: PrimitiveLine, rect: RectWindow) -> bool:
    """Closed line meets closed rectangle iff the corner values are not all of one strict sign."""
    signs = {(val > 0) - (val < 0) for val in (line.value(c) for c in rect.corners())}
    return signs != {1} and signs != {-1}


def clip_to_rect(line: PrimitiveLine, rect: RectWindow) -> tuple[Pt, Pt] | None:
    """The closed segment ``line & rect``, or None when it is empty or a single point."""
    hits = set()
    for x in (rect.x_min, rect.x_max):
        if line.v != 0:
            y = (line.w - line.u * x) / Fraction(line.v)
            if rect.y_min <= y <= rect.y_max:
                hits.add(Pt(x, y))
    for y in (rect.y_min, rect.y_max):
        if line.u != 0:
            x = (line.w - line.v * y) / Fraction(line.u)
            if rect.x_min <= x <= rect.x_max:
                hits.add(Pt(x, y))
    if len(hits) < 2:
        return None
    # a line meets the boundary of a convex region in at most two points
    lo, hi = min(hits), max(hits)
    return lo, hi


def _w_range(u: int, v: int, rect: RectWindow) -> range:
    vals = [u * c.x + v * c.y for c in rect.corners()]
    return range(math.ceil(min(vals)), math.floor(max(vals)) + 1)


def enumerate_lines(params: FareyParams, rect: RectWindow = UNIT_SQUARE) -> set[PrimitiveLine]:
    """All distinct lines with an integer equation, ``|u| <= m``, ``|v| <= n``, meeting ``rect``."""
    out: set[PrimitiveLine] = set()
    for u in range(-params.m, params.m + 1):
        for v in range(-params.n, params.n + 1):
            # (u, v, w) and (-u, -v, -w) give the same line
            if u < 0 or (u == 0 and v <= 0):
                continue
            for w in _w_range(u, v, rect):
                line = PrimitiveLine.normalized(u, v, w)
                if meets_rect(line, rect):
                    out.add(line)
    return out


def sorted_lines(lines: Iterable[PrimitiveLine]) -> list[PrimitiveLine]:
    return sorted(lines)


def is_member(line: PrimitiveLine, params: FareyParams, rect: RectWindow = UNIT_SQUARE) -> bool:
    # the primitive form has the smallest coefficients among integer multiples
    return abs(line.u) <= params.m and abs(line.v) <= params.n and meets_rect(line, rect)


def line_through(a: Pt, b: Pt) -> PrimitiveLine:
    """Primitive integer equation of the line through two distinct rational points."""
    if a == b:
        raise DegeneratePoints(f"line_through needs distinct points, got {a} twice")
    u = a.y - b.y
    v = b.x - a.x
    w = u * a.x + v * a.y
    scale = math.lcm(u.denominator, v.denominator, w.denominator)
    return PrimitiveLine.normalized(int(u * scale), int(v * scale), int(w * scale))


def reflect_x(line: PrimitiveLine) -> PrimitiveLine:
    """Image under the reflection across ``y = 1/2``."""
    return PrimitiveLine.normalized(line.u, -line.v, line.w - line.v)


def reflect_y(line: PrimitiveLine) -> PrimitiveLine:
    """Image under the reflection across ``x = 1/2``."""
    return PrimitiveLine.normalized(-line.u, line.v, line.w - line.u)


def reflect_point_x(p: Pt) -> Pt:
    return Pt(p.x, 1 - p.y)


def reflect_point_y(p: Pt) -> Pt:
    return Pt(1 - p.x, p.y)


def swap_xy(line: PrimitiveLine) -> PrimitiveLine:
    return PrimitiveLine.normalized(line.v, line.u, line.w)


def lines_to_json(lines: Iterable[PrimitiveLine]) -> str:
    return json.dumps([l.to_json() for l in sorted_lines(lines)], indent=1)


def lines_from_json(text: str) -> list[PrimitiveLine]:
    return [PrimitiveLine.normalized(int(d["u"]), int(d["v"]), int(d["w"])) for d in json.loads(text)]
