"""Exact predicate kernel: rationals, points, vectors, oriented lines, quadrants.

Everything here works over :class:`fractions.Fraction`, so every predicate is
decided exactly. Nothing in this module ever touches a float.
"""
from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from typing import NamedTuple, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]


class DegeneratePoints(ValueError):
    """Two points that must be distinct coincide."""


class ZeroVector(ValueError):
    """A direction vector is (0, 0) where a nonzero one is required."""


def rat(value: RatLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: they would smuggle rounding into the geometry.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact coordinates")
    return Fraction(value)


def rat_str(value: Fraction) -> str:
    """Serialize as ``"p/q"`` in lowest terms, always with an explicit denominator."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class Pt(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: RatLike, y: RatLike) -> "Pt":
        return cls(rat(x), rat(y))

    def __sub__(self, other: "Pt") -> "Vec2":  # type: ignore[override]
        return Vec2(self.x - other.x, self.y - other.y)

    def to_json(self) -> list[str]:
        return [rat_str(self.x), rat_str(self.y)]

    @classmethod
    def from_json(cls, data) -> "Pt":
        return cls(rat(data[0]), rat(data[1]))


class Vec2(NamedTuple):
    dx: Fraction
    dy: Fraction

    @classmethod
    def of(cls, dx: RatLike, dy: RatLike) -> "Vec2":
        return cls(rat(dx), rat(dy))

    def __add__(self, other: "Vec2") -> "Vec2":  # type: ignore[override]
        return Vec2(self.dx + other.dx, self.dy + other.dy)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.dx, -self.dy)

    def is_zero(self) -> bool:
        return self.dx == 0 and self.dy == 0


class AffineForm(NamedTuple):
    """The affine function ``a*x + b*y + c``."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __call__(self, p: Pt) -> Fraction:
        return self.a * p.x + self.b * p.y + self.c

    def __neg__(self) -> "AffineForm":
        return AffineForm(-self.a, -self.b, -self.c)


class Quadrant(IntEnum):
    Q1 = 1
    Q2 = 2
    Q3 = 3
    Q4 = 4

    def opposite(self) -> "Quadrant":
        return Quadrant((self.value + 1) % 4 + 1)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def det2(v: Vec2, w: Vec2) -> Fraction:
    return v[0] * w[1] - v[1] * w[0]


def orient(a: Pt, b: Pt, c: Pt) -> int:
    """Sign of det(AB, AC): +1 when C is strictly left of the directed line A->B."""
    return _sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


def canonical_line(a: Pt, b: Pt) -> AffineForm:
    """Oriented equation f(M) = det(AB, AM), positive to the left of A->B."""
    if a == b:
        raise DegeneratePoints(f"canonical_line needs distinct points, got {a} twice")
    dx = b.x - a.x
    dy = b.y - a.y
    # det(AB, AM) = dx*(y - ya) - dy*(x - xa)
    return AffineForm(-dy, dx, dy * a.x - dx * a.y)


def side_of(f: AffineForm, p: Pt) -> int:
    return _sign(f(p))


def segments_cross(a: Pt, b: Pt, c: Pt, d: Pt) -> bool:
    """True iff the open segments (A,B) and (C,D) meet in a single interior point."""
    if a == b or c == d:
        raise DegeneratePoints("segments_cross needs nondegenerate segments")
    return orient(a, b, c) * orient(a, b, d) < 0 and orient(c, d, a) * orient(c, d, b) < 0


def quadrant_set(v: Vec2) -> frozenset[Quadrant]:
    """Closed quadrants containing ``v``; axis vectors belong to two."""
    # ints and Fractions both expose .numerator, whose sign is the value's sign
    sx = _sign(v[0].numerator)
    sy = _sign(v[1].numerator)
    if sx == 0 and sy == 0:
        raise ZeroVector("the zero vector has no quadrant")
    return _QUADRANTS[sx, sy]


_QUADRANTS = {
    (sx, sy): frozenset(
        q for q, ok in (
            (Quadrant.Q1, sx >= 0 and sy >= 0),
            (Quadrant.Q2, sx <= 0 and sy >= 0),
            (Quadrant.Q3, sx <= 0 and sy <= 0),
            (Quadrant.Q4, sx >= 0 and sy <= 0),
        ) if ok
    )
    for sx in (-1, 0, 1) for sy in (-1, 0, 1)
}


def shares_quadrant(v: Vec2, w: Vec2) -> bool:
    return bool(quadrant_set(v) & quadrant_set(w))


def opposite_quadrants(v: Vec2, w: Vec2) -> bool:
    qw = quadrant_set(w)
    return any(q.opposite() in qw for q in quadrant_set(v))
