"""Strictly convex counterclockwise vertex cycles and their quadrant combinatorics."""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_geom import (
    Pt,
    Quadrant,
    Vec2,
    det2,
    quadrant_set,
    segments_cross,
    shares_quadrant,
)


class NotConvexDirect(ValueError):
    """Some vertex is not strictly left of some directed edge."""

    def __init__(self, p: int, q: int):
        super().__init__(f"vertex {q} is not strictly left of edge {p}->{p + 1}")
        self.p = p
        self.q = q


class TooFewVertices(ValueError):
    pass


class CpdInvariantError(AssertionError):
    """Raised when an operation that is guaranteed to return a valid cycle does not."""


@dataclass(frozen=True)
class Cpd:
    """A validated, n-periodic, counterclockwise strictly convex vertex cycle.

    Direct construction skips validation; use :func:`validate` for untrusted input.
    """

    vertices: tuple[Pt, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, k: int) -> Pt:
        return self.vertices[k % len(self.vertices)]

    def edge(self, k: int) -> Vec2:
        return self[k + 1] - self[k]

    def edges(self) -> list[Vec2]:
        return [self.edge(k) for k in range(len(self))]

    def rotated(self, p: int) -> "Cpd":
        n = len(self)
        return Cpd(tuple(self[p + k] for k in range(n)))

    def canonical(self) -> "Cpd":
        """Rotate so the lexicographically smallest vertex comes first."""
        start = min(range(len(self)), key=lambda k: self.vertices[k])
        return self.rotated(start)

    def area(self) -> Fraction:
        n = len(self)
        twice = sum(self[k].x * self[k + 1].y - self[k + 1].x * self[k].y for k in range(n))
        return Fraction(twice, 2)

    def to_json(self) -> list[list[str]]:
        return [p.to_json() for p in self.vertices]

    @classmethod
    def from_json(cls, data) -> "Cpd":
        return validate([Pt.from_json(p) for p in data])


QuadrantPattern = list[frozenset[Quadrant]]


def _scaled_to_integers(points: Sequence[Pt]) -> list[tuple[int, int]]:
    # a positive common scale leaves every determinant sign unchanged
    scale = math.lcm(*(Fraction(c).denominator for p in points for c in p))
    return [(int(p[0] * scale), int(p[1] * scale)) for p in points]


def find_violation(points: Sequence[Pt]) -> tuple[int, int] | None:
    """First (p, q) with det(A_p A_{p+1}, A_p A_q) <= 0, indices cyclic."""
    pts = _scaled_to_integers(points)
    n = len(pts)
    for p in range(n):
        ax, ay = pts[p]
        bx, by = pts[(p + 1) % n]
        ex, ey = bx - ax, by - ay
        for q in range(n):
            if q == p or q == (p + 1) % n:
                continue
            qx, qy = pts[q]
            if ex * (qy - ay) - ey * (qx - ax) <= 0:
                return p, q
    return None


def validate(points: Sequence[Pt]) -> Cpd:
    pts = tuple(points)
    if len(pts) < 3:
        raise TooFewVertices(f"a convex cycle needs at least 3 vertices, got {len(pts)}")
    bad = find_violation(pts)
    if bad is not None:
        raise NotConvexDirect(*bad)
    return Cpd(pts)


def is_valid(points: Sequence[Pt]) -> bool:
    return len(points) >= 3 and find_violation(points) is None


def reduce(c: Cpd, index: int) -> Cpd:
    """Delete one vertex; the remainder of an n >= 4 cycle is again a valid cycle."""
    n = len(c)
    if n <= 3:
        raise TooFewVertices("cannot delete a vertex from a triangle")
    index %= n
    rest = c.vertices[:index] + c.vertices[index + 1:]
    bad = find_violation(rest)
    if bad is not None:
        raise CpdInvariantError(f"reduction at {index} broke convexity at {bad}")
    return Cpd(rest)


def diagonals_cross(c: Cpd, k: int) -> bool:
    """Whether [A_0, A_k] and [A_{n-1}, A_1] cross transversally."""
    n = len(c)
    if n < 4 or not 2 <= k <= n - 2:
        raise IndexError(f"diagonal index k={k} outside [2, {n - 2}] for n={n}")
    return segments_cross(c[0], c[k], c[n - 1], c[1])


def edge_quadrants(c: Cpd) -> QuadrantPattern:
    return [quadrant_set(e) for e in c.edges()]


def no_consecutive_same_quadrant(c: Cpd) -> bool:
    es = c.edges()
    n = len(es)
    return not any(shares_quadrant(es[k], es[(k + 1) % n]) for k in range(n))


def check_n_le_4(c: Cpd) -> bool:
    """The implication "no consecutive edges share a quadrant => n <= 4" on this instance."""
    return len(c) <= 4 or not no_consecutive_same_quadrant(c)


def convex_hull(points: Sequence[Pt]) -> list[Pt]:
    """Monotone chain hull, counterclockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return list(pts)

    def half(seq):
        chain: list[Pt] = []
        for p in seq:
            while len(chain) >= 2 and det2(chain[-1] - chain[-2], p - chain[-2]) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def random_cpd(rng: random.Random, max_vertices: int = 12, denominator: int = 12,
               span: int = 4, min_vertices: int = 3) -> Cpd:
    """Hull of random points with coordinates in ``(1/denominator) * Z``.

    Hull size is not controlled directly; half the draws come from a thin
    annulus so that large hulls show up often enough.
    """
    lim = span * denominator
    while True:
        k = rng.randint(min_vertices, max(min_vertices, 2 * max_vertices))
        if rng.random() < 0.5:
            pts = [Pt(rng.randint(-lim, lim), rng.randint(-lim, lim)) for _ in range(k)]
        else:
            pts = [_near_circle(rng, lim) for _ in range(k)]
        # hull on integers, then rescale: exact and much cheaper than Fractions
        hull = convex_hull(pts)
        if min_vertices <= len(hull) <= max_vertices:
            return validate([Pt(Fraction(p.x, denominator), Fraction(p.y, denominator)) for p in hull])


def _near_circle(rng: random.Random, radius: int) -> Pt:
    hi = radius * radius
    lo = hi * 81 // 100
    while True:
        a = rng.randint(-radius, radius)
        b = rng.randint(-radius, radius)
        if lo <= a * a + b * b <= hi:
            return Pt(a, b)


def cpd_list_to_json(cells: Sequence[Cpd]) -> str:
    return json.dumps([c.to_json() for c in cells])
