"""Planar subdivision of a rectangle by a finite set of integer lines.

Vertices are computed in homogeneous integer form ``(X, Y, Z)`` with ``Z > 0``
and ``gcd(X, Y, Z) = 1``, which makes exact deduplication a plain equality
test. Pairwise intersections are vectorized with integer numpy arrays; the
half-edge walk that extracts faces is plain Python over exact keys.
"""
from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .cpd import Cpd
from .exact_geom import Pt
from .farey_lines import PrimitiveLine, RectWindow, meets_rect, sorted_lines

# above this, products in the intersection formulas could overflow int64
_INT64_SAFE = 1 << 20


@dataclass(frozen=True)
class Cell:
    boundary: Cpd
    incident_lines: frozenset[PrimitiveLine]

    @property
    def vertices(self) -> tuple[Pt, ...]:
        return self.boundary.vertices

    def __len__(self) -> int:
        return len(self.boundary)

    def to_json(self) -> dict:
        return {
            "vertices": self.boundary.to_json(),
            "lines": [l.to_json() for l in sorted_lines(self.incident_lines)],
        }


@dataclass(frozen=True)
class Subdivision:
    rect: RectWindow
    lines: tuple[PrimitiveLine, ...]
    vertices: tuple[Pt, ...]
    edges: tuple[tuple[int, int], ...]
    edge_lines: tuple[int, ...]
    faces: tuple[tuple[int, ...], ...]
    face_edge_lines: tuple[tuple[int, ...], ...]
    outer_face: int
    # vertex ids carried by each line, in order along the line
    line_vertices: tuple[tuple[int, ...], ...]
    # normalized homogeneous (X, Y, Z), Z > 0, parallel to ``vertices``
    vertices_hom: tuple[tuple[int, int, int], ...] = ()

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)


def _pairwise_vertices(coef: np.ndarray, rect: RectWindow):
    """Exact intersections of all line pairs, restricted to the closed rectangle.

    Returns ``(points, line_idx, point_idx)`` where ``points`` is an (V, 3)
    array of normalized homogeneous coordinates and the two index arrays list
    every (line, vertex) incidence.
    """
    L = len(coef)
    i, j = np.triu_indices(L, k=1)
    u1, v1, w1 = coef[i, 0], coef[i, 1], coef[i, 2]
    u2, v2, w2 = coef[j, 0], coef[j, 1], coef[j, 2]
    Z = u1 * v2 - u2 * v1
    keep = Z != 0
    i, j = i[keep], j[keep]
    u1, v1, w1, u2, v2, w2, Z = (a[keep] for a in (u1, v1, w1, u2, v2, w2, Z))
    X = w1 * v2 - w2 * v1
    Y = u1 * w2 - u2 * w1
    neg = Z < 0
    X = np.where(neg, -X, X)
    Y = np.where(neg, -Y, Y)
    Z = np.where(neg, -Z, Z)

    inside = np.ones(len(Z), dtype=bool)
    for lo, hi, N in ((rect.x_min, rect.x_max, X), (rect.y_min, rect.y_max, Y)):
        # lo <= N/Z <= hi with Z > 0
        inside &= N * lo.denominator >= lo.numerator * Z
        inside &= N * hi.denominator <= hi.numerator * Z
    i, j, X, Y, Z = i[inside], j[inside], X[inside], Y[inside], Z[inside]

    g = np.gcd(np.gcd(X, Y), Z)
    hom = np.stack([X // g, Y // g, Z // g], axis=1)
    points, inverse = np.unique(hom, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    line_idx = np.concatenate([i, j])
    point_idx = np.concatenate([inverse, inverse])
    inc = np.unique(np.stack([line_idx, point_idx], axis=1), axis=0)
    return points, inc[:, 0], inc[:, 1]


def _pairwise_vertices_py(lines, rect: RectWindow):
    """Same contract as :func:`_pairwise_vertices`, unbounded Python integers."""
    index: dict[tuple[int, int, int], int] = {}
    inc = set()
    for i, (u1, v1, w1) in enumerate(lines):
        for j in range(i + 1, len(lines)):
            u2, v2, w2 = lines[j]
            z = u1 * v2 - u2 * v1
            if z == 0:
                continue
            x = w1 * v2 - w2 * v1
            y = u1 * w2 - u2 * w1
            if z < 0:
                x, y, z = -x, -y, -z
            if not (rect.x_min <= Fraction(x, z) <= rect.x_max
                    and rect.y_min <= Fraction(y, z) <= rect.y_max):
                continue
            g = math.gcd(x, y, z)
            key = (x // g, y // g, z // g)
            vid = index.setdefault(key, len(index))
            inc.add((i, vid))
            inc.add((j, vid))
    # match the numpy path: vertex ids in lexicographic order of (X, Y, Z)
    order = sorted(index, key=lambda k: k)
    renum = {index[k]: r for r, k in enumerate(order)}
    pairs = sorted((li, renum[v]) for li, v in inc)
    points = np.array(order, dtype=object).reshape(-1, 3)
    return (points, np.array([li for li, _ in pairs], dtype=np.int64),
            np.array([v for _, v in pairs], dtype=np.int64))


def _direction_cmp(a: tuple[int, int], b: tuple[int, int]) -> int:
    """Counterclockwise angular order of nonzero integer vectors, starting at +x."""
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def build(lines: Iterable[PrimitiveLine], rect: RectWindow) -> Subdivision:
    all_lines = {l for l in lines if meets_rect(l, rect)}
    all_lines.update(rect.boundary_lines())
    ordered = tuple(sorted_lines(all_lines))
    rect_parts = [abs(c.numerator) for c in (rect.x_min, rect.x_max, rect.y_min, rect.y_max)]
    rect_parts += [c.denominator for c in (rect.x_min, rect.x_max, rect.y_min, rect.y_max)]
    if max(max(abs(c) for l in ordered for c in l), *rect_parts) > _INT64_SAFE:
        points, inc_line, inc_point = _pairwise_vertices_py([tuple(l) for l in ordered], rect)
    else:
        coef = np.array([tuple(l) for l in ordered], dtype=np.int64)
        points, inc_line, inc_point = _pairwise_vertices(coef, rect)
    hom = [tuple(int(c) for c in row) for row in points]
    vertices = tuple(Pt(Fraction(x, z), Fraction(y, z)) for x, y, z in hom)

    # split every line at the vertices it carries, ordered along (-v, u)
    edges: list[tuple[int, int]] = []
    edge_lines: list[int] = []
    half_dir: dict[tuple[int, int], tuple[int, int]] = {}
    order = np.argsort(inc_line, kind="stable")
    inc_line, inc_point = inc_line[order], inc_point[order]
    bounds = np.searchsorted(inc_line, np.arange(len(ordered) + 1))
    line_vertices = []
    for li, line in enumerate(ordered):
        on_line = inc_point[bounds[li]:bounds[li + 1]].tolist()
        d = (-line.v, line.u)
        on_line.sort(key=lambda p: Fraction(d[0] * hom[p][0] + d[1] * hom[p][1], hom[p][2]))
        line_vertices.append(tuple(on_line))
        for a, b in zip(on_line, on_line[1:]):
            edges.append((a, b))
            edge_lines.append(li)
            half_dir[(a, b)] = d
            half_dir[(b, a)] = (-d[0], -d[1])

    # rank every direction once, then sort each fan by rank
    dirs = sorted(set(half_dir.values()), key=functools.cmp_to_key(_direction_cmp))
    rank = {d: r for r, d in enumerate(dirs)}
    fans: dict[int, list[int]] = {}
    for a, b in half_dir:
        fans.setdefault(a, []).append(b)
    position: dict[tuple[int, int], int] = {}
    for a, outs in fans.items():
        outs.sort(key=lambda b: rank[half_dir[(a, b)]])
        for k, b in enumerate(outs):
            position[(a, b)] = k

    line_of = {}
    for (a, b), li in zip(edges, edge_lines):
        line_of[(a, b)] = li
        line_of[(b, a)] = li

    def successor(a: int, b: int) -> tuple[int, int]:
        # face on the left: leave b along the edge just clockwise of b->a
        outs = fans[b]
        return b, outs[position[(b, a)] - 1]

    seen: set[tuple[int, int]] = set()
    faces: list[tuple[int, ...]] = []
    face_lines: list[tuple[int, ...]] = []
    for start in half_dir:
        if start in seen:
            continue
        cycle, lines_seen = [], []
        h = start
        while h not in seen:
            seen.add(h)
            cycle.append(h[0])
            lines_seen.append(line_of[h])
            h = successor(*h)
        faces.append(tuple(cycle))
        face_lines.append(tuple(lines_seen))

    outer = [k for k, f in enumerate(faces) if _twice_area(f, hom) < 0]
    if len(outer) != 1:
        raise RuntimeError(f"expected exactly one outer face, found {len(outer)}")

    return Subdivision(
        rect=rect,
        lines=ordered,
        vertices=vertices,
        edges=tuple(edges),
        edge_lines=tuple(edge_lines),
        faces=tuple(faces),
        face_edge_lines=tuple(face_lines),
        outer_face=outer[0],
        line_vertices=tuple(line_vertices),
        vertices_hom=tuple(hom),
    )


def _twice_area(cycle: tuple[int, ...], hom) -> Fraction:
    total = Fraction(0)
    n = len(cycle)
    for k in range(n):
        x1, y1, z1 = hom[cycle[k]]
        x2, y2, z2 = hom[cycle[(k + 1) % n]]
        total += Fraction(x1 * y2 - x2 * y1, z1 * z2)
    return total


def _hom_orient(hom, a: int, b: int, c: int) -> int:
    # sign of the 3x3 determinant; all Z > 0 so it equals the planar orientation
    (x1, y1, z1), (x2, y2, z2), (x3, y3, z3) = hom[a], hom[b], hom[c]
    d = x1 * (y2 * z3 - y3 * z2) - y1 * (x2 * z3 - x3 * z2) + z1 * (x2 * y3 - x3 * y2)
    return (d > 0) - (d < 0)


def bounded_cells(s: Subdivision) -> list[Cell]:
    """Every bounded face as a canonical counterclockwise cycle, sorted."""
    cells = []
    for k, (cycle, lines) in enumerate(zip(s.faces, s.face_edge_lines)):
        if k == s.outer_face:
            continue
        n = len(cycle)
        # a vertex where the boundary runs straight through is not a corner
        corners = [s.vertices[cycle[i]] for i in range(n)
                   if _hom_orient(s.vertices_hom, cycle[i - 1], cycle[i], cycle[(i + 1) % n]) != 0]
        cells.append(Cell(Cpd(tuple(corners)).canonical(),
                          frozenset(s.lines[li] for li in lines)))
    cells.sort(key=lambda c: c.vertices)
    return cells


def area(c: Cell) -> Fraction:
    return c.boundary.area()


def centroid(c: Cell) -> Pt:
    """Vertex average; strictly interior for any convex cell."""
    n = len(c)
    return Pt(sum((p.x for p in c.vertices), Fraction(0)) / n,
              sum((p.y for p in c.vertices), Fraction(0)) / n)


def touches_frame(c: Cell, rect: RectWindow) -> bool:
    return any(rect.on_frame(p) for p in c.vertices)


def subdivision_to_json(s: Subdivision, cells: list[Cell] | None = None) -> str:
    if cells is None:
        cells = bounded_cells(s)
    doc = {
        "rect": s.rect.to_json(),
        "vertices": [p.to_json() for p in s.vertices],
        "cells": [c.to_json() for c in cells],
    }
    return json.dumps(doc, indent=1)


def cells_from_json(text: str) -> list[Cell]:
    doc = json.loads(text)
    return [
        Cell(Cpd.from_json(c["vertices"]),
             frozenset(PrimitiveLine.normalized(d["u"], d["v"], d["w"]) for d in c["lines"]))
        for c in doc["cells"]
    ]
