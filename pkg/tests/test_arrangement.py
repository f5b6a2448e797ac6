from fractions import Fraction as F

import pytest

from farey_complex import arrangement as arr
from farey_complex.cpd import is_valid
from farey_complex.exact_geom import Pt
from farey_complex.farey_lines import (
    UNIT_SQUARE,
    FareyParams,
    PrimitiveLine,
    RectWindow,
    enumerate_lines,
    reflect_point_x,
    reflect_point_y,
)

P = PrimitiveLine.normalized


def pts(*ps):
    return tuple(Pt.of(*p) for p in ps)


CF11 = [
    pts((0, 0), ("1/2", "1/2"), (0, 1)),
    pts((0, 0), (1, 0), ("1/2", "1/2")),
    pts((0, 1), ("1/2", "1/2"), (1, 1)),
    pts(("1/2", "1/2"), (1, 0), (1, 1)),
]


def cells_of(m, n, rect=UNIT_SQUARE):
    s = arr.build(enumerate_lines(FareyParams(m, n)), rect)
    return s, arr.bounded_cells(s)


def test_empty_line_set():
    s = arr.build([], UNIT_SQUARE)
    assert (len(s.vertices), len(s.edges), len(s.faces)) == (4, 4, 2)
    cells = arr.bounded_cells(s)
    assert [c.vertices for c in cells] == [pts((0, 0), (1, 0), (1, 1), (0, 1))]
    assert arr.area(cells[0]) == 1


def test_single_diagonal():
    s = arr.build([P(1, -1, 0)], UNIT_SQUARE)
    cells = arr.bounded_cells(s)
    assert len(cells) == 2
    # y = x only meets the frame at two corners: no new vertex
    assert len(s.vertices) == 4 and len(s.edges) == 5
    assert s.euler_characteristic() == 2


def test_cf11_hand_construction():
    s, cells = cells_of(1, 1)
    assert [c.vertices for c in cells] == CF11
    assert all(arr.area(c) == F(1, 4) for c in cells)
    assert (len(s.vertices), len(s.edges), len(s.faces)) == (5, 8, 5)


@pytest.mark.parametrize("tri, expected", [
    (pts((0, 0), (1, 0), ("1/2", "1/2")), F(1, 4)),
    (pts((0, 0), (1, 0), (0, 1)), F(1, 2)),
])
def test_area(tri, expected):
    from farey_complex.cpd import validate
    assert arr.area(arr.Cell(validate(tri), frozenset())) == expected


def _separates(line, vertices):
    signs = {(v > 0) - (v < 0) for v in (line.value(p) for p in vertices)}
    return {1, -1} <= signs


@pytest.mark.parametrize("m, n", [(1, 2), (2, 2), (3, 2), (2, 4)])
def test_cells_are_components(m, n):
    """Brute force, independent of the half-edge walk: every cell is convex, no family
    line cuts it, every edge lies on a family line, and the cells tile the square."""
    s, cells = cells_of(m, n)
    lines = enumerate_lines(FareyParams(m, n))
    assert sum(arr.area(c) for c in cells) == 1
    assert s.euler_characteristic() == 2
    for c in cells:
        assert is_valid(c.vertices)
        assert not any(_separates(l, c.vertices) for l in lines)
        g = arr.centroid(c)
        assert all(l.value(g) != 0 for l in lines)
        k = len(c)
        for i in range(k):
            a, b = c.vertices[i], c.vertices[(i + 1) % k]
            assert any(l.value(a) == 0 and l.value(b) == 0 for l in c.incident_lines)
        assert c.incident_lines <= lines


@pytest.mark.parametrize("m, n", [(2, 2), (3, 1), (4, 3)])
def test_symmetries_permute_cells(m, n):
    _, cells = cells_of(m, n)
    shapes = {frozenset(c.vertices) for c in cells}
    for reflect in (reflect_point_x, reflect_point_y):
        assert {frozenset(reflect(p) for p in c.vertices) for c in cells} == shapes


def test_canonical_and_deterministic():
    _, a = cells_of(3, 2)
    _, b = cells_of(3, 2)
    assert a == b
    for c in a:
        assert c.vertices[0] == min(c.vertices)
        assert c.boundary.area() > 0


def test_window_build_tiles_window():
    w = RectWindow.of("-1/2", 2, -1, "3/2")
    s = arr.build(enumerate_lines(FareyParams(2, 1), w), w)
    cells = arr.bounded_cells(s)
    assert sum(arr.area(c) for c in cells) == w.area()
    assert s.euler_characteristic() == 2
    assert all(is_valid(c.vertices) for c in cells)


def test_large_coefficients_fall_back_to_python_ints():
    w = RectWindow.of(0, 1, 0, 1)
    big = 3 * 10**7
    lines = [P(big, 1, big // 2), P(1, -1, 0)]
    s = arr.build(lines, w)
    cells = arr.bounded_cells(s)
    assert sum(arr.area(c) for c in cells) == 1
    assert s.euler_characteristic() == 2


def test_json_roundtrip():
    s, cells = cells_of(2, 1)
    text = arr.subdivision_to_json(s, cells)
    assert arr.cells_from_json(text) == cells
    assert '"1/2"' in text


def test_numpy_and_python_intersections_agree():
    import numpy as np

    w = RectWindow.of("-1/3", "4/3", 0, 1)
    lines = sorted(enumerate_lines(FareyParams(3, 2), w) | set(w.boundary_lines()))
    a = arr._pairwise_vertices(np.array([tuple(l) for l in lines], dtype=np.int64), w)
    b = arr._pairwise_vertices_py([tuple(l) for l in lines], w)
    assert a[0].tolist() == b[0].tolist()
    assert a[1].tolist() == b[1].tolist() and a[2].tolist() == b[2].tolist()


def _chord_formula_face_count(lines, rect):
    """Faces of a chord arrangement in a convex region, by incremental counting:
    1 + #chords + sum over interior crossing points of (chords through it - 1)."""
    chords = []
    for l in lines:
        corner_signs = {(v > 0) - (v < 0) for v in (l.value(c) for c in rect.corners())}
        if {1, -1} <= corner_signs:  # passes through the open rectangle
            chords.append(l)
    through: dict[Pt, set] = {}
    for i, a in enumerate(chords):
        for b in chords[i + 1:]:
            z = a.u * b.v - b.u * a.v
            if z == 0:
                continue
            p = Pt(F(a.w * b.v - b.w * a.v, z), F(a.u * b.w - b.u * a.w, z))
            if rect.x_min < p.x < rect.x_max and rect.y_min < p.y < rect.y_max:
                through.setdefault(p, set()).update((a, b))
    return 1 + len(chords) + sum(len(s) - 1 for s in through.values())


@pytest.mark.parametrize("m, n, rect", [
    (1, 1, UNIT_SQUARE), (2, 2, UNIT_SQUARE), (4, 3, UNIT_SQUARE),
    (2, 1, RectWindow.of(-1, 2, "-1/2", 1)),
])
def test_face_count_matches_chord_formula(m, n, rect):
    lines = enumerate_lines(FareyParams(m, n), rect)
    cells = arr.bounded_cells(arr.build(lines, rect))
    assert len(cells) == _chord_formula_face_count(sorted(lines), rect)
