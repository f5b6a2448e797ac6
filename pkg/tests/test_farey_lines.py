import itertools
import json
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from farey_complex.exact_geom import Pt
from farey_complex.farey_lines import (
    UNIT_SQUARE,
    FareyParams,
    PrimitiveLine,
    RectWindow,
    clip_to_rect,
    enumerate_lines,
    is_member,
    line_through,
    lines_from_json,
    lines_to_json,
    meets_rect,
    reflect_x,
    reflect_y,
    swap_xy,
)

P = PrimitiveLine.normalized


def _touches_square_oracle(u, v, w):
    """Independent of the corner-sign rule: look for a point of the line on one of the sides."""
    for t in (0, 1):
        if v != 0 and 0 <= F(w - u * t, v) <= 1:
            return True
        if u != 0 and 0 <= F(w - v * t, u) <= 1:
            return True
    return False


def _oracle_family(m, n):
    out = set()
    for u, v, w in itertools.product(range(-m, m + 1), range(-n, n + 1), range(-(m + n), m + n + 1)):
        if (u, v) == (0, 0) or not _touches_square_oracle(u, v, w):
            continue
        g = math.gcd(math.gcd(u, v), w)
        u2, v2, w2 = u // g, v // g, w // g
        if u2 < 0 or (u2 == 0 and v2 < 0):
            u2, v2, w2 = -u2, -v2, -w2
        out.add((u2, v2, w2))
    return out


def test_normalization():
    assert P(-2, 4, 6) == (1, -2, -3)
    assert P(0, -3, 3) == (0, 1, -1)
    with pytest.raises(ValueError):
        P(0, 0, 1)


def test_params_validation():
    with pytest.raises(ValueError):
        FareyParams(0, 1)
    with pytest.raises(ValueError):
        RectWindow.of(1, 0, 0, 1)


@pytest.mark.parametrize("line, expected", [
    (P(1, 1, 0), True),   # corner (0,0) only
    (P(1, 1, 1), True),
    (P(1, 0, 2), False),
    (P(1, 1, 2), True),   # corner (1,1)
    (P(1, 1, 3), False),
])
def test_meets_unit_square(line, expected):
    assert meets_rect(line, UNIT_SQUARE) is expected


def test_enumerate_d11_matches_hand_list():
    expected = {P(1, 0, 0), P(1, 0, 1), P(0, 1, 0), P(0, 1, 1),
                P(1, 1, 0), P(1, 1, 1), P(1, 1, 2),
                P(1, -1, -1), P(1, -1, 0), P(1, -1, 1)}
    got = enumerate_lines(FareyParams(1, 1))
    assert got == expected
    assert P(-1, 1, 0) in got


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 1), (2, 3), (3, 3)])
def test_enumerate_matches_bruteforce_oracle(m, n):
    assert enumerate_lines(FareyParams(m, n)) == _oracle_family(m, n)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 2), (4, 3), (5, 6)])
def test_family_invariants(m, n):
    p = FareyParams(m, n)
    lines = enumerate_lines(p)
    assert len(lines) <= (2 * m + 1) * (2 * n + 1) * (2 * m + 2 * n + 1)
    for l in (P(1, 0, 0), P(1, 0, 1), P(0, 1, 0), P(0, 1, 1), P(1, -1, 0), P(1, 1, 1)):
        assert l in lines
    assert all(meets_rect(l, UNIT_SQUARE) and is_member(l, p) for l in lines)
    assert {reflect_x(l) for l in lines} == lines
    assert {reflect_y(l) for l in lines} == lines
    assert {swap_xy(l) for l in lines} == enumerate_lines(p.swapped())


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 2), st.integers(0, 2))
def test_family_is_monotone(m, n, dm, dn):
    assert enumerate_lines(FareyParams(m, n)) <= enumerate_lines(FareyParams(m + dm, n + dn))


def test_enumerate_on_window():
    w = RectWindow.of(-2, 3, -2, 3)
    lines = enumerate_lines(FareyParams(1, 1), w)
    assert all(meets_rect(l, w) for l in lines)
    # x = k for k in -2..3, y likewise, x+y in -4..6, x-y in -5..5
    assert len(lines) == 6 + 6 + 11 + 11


@pytest.mark.parametrize("fn, line, expected", [
    (reflect_x, P(0, 1, 0), P(0, 1, 1)),
    (reflect_x, P(1, 0, 0), P(1, 0, 0)),
    (reflect_x, P(1, -1, 0), P(1, 1, 1)),
    (reflect_y, P(1, 0, 0), P(1, 0, 1)),
    (reflect_y, P(0, 1, 0), P(0, 1, 0)),
    (reflect_y, P(1, 1, 1), P(1, -1, 0)),
])
def test_reflections(fn, line, expected):
    assert fn(line) == expected
    assert fn(fn(line)) == line


def test_line_through_and_clip():
    assert line_through(Pt.of(0, 0), Pt.of("1/2", "1/2")) == P(1, -1, 0)
    assert line_through(Pt.of("1/2", "1/2"), Pt.of(1, "1/2")) == P(0, 2, 1)
    assert clip_to_rect(P(1, 1, 1), UNIT_SQUARE) == (Pt.of(0, 1), Pt.of(1, 0))
    assert clip_to_rect(P(1, 1, 0), UNIT_SQUARE) is None
    assert clip_to_rect(P(1, 0, 0), UNIT_SQUARE) == (Pt.of(0, 0), Pt.of(0, 1))


def test_json_roundtrip():
    lines = enumerate_lines(FareyParams(2, 1))
    text = lines_to_json(lines)
    assert set(lines_from_json(text)) == lines
    assert all(set(d) == {"u", "v", "w"} for d in json.loads(text))
