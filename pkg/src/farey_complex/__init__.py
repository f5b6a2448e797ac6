"""Exact construction and checking of Farey complexes.

The complex of order (m, n) is the unit square minus every line
``u*x + v*y = w`` with integer coefficients, ``|u| <= m``, ``|v| <= n``.
"""
from .arrangement import Cell, Subdivision, area, bounded_cells, build
from .cpd import Cpd, validate
from .exact_geom import Pt, Quadrant, Vec2
from .farey_lines import UNIT_SQUARE, FareyParams, PrimitiveLine, RectWindow, enumerate_lines
from .verifier import VerificationReport, classify, three_point_line, verify_all, window_scan

__all__ = [
    "Cell", "Cpd", "FareyParams", "PrimitiveLine", "Pt", "Quadrant", "RectWindow",
    "Subdivision", "UNIT_SQUARE", "Vec2", "VerificationReport", "area", "bounded_cells",
    "build", "classify", "enumerate_lines", "three_point_line", "validate", "verify_all",
    "window_scan",
]
