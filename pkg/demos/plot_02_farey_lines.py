"""
The line family
===============

Lines ``u*x + v*y = w`` with ``|u| <= m``, ``|v| <= n`` that meet the unit
square, each stored once in primitive form.
"""
from farey_complex.farey_lines import (
    FareyParams,
    enumerate_lines,
    reflect_x,
    reflect_y,
    sorted_lines,
)

lines = enumerate_lines(FareyParams(1, 1))
print(len(lines), "lines for m = n = 1:")
for l in sorted_lines(lines):
    print("  ", l)

# The count grows quickly but stays under (2m+1)(2n+1)(2m+2n+1).
for m, n in [(1, 1), (2, 2), (4, 3), (6, 6)]:
    count = len(enumerate_lines(FareyParams(m, n)))
    bound = (2 * m + 1) * (2 * n + 1) * (2 * m + 2 * n + 1)
    print(f"m={m} n={n}: {count:4d} lines, bound {bound}")

# Mirroring the square across y = 1/2 or x = 1/2 permutes the family.
family = enumerate_lines(FareyParams(4, 3))
print("closed under reflect_x:", {reflect_x(l) for l in family} == family)
print("closed under reflect_y:", {reflect_y(l) for l in family} == family)
