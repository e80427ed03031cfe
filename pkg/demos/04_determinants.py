"""Closed-form determinants checked against fraction-free elimination.

The Toeplitz-middle factorization turns det P into (y + x*z)**C(n, 2) times a
Toeplitz determinant, which collapses further for special boundaries.
"""
from fractions import Fraction

from wrmatrix import (
    Arithmetic,
    Geometric,
    WrmDescriptor,
    build_wrm,
    det_bareiss,
    det_k2_arithmetic,
    det_k2_geometric,
    det_report,
    det_via_eq11,
    is_middle_diagonal,
)

d = WrmDescriptor.of((2, Fraction(1, 3), -1), (1, 5, 0, 2, 7), (1, 1, -3, 4, 0))
print("via Toeplitz middle:", det_via_eq11(d), "  Bareiss:", det_bareiss(build_wrm(d)))

# Geometric boundaries c*z**i and c*x**j make the middle c*I.
d = WrmDescriptor.from_specs((5, 1, 2), Geometric(3, 2), Geometric(3, 5), 6)
print("\nmiddle diagonal:", is_middle_diagonal(d))
print(det_report(d).to_json_obj())

print("\n(1, y, 1) with boundaries a**i and b**i")
for a, b, y in [(2, 0, 1), (2, 3, 1), (Fraction(1, 2), -4, Fraction(2, 5))]:
    for n in (3, 6):
        P = build_wrm(WrmDescriptor.from_specs((1, y, 1), Geometric(1, a), Geometric(1, b), n))
        print(f"  a={a} b={b} y={y} n={n}: closed {det_k2_geometric(a, b, y, n)}  Bareiss {det_bareiss(P)}")

print("\n(1, y, 1) with boundaries i and -i")
for y in (1, Fraction(-1, 3)):
    for n in range(1, 9):
        P = build_wrm(WrmDescriptor.from_specs((1, y, 1), Arithmetic(0, 1), Arithmetic(0, -1), n))
        closed = det_k2_arithmetic(y, n // 2) if n % 2 == 0 else "(no closed form at odd order)"
        print(f"  y={y} n={n}: Bareiss {det_bareiss(P)}  closed {closed}")
