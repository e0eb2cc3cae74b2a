"""
Classes along a line of reduced spaces
======================================

The reduced class moves affinely with the level; its slope is the Euler class.
"""
from fractions import Fraction

from hamedge.dhline import (
    DHPath,
    H2Class,
    dh_class_at,
    euler_from_slope,
    linear_dependence,
    omega0_from_lengths,
    polygon_class,
    scale_factor,
)
from hamedge.errors import DegeneratePath

basis = ("x", "y")
path = DHPath(H2Class(basis, (1, 2)), H2Class(basis, (Fraction(1, 3), -1)), ell=3)
a, b = dh_class_at(path, 1), dh_class_at(path, Fraction(5, 2))
print("slope from two samples:", euler_from_slope(a, 1, b, Fraction(5, 2)))

# Lengthening edge j of a polygon moves the class along e(xi_j).
alpha = (1, 1, 1, 2)
e = euler_from_slope(polygon_class(alpha, 2, 0), 0, polygon_class(alpha, 2, Fraction(1, 2)), Fraction(1, 2))
print("polygon slope:", e)
print("proportional to the starting class?", linear_dependence(omega0_from_lengths(alpha), e))

# When the slope is a multiple s of the class, the class just rescales.
print("s=1/2, ell=3:", scale_factor(Fraction(1, 2), 3))
try:
    scale_factor(-1, 2)
except DegeneratePath as exc:
    print("s=-1, ell=2:", exc)
