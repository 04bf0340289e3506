"""Arbitrary-precision fixture generator for the summa test suite.

Every emitted value is computed twice: once with mpmath's built-in
routines and once through an independently coded high-precision route
(Spouge's Gamma, hand-rolled Euler-MacLaurin zeta, Bessel integral
representations, shifted contour pairs).  Generation aborts unless the two
agree to at least 30 significant digits before rounding to double.
"""

from .generate import generate_all

__all__ = ["generate_all"]
