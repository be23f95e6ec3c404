"""Exact algebra: rationals, polynomials, rational functions, series."""
from fractions import Fraction

from .poly import Poly
from .ratfunc import RatFunc
from .series import INFINITY, LaurentSeries, compose, revert, series_expand
from .multi import MultiRatFunc, principal_part, ratfunc_arith, residue_at, substitute
from .mpoly import MPoly, interpolate_grid

Rational = Fraction

__all__ = [
    "Fraction", "Rational", "Poly", "RatFunc", "LaurentSeries", "MultiRatFunc", "MPoly",
    "INFINITY", "series_expand", "compose", "revert", "residue_at", "principal_part",
    "substitute", "ratfunc_arith", "interpolate_grid",
]
