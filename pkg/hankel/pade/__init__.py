"""Padé approximants module"""
from hankel.pade.polynomial import IntPoly, ZERO_DEGREE
from hankel.pade.series import RatSeries
from hankel.pade.approximant import (
    ErrorExpansionCheck,
    approximant_series,
    error_series,
    hankel_of_series,
    integer_cleared,
    is_equivalent,
    pade,
    solve_fraction_free,
    verify_error_expansion,
)

__all__ = [
    "IntPoly",
    "ZERO_DEGREE",
    "RatSeries",
    "ErrorExpansionCheck",
    "approximant_series",
    "error_series",
    "hankel_of_series",
    "integer_cleared",
    "is_equivalent",
    "pade",
    "solve_fraction_free",
    "verify_error_expansion",
]
