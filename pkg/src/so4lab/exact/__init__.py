"""Exact scalar arithmetic kernel: rationals, cyclotomics, rational functions
in two symbols, truncated power series, and dense linear algebra over any of
these.  Rationals are stdlib `fractions.Fraction` throughout.
"""

from fractions import Fraction

from .cyclotomic import Cyclotomic, cyclotomic_polynomial, gauss_sum_sqrt, zeta
from .linalg import ExactMatrix, solve_linear_exact
from .ratfunc import (
    A,
    B,
    LAURENT_WINDOW,
    MalformedInputError,
    RationalFunction2,
    normalize_rational_function,
)
from .series import SingularExpansionError, TruncatedSeries, expand_rational_series

__all__ = [
    "Fraction",
    "Cyclotomic",
    "zeta",
    "gauss_sum_sqrt",
    "cyclotomic_polynomial",
    "ExactMatrix",
    "solve_linear_exact",
    "RationalFunction2",
    "normalize_rational_function",
    "MalformedInputError",
    "A",
    "B",
    "LAURENT_WINDOW",
    "TruncatedSeries",
    "expand_rational_series",
    "SingularExpansionError",
]
