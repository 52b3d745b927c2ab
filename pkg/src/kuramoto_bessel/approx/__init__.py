"""Bounds and approximations of the order parameter r(K)."""

from kuramoto_bessel.approx.bounds import (
    bound_A,
    bound_general,
    bound_lower_sqrt,
    bound_upper_half,
    check_coupling,
)
from kuramoto_bessel.approx.lagrange import (
    LPOL_DENOMINATOR,
    LPOL_NUMERATOR,
    lagrange_L,
    rational_Lpol,
)
from kuramoto_bessel.approx.table import (
    PUBLISHED_ERROR_TABLE,
    approximation_row,
    error_table,
    find_lpol_sign_change,
    printed_significant_digits,
)

__all__ = [
    "LPOL_DENOMINATOR",
    "LPOL_NUMERATOR",
    "PUBLISHED_ERROR_TABLE",
    "approximation_row",
    "bound_A",
    "bound_general",
    "bound_lower_sqrt",
    "bound_upper_half",
    "check_coupling",
    "error_table",
    "find_lpol_sign_change",
    "lagrange_L",
    "printed_significant_digits",
    "rational_Lpol",
]
