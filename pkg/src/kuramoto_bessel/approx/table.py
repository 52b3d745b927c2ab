"""Error table of the ν = 0 approximations against the solved r(K)."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from decimal import Decimal

from scipy.optimize import brentq

from kuramoto_bessel.approx.bounds import bound_A, bound_lower_sqrt, bound_upper_half
from kuramoto_bessel.approx.lagrange import lagrange_L, rational_Lpol
from kuramoto_bessel.core.config import get_config
from kuramoto_bessel.core.exceptions import RootNotFoundError
from kuramoto_bessel.core.results import ApproximationRow
from kuramoto_bessel.solver.order_parameter import solve_r

logger = logging.getLogger(__name__)

# Published differences A(K) - r(K) and L_pol(K) - r(K), as printed
PUBLISHED_ERROR_TABLE: dict[float, tuple[str, str]] = {
    1.5: ("0.035677", "0.02818"),
    2.0: ("0.009434", "0.0042565"),
    5.0: ("0.0001994", "-0.000234"),
    10.0: ("0.00001936", "-0.0000372"),
    100.0: ("1.59e-8", "-4.25e-8"),
}


def printed_significant_digits(text: str) -> int:
    """Significant digits of a printed decimal, e.g. "0.00001936" -> 4."""
    return len(Decimal(text).as_tuple().digits)


def approximation_row(K: float, tolerance: float | None = None) -> ApproximationRow:
    """One table row: r(K) from the solver and every ν = 0 approximation."""
    solution = solve_r(0.0, K, tolerance)
    return ApproximationRow(
        K=solution.K,
        r=solution.r,
        lower_sqrt=bound_lower_sqrt(K),
        upper_half=bound_upper_half(K),
        A=bound_A(K),
        L=lagrange_L(K),
        Lpol=rational_Lpol(K),
    )


def error_table(
    K_values: Iterable[float] | None = None, tolerance: float | None = None
) -> list[ApproximationRow]:
    """Rows for each K, by default the published K values.

    Args:
        K_values: Couplings K > 1; default from the [table] config section
        tolerance: Solver tolerance for the reference r(K); default from [table]
    """
    settings = get_config().get_section("table")
    if K_values is None:
        K_values = [float(K) for K in settings["k_values"]]
    if tolerance is None:
        tolerance = float(settings["tolerance"])
    return [approximation_row(K, tolerance) for K in K_values]


def find_lpol_sign_change(k_lo: float = 2.0, k_hi: float = 5.0) -> float:
    """K in [k_lo, k_hi] where L_pol(K) - r(K) changes sign.

    Raises:
        RootNotFoundError: L_pol - r has the same sign at both ends
    """
    tolerance = float(get_config().get_value("table", "tolerance"))

    def difference(K: float) -> float:
        return rational_Lpol(K) - solve_r(0.0, K, tolerance).r

    d_lo, d_hi = difference(k_lo), difference(k_hi)
    if (d_lo < 0.0) == (d_hi < 0.0):
        raise RootNotFoundError(
            f"L_pol - r keeps one sign on [{k_lo:g}, {k_hi:g}]: {d_lo:.3g}, {d_hi:.3g}"
        )
    crossing: float = brentq(difference, k_lo, k_hi, xtol=1e-10)
    logger.debug(f"L_pol - r changes sign at K={crossing!r}")
    return crossing


__all__ = [
    "PUBLISHED_ERROR_TABLE",
    "approximation_row",
    "error_table",
    "find_lpol_sign_change",
    "printed_significant_digits",
]
