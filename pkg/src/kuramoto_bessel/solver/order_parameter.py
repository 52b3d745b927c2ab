"""The self-consistency equation r = Ψ_ν(2Kr) of the stochastic Kuramoto model."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from kuramoto_bessel.bessel.kernel import bessel_ratio, psi_derivative
from kuramoto_bessel.core.config import get_config
from kuramoto_bessel.core.exceptions import DomainError, NoBracketError, NoNontrivialRootError
from kuramoto_bessel.core.order import Order, as_order, check_positive
from kuramoto_bessel.core.results import OrderParameterSolution
from kuramoto_bessel.core.types import OrderLike
from kuramoto_bessel.solver.newton import safeguarded_newton

logger = logging.getLogger(__name__)


def existence(order: OrderLike, K: float) -> bool:
    """True when r = Ψ_ν(2Kr) has a positive solution, i.e. K > ν+1.

    Equivalent to a negative slope of r - Ψ_ν(2Kr) at the origin.
    """
    order = as_order(order)
    order.require_nonnegative("existence")
    K = check_positive(K, "K")
    return K > order.nu + 1.0


def origin_slope(order: OrderLike, K: float) -> float:
    """d/dr [r - Ψ_ν(2Kr)] at r = 0, which is 1 - K/(ν+1)."""
    order = as_order(order)
    order.require_nonnegative("origin_slope")
    K = check_positive(K, "K")
    return 1.0 - K / (order.nu + 1.0)


def residual(order: OrderLike, K: float, r: float) -> float:
    """f(r) = r - Ψ_ν(2Kr) for r > 0."""
    order = as_order(order)
    K = check_positive(K, "K")
    r = check_positive(r, "r")
    return r - bessel_ratio(order.nu, 2.0 * K * r)


def _bracket(order: Order, K: float, epsilon: float) -> tuple[float, float]:
    if order.nu == 0.0:
        # √(1-1/K) < r < (1-1/K)^{1/4}
        base = -math.expm1(-math.log(K))
        return max(epsilon, math.sqrt(base)), math.sqrt(math.sqrt(base))
    return epsilon, math.sqrt(1.0 - 0.5 / K)


def _lift_upper(order: Order, K: float, hi: float) -> float:
    """Raise hi by growing ulp steps while r - Ψ_ν(2Kr) rounds negative there.

    At large K the upper bound (1-1/K)^{1/4} agrees with r to within rounding.
    f(1) = 1 - Ψ_ν(2K) ≥ 0, so the loop stops by r = 1.
    """
    step = math.ulp(hi)
    lifted = hi
    while lifted < 1.0 and residual(order, K, lifted) < 0.0:
        lifted = min(1.0, lifted + step)
        step *= 2.0
    if lifted != hi:
        logger.debug(f"upper bracket at K={K!r} lifted from {hi!r} to {lifted!r}")
    return lifted


def _prescan(
    order: Order, K: float, lo: float, hi: float, subdivisions: int
) -> tuple[float, float, int]:
    """Lowest root-holding subinterval of [lo, hi] and the number of roots seen.

    A node where the residual is exactly zero counts as one root and is
    returned as the degenerate interval [node, node].
    """
    rs = np.linspace(lo, hi, subdivisions + 1)
    values = np.array([residual(order, K, float(r)) for r in rs])
    signs = np.sign(values)
    changes = np.nonzero(signs[:-1] * signs[1:] < 0)[0]
    zeros = np.nonzero(signs == 0)[0]
    count = len(changes) + len(zeros)
    if count == 0:
        raise NoBracketError(
            f"r - Ψ_ν(2Kr) keeps one sign on [{lo!r}, {hi!r}] at {order}, K={K!r}"
        )
    if count > 1:
        logger.warning(
            f"{count} sign changes of r - Ψ_ν(2Kr) at {order}, K={K!r}; "
            "returning the lowest root"
        )
    if len(zeros) and (not len(changes) or zeros[0] <= changes[0]):
        node = float(rs[int(zeros[0])])
        return node, node, count
    i = int(changes[0])
    return float(rs[i]), float(rs[i + 1]), count


def solve_r(
    order: OrderLike, K: float, tolerance: float | None = None
) -> OrderParameterSolution:
    """Nontrivial root of r = Ψ_ν(2Kr).

    For ν = 0 the root is searched in [√(1-1/K), (1-1/K)^{1/4}], which is
    known to contain exactly one root.  For ν > 0 the search interval is
    [ε, √(1-1/(2K))] and is pre-scanned for multiple sign changes.

    Args:
        order: Bessel order ν ≥ 0
        K: Coupling strength
        tolerance: Bound on |r - Ψ_ν(2Kr)|, default from [solver] config

    Raises:
        NoNontrivialRootError: K ≤ ν+1
        NoBracketError: the search interval shows no sign change
        ConvergenceError: Newton/bisection hit the iteration cap
    """
    order = as_order(order)
    settings = get_config().get_section("solver")
    if tolerance is None:
        tolerance = float(settings["tolerance"])
    if not tolerance > 0.0:
        raise DomainError(f"tolerance must be > 0, got {tolerance!r}")
    if not existence(order, K):
        raise NoNontrivialRootError(order.nu, float(K))
    K = float(K)

    lo, hi = _bracket(order, K, float(settings["epsilon"]))
    search_lo, search_hi, sign_changes = lo, hi, 1
    if order.nu == 0.0:
        hi = search_hi = _lift_upper(order, K, hi)
    else:
        search_lo, search_hi, sign_changes = _prescan(
            order, K, lo, hi, int(settings["scan_subdivisions"])
        )

    result = safeguarded_newton(
        lambda r: residual(order, K, r),
        lambda r: 1.0 - 2.0 * K * psi_derivative(order, 2.0 * K * r),
        search_lo,
        search_hi,
        tolerance,
        max_iterations=int(settings["max_iterations"]),
    )
    logger.debug(f"r({K!r}) at {order} = {result.root!r} after {result.iterations} steps")
    return OrderParameterSolution(
        K=K,
        order=order,
        r=result.root,
        residual=abs(result.value),
        bracket_lo=lo,
        bracket_hi=hi,
        iterations=result.iterations,
        sign_changes=sign_changes,
    )


def solve_curve(
    order: OrderLike,
    K_values: Iterable[float],
    tolerance: float | None = None,
    max_workers: int | None = None,
) -> list[OrderParameterSolution]:
    """solve_r at every K, returned in input order."""
    order = as_order(order)
    ks = [float(K) for K in K_values]

    def solve(K: float) -> OrderParameterSolution:
        return solve_r(order, K, tolerance)

    if max_workers is not None and max_workers > 1:
        pool = ThreadPoolExecutor(max_workers=max_workers, thread_name_prefix="kbessel-solve")
        with pool:
            return list(pool.map(solve, ks))
    return [solve(K) for K in ks]


__all__ = ["existence", "origin_slope", "residual", "solve_curve", "solve_r"]
