"""Safeguarded Newton iteration on a sign-changing bracket."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

from kuramoto_bessel.core.exceptions import ConvergenceError, NoBracketError

logger = logging.getLogger(__name__)

# Steps this many ulps of x or smaller count as converged
_STEP_ULPS = 4.0


@dataclass(frozen=True)
class NewtonResult:
    """Root returned by ``safeguarded_newton``."""

    root: float
    value: float
    iterations: int


def safeguarded_newton(
    f: Callable[[float], float],
    fprime: Callable[[float], float],
    lo: float,
    hi: float,
    tolerance: float,
    max_iterations: int = 200,
    start: float | None = None,
) -> NewtonResult:
    """Newton's method kept inside [lo, hi], bisecting when a step leaves it.

    Iteration starts from ``start`` (default ``hi``) and stops once |f| ≤
    ``tolerance`` and the steps have stopped shrinking or fallen to a few
    ulps of x.

    Raises:
        NoBracketError: f(lo) and f(hi) have the same sign
        ConvergenceError: ``max_iterations`` steps without meeting the tolerance
    """
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0.0:
        return NewtonResult(root=lo, value=0.0, iterations=0)
    if f_hi == 0.0:
        return NewtonResult(root=hi, value=0.0, iterations=0)
    if (f_lo < 0.0) == (f_hi < 0.0):
        raise NoBracketError(
            f"f does not change sign on [{lo!r}, {hi!r}]: f(lo)={f_lo:.3g}, f(hi)={f_hi:.3g}"
        )

    lo_negative = f_lo < 0.0
    x = hi if start is None else start
    fx = f_hi if start is None else f(x)
    last_step = math.inf

    for iteration in range(max_iterations):
        if fx == 0.0:
            return NewtonResult(root=x, value=fx, iterations=iteration)
        if (fx < 0.0) == lo_negative:
            lo = x
        else:
            hi = x

        slope = fprime(x)
        candidate = x - fx / slope if slope != 0.0 else math.nan
        if not lo < candidate < hi:
            candidate = 0.5 * (lo + hi)
            logger.debug(f"newton step left [{lo!r}, {hi!r}]; bisecting")
        step = abs(candidate - x)
        if abs(fx) <= tolerance and (step >= last_step or step <= _STEP_ULPS * math.ulp(x)):
            logger.debug(f"newton converged in {iteration} steps: x={x!r}, f={fx:.3g}")
            return NewtonResult(root=x, value=fx, iterations=iteration)
        last_step = step
        x = candidate
        fx = f(x)

    if abs(fx) <= tolerance:
        return NewtonResult(root=x, value=fx, iterations=max_iterations)
    raise ConvergenceError(
        f"No convergence after {max_iterations} steps: x={x!r}, |f|={abs(fx):.3g} "
        f"> {tolerance:.3g}"
    )


__all__ = ["NewtonResult", "safeguarded_newton"]
