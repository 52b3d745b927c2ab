"""Numerical experiments around the inequalities: threshold order, x_ν, crossovers."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from kuramoto_bessel.bessel.amos import gamma_amos_complement, log_gamma_amos, log_omega_amos
from kuramoto_bessel.core.config import get_config
from kuramoto_bessel.core.exceptions import DomainError, RootNotFoundError, ThresholdError
from kuramoto_bessel.core.grid import EvaluationGrid
from kuramoto_bessel.core.order import Order, as_order
from kuramoto_bessel.core.types import FloatArray, OrderLike
from kuramoto_bessel.turan.margins import turaninter_factor

logger = logging.getLogger(__name__)

# Smallest relative tolerance brentq accepts is 4·eps
_BRENT_RTOL = 1e-15


@dataclass(frozen=True)
class OmegaSupremum:
    """sup_x h_ν(x) over a grid, refined near the grid maximum."""

    order: Order
    value: float
    argmax_x: float


def omega_relaxation(order: OrderLike, x: float | FloatArray) -> float | FloatArray:
    """h_ν(x) = Ω_ν(x)^{4/(2ν+1)} + (2/x)Ω_ν(x) - 1.

    With p = 4/(2ν+1), S = √(x² + ab), a = ν+1/2 and b = ν+3/2 this is
    expm1(p·log Ω_ν) + 2/(S + a), exact at both ends of the half-line.
    """
    order = as_order(order)
    order.require_nonnegative("omega_relaxation")
    arr = np.asarray(x, dtype=float)
    a, b = order.nu + 0.5, order.nu + 1.5
    power = 4.0 / (2.0 * order.nu + 1.0)
    root = np.sqrt(arr * arr + a * b)
    value = np.expm1(power * np.asarray(log_omega_amos(order, arr))) + 2.0 / (root + a)
    if np.ndim(x) == 0:
        return float(value)
    return np.asarray(value, dtype=float)


def omega_sup(order: OrderLike, grid: EvaluationGrid | None = None) -> OmegaSupremum:
    """Supremum of h_ν over ``grid`` with a bounded local refinement."""
    order = as_order(order)
    if grid is None:
        grid = _threshold_grid()
    xs = grid.values()
    hs = np.asarray(omega_relaxation(order, xs))
    i = int(np.argmax(hs))
    best_x, best_h = float(xs[i]), float(hs[i])

    if 0 < i < len(xs) - 1:
        # refine in log x between the neighbouring grid points
        lo, hi = math.log(xs[i - 1]), math.log(xs[i + 1])
        result = minimize_scalar(
            lambda t: -float(omega_relaxation(order, math.exp(t))),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": 1e-10},
        )
        refined_h = -float(result.fun)
        if refined_h > best_h:
            best_x, best_h = math.exp(float(result.x)), refined_h

    return OmegaSupremum(order=order, value=best_h, argmax_x=best_x)


def find_omega_threshold(
    tolerance: float,
    nu_lo: float | None = None,
    nu_hi: float | None = None,
    grid: EvaluationGrid | None = None,
) -> float:
    """Smallest ν for which h_ν(x) < 0 for every x > 0, by bisection on ν.

    Assumes sup_x h_ν is positive below the threshold and negative above.

    Raises:
        DomainError: tolerance is not positive
        ThresholdError: the endpoints do not show the sign pattern (+, -)
    """
    if not tolerance > 0.0:
        raise DomainError(f"tolerance must be > 0, got {tolerance!r}")
    settings = get_config().get_section("threshold")
    lo = float(settings["nu_lo"] if nu_lo is None else nu_lo)
    hi = float(settings["nu_hi"] if nu_hi is None else nu_hi)
    if grid is None:
        grid = _threshold_grid()

    sup_lo = omega_sup(lo, grid).value
    sup_hi = omega_sup(hi, grid).value
    if not (sup_lo > 0.0 and sup_hi < 0.0):
        raise ThresholdError(
            f"Expected sup h > 0 at ν={lo} and < 0 at ν={hi}, got {sup_lo:.3g} and {sup_hi:.3g}"
        )

    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        sup_mid = omega_sup(mid, grid).value
        logger.debug(f"threshold bisection: ν={mid:.8f} sup h={sup_mid:.3e}")
        if sup_mid > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _threshold_grid() -> EvaluationGrid:
    settings = get_config().get_section("threshold")
    return EvaluationGrid.logarithmic(
        float(settings["x_min"]), float(settings["x_max"]), int(settings["points"])
    )


def x_nu_equation(order: OrderLike, x: float | FloatArray) -> float | FloatArray:
    """Γ_{ν+1}(x)^{2ν+1}·(2(ν+1)/x + Γ_{ν+1}(x))^{2ν+3} - 1."""
    order = as_order(order)
    arr = np.asarray(x, dtype=float)
    nu = order.nu
    m = nu + 1.0
    shifted = order.shifted()
    log_gamma = log_gamma_amos(shifted, arr)
    complement = gamma_amos_complement(shifted, arr)
    exponent = (2.0 * nu + 1.0) * log_gamma + (2.0 * nu + 3.0) * np.log1p(
        2.0 * m / arr - complement
    )
    value = np.expm1(exponent)
    if np.ndim(x) == 0:
        return float(value)
    return np.asarray(value, dtype=float)


def _first_sign_change(
    fn: Callable[[float], float], xs: FloatArray, values: FloatArray, what: str
) -> float:
    signs = np.sign(values)
    changes = np.nonzero(signs[:-1] * signs[1:] <= 0)[0]
    if len(changes) == 0:
        raise RootNotFoundError(f"No sign change of {what} on [{xs[0]:g}, {xs[-1]:g}]")
    i = int(changes[0])
    if values[i] == 0.0:
        return float(xs[i])
    root: float = brentq(fn, float(xs[i]), float(xs[i + 1]), rtol=_BRENT_RTOL, maxiter=200)
    return root


def x_nu_root(order: OrderLike, tolerance: float = 1e-10) -> float:
    """Positive root x_ν of Γ_{ν+1}^{2ν+1}(2(ν+1)/x + Γ_{ν+1})^{2ν+3} = 1.

    The left side tends to +∞ as x → 0⁺ and to 1 from below as x → ∞.

    Raises:
        RootNotFoundError: no sign change on [1e-6, 1e6], or the residual
            exceeds ``tolerance``
    """
    order = as_order(order)
    order.require_nonnegative("x_nu_root")
    if not tolerance > 0.0:
        raise DomainError(f"tolerance must be > 0, got {tolerance!r}")

    xs = EvaluationGrid.logarithmic(1e-6, 1e6, 1201).values()
    values = np.asarray(x_nu_equation(order, xs))
    root = _first_sign_change(
        lambda t: float(x_nu_equation(order, t)), xs, values, f"the x_ν equation at {order}"
    )
    residual = abs(float(x_nu_equation(order, root)))
    if residual > tolerance:
        raise RootNotFoundError(
            f"x_ν root at {order} has residual {residual:.3g} above tolerance {tolerance:.3g}"
        )
    logger.debug(f"x_ν at {order}: {root!r} (residual {residual:.3g})")
    return root


def find_turaninter_crossover(order: OrderLike, grid: EvaluationGrid | None = None) -> float:
    """First x where margin_turaninter changes sign; exists for 0 < ν < 1/2.

    Raises:
        RootNotFoundError: the margin keeps one sign on the grid
    """
    order = as_order(order)
    order.require_nonnegative("find_turaninter_crossover")
    if grid is None:
        grid = EvaluationGrid.logarithmic(1e-4, 1e4, 401)
    xs = grid.values()
    values = np.array([turaninter_factor(order, float(x)) for x in xs])
    return _first_sign_change(
        lambda t: turaninter_factor(order, t), xs, values, f"margin_turaninter at {order}"
    )


__all__ = [
    "OmegaSupremum",
    "find_omega_threshold",
    "find_turaninter_crossover",
    "omega_relaxation",
    "omega_sup",
    "x_nu_equation",
    "x_nu_root",
]
