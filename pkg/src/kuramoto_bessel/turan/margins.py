"""Margins of the Turán-type inequalities.

Every margin is arranged so that "inequality holds" ⇔ "margin > 0".  Products
of Bessel functions are written as I_ν(x)^k times a combination of ratios
Ψ_ν, Ψ_{ν+1} and their complements, with I_ν scaled by e^{-x}:

    margin_turanb, margin_lower_turan, margin_turaninter   scale e^{-2x}
    margin_edin                                            scale e^{-4x}
    margin_ineq9, margin_new_turan                         ratio form, unscaled
"""

from __future__ import annotations

import math

from kuramoto_bessel.bessel.kernel import bessel_iv, bessel_ratio_complement
from kuramoto_bessel.core.order import Order, as_order, check_positive
from kuramoto_bessel.core.types import OrderLike


def log_ratio(ratio: float, complement: float) -> float:
    """log Ψ from the pair (Ψ, 1 - Ψ)."""
    if ratio > 0.5:
        return math.log1p(-complement)
    return math.log(ratio)


def _turanb_half_integer(x: float) -> float:
    # ν = -1/2: I_{-1/2}, I_{1/2}, I_{3/2} are elementary and the margin
    # collapses to (2/(πx))·(1 - (1 - e^{-2x})/(2x)), far below e^{2x}.
    return (2.0 / (math.pi * x)) * (1.0 + math.expm1(-2.0 * x) / (2.0 * x))


def margin_turanb(order: OrderLike, x: float) -> float:
    """I²_{ν+1}/x - (I²_{ν+1} - I_ν I_{ν+2}), scaled by e^{-2x}, ν ≥ -1/2.

    At ν = -1/2 the margin is e^{-2x} times smaller than its terms, so it is
    returned unscaled from its closed hyperbolic form.
    """
    order = as_order(order)
    x = check_positive(x)
    nu = order.nu
    if nu == -0.5:
        return _turanb_half_integer(x)

    ratio, u0 = bessel_ratio_complement(nu, x)
    _, u1 = bessel_ratio_complement(nu + 1.0, x)
    scaled = bessel_iv(nu, x, scaled=True)
    return scaled * scaled * ratio * ((1.0 - u0) / x + u0 - u1)


def margin_lower_turan(order: OrderLike, x: float) -> float:
    """I²_{ν+1} - I_ν I_{ν+2}, scaled by e^{-2x}."""
    order = as_order(order)
    x = check_positive(x)
    nu = order.nu
    ratio, u0 = bessel_ratio_complement(nu, x)
    _, u1 = bessel_ratio_complement(nu + 1.0, x)
    scaled = bessel_iv(nu, x, scaled=True)
    return scaled * scaled * ratio * (u1 - u0)


def margin_edin(x: float) -> float:
    """I₀³ I₂ - I₁⁴, scaled by e^{-4x}."""
    x = check_positive(x)
    ratio, u0 = bessel_ratio_complement(0.0, x)
    _, u1 = bessel_ratio_complement(1.0, x)
    scaled = bessel_iv(0.0, x, scaled=True)
    # Ψ₁ - Ψ₀³ expanded in complements
    gap = u0 * (3.0 - 3.0 * u0 + u0 * u0) - u1
    return scaled**4 * ratio * gap


def margin_turaninter(order: OrderLike, x: float) -> float:
    """(2ν/x) I_ν I_{ν+1} - (I²_{ν+1} - I_ν I_{ν+2}), scaled by e^{-2x}, ν ≥ 0."""
    order = as_order(order)
    order.require_nonnegative("margin_turaninter")
    x = check_positive(x)
    nu = order.nu
    ratio, u0 = bessel_ratio_complement(nu, x)
    _, u1 = bessel_ratio_complement(nu + 1.0, x)
    scaled = bessel_iv(nu, x, scaled=True)
    return scaled * scaled * ratio * turaninter_factor(order, x, u0, u1)


def turaninter_factor(
    order: Order, x: float, u0: float | None = None, u1: float | None = None
) -> float:
    """Sign-carrying factor 2ν/x + Ψ_{ν+1} - Ψ_ν of margin_turaninter."""
    if u0 is None:
        u0 = bessel_ratio_complement(order.nu, x)[1]
    if u1 is None:
        u1 = bessel_ratio_complement(order.nu + 1.0, x)[1]
    return 2.0 * order.nu / x + u0 - u1


def margin_ineq9(order: OrderLike, x: float) -> float:
    """(2ν+1)·log Ψ_{ν+1} - (2ν+3)·log Ψ_ν, i.e. Ψ_ν^{2ν+3} < Ψ_{ν+1}^{2ν+1}."""
    order = as_order(order)
    order.require_nonnegative("margin_ineq9")
    x = check_positive(x)
    nu = order.nu
    log0 = log_ratio(*bessel_ratio_complement(nu, x))
    log1 = log_ratio(*bessel_ratio_complement(nu + 1.0, x))
    return (2.0 * nu + 1.0) * log1 - (2.0 * nu + 3.0) * log0


def new_turan_gap(order: Order, x: float) -> tuple[float, float, float]:
    """(Ψ_ν, Ψ_{ν+1}, d) with d = (Ψ_{ν+1} + 2ν/x) - Ψ_ν^{4/(2ν+1) - 1}."""
    nu = order.nu
    power = 4.0 / (2.0 * nu + 1.0)
    ratio0, u0 = bessel_ratio_complement(nu, x)
    ratio1, u1 = bessel_ratio_complement(nu + 1.0, x)
    log0 = log_ratio(ratio0, u0)
    gap = (2.0 * nu / x - u1) - math.expm1((power - 1.0) * log0)
    return ratio0, ratio1, gap


def margin_new_turan(order: OrderLike, x: float) -> float:
    """1 + (2ν/x)·I_{ν+1}/I_{ν+2} - Ψ_ν^{4/(2ν+1)}·I_ν/I_{ν+2}, ν ≥ 0.

    With I_{ν+1}/I_{ν+2} = 1/Ψ_{ν+1} and I_ν/I_{ν+2} = 1/(Ψ_ν Ψ_{ν+1}) this is
    ((Ψ_{ν+1} + 2ν/x) - Ψ_ν^{4/(2ν+1)-1}) / Ψ_{ν+1}, which is what gets evaluated.
    """
    order = as_order(order)
    order.require_nonnegative("margin_new_turan")
    x = check_positive(x)
    _, ratio1, gap = new_turan_gap(order, x)
    return gap / ratio1


def margin_fig1(order: OrderLike, x: float) -> float:
    """-fig1_value(a, x), positive where Ψ_a^{4/(2a+1)} + (2/x)Ψ_a < 1."""
    from kuramoto_bessel.turan.sharpness import fig1_value

    return -fig1_value(order, x)


def margin_edin_for_order(order: OrderLike, x: float) -> float:
    """margin_edin with the registry's (order, x) signature; the order is unused."""
    return margin_edin(x)


__all__ = [
    "margin_edin",
    "margin_edin_for_order",
    "margin_fig1",
    "margin_ineq9",
    "margin_lower_turan",
    "margin_new_turan",
    "margin_turanb",
    "margin_turaninter",
    "log_ratio",
    "new_turan_gap",
    "turaninter_factor",
]
