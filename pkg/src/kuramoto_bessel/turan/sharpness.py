"""Sharpness functionals λ_ν, ξ_ν and their limits at infinity."""

from __future__ import annotations

import math

from kuramoto_bessel.bessel.kernel import bessel_ratio_complement
from kuramoto_bessel.core.exceptions import DomainError
from kuramoto_bessel.core.order import as_order, check_positive
from kuramoto_bessel.core.types import OrderLike
from kuramoto_bessel.turan.margins import log_ratio, new_turan_gap


def lambda_nu(order: OrderLike, x: float) -> float:
    """λ_ν(x) = log(1 - (2/x)Ψ_ν(x)) / log Ψ_ν(x).

    The numerator uses 1 - (2/x)Ψ_ν = Ψ_ν·(Ψ_{ν+1} + 2ν/x).

    Raises:
        DomainError: the logarithm's argument is not positive, or Ψ_ν
            rounds to 1
    """
    order = as_order(order)
    order.require_nonnegative("lambda_nu")
    x = check_positive(x)
    nu = order.nu

    ratio0, u0 = bessel_ratio_complement(nu, x)
    _, u1 = bessel_ratio_complement(nu + 1.0, x)
    shift = 2.0 * nu / x - u1
    if shift <= -1.0:
        raise DomainError(f"1 - (2/x)Ψ_ν(x) is not positive at ν={nu!r}, x={x!r}")
    log0 = log_ratio(ratio0, u0)
    if log0 == 0.0:
        raise DomainError(f"log Ψ_ν(x) vanishes in double precision at ν={nu!r}, x={x!r}")
    return 1.0 + math.log1p(shift) / log0


def xi_nu(order: OrderLike, x: float) -> float:
    """ξ_ν(x) = log(1 - (2(ν+1)/x)Ψ_ν(x)) / log Ψ_ν(x).

    Since 1 - (2(ν+1)/x)Ψ_ν = I_{ν+2}/I_ν = Ψ_ν Ψ_{ν+1},
    ξ_ν = 1 + log Ψ_{ν+1} / log Ψ_ν.
    """
    order = as_order(order)
    order.require_nonnegative("xi_nu")
    x = check_positive(x)
    log0 = log_ratio(*bessel_ratio_complement(order.nu, x))
    if log0 == 0.0:
        raise DomainError(f"log Ψ_ν(x) vanishes in double precision at {order}, x={x!r}")
    log1 = log_ratio(*bessel_ratio_complement(order.nu + 1.0, x))
    return 1.0 + log1 / log0


def beta_limit(order: OrderLike) -> float:
    """β_ν = lim λ_ν(x) = 4/(2ν+1) as x → ∞."""
    order = as_order(order)
    order.require_nonnegative("beta_limit")
    return 4.0 / (2.0 * order.nu + 1.0)


def gamma_limit(order: OrderLike) -> float:
    """γ_ν = lim ξ_ν(x) = 4(ν+1)/(2ν+1) as x → ∞."""
    order = as_order(order)
    order.require_nonnegative("gamma_limit")
    return 4.0 * (order.nu + 1.0) / (2.0 * order.nu + 1.0)


def lambda_leading_term(x: float) -> float:
    """(log 8 - 2 log x)/(log 2 - log x), the behaviour of λ_0 as x → 0⁺."""
    x = check_positive(x)
    log_x = math.log(x)
    return (math.log(8.0) - 2.0 * log_x) / (math.log(2.0) - log_x)


def fig1_value(a: OrderLike, x: float) -> float:
    """g_a(x) = Ψ_a(x)^{4/(2a+1)} + (2/x)Ψ_a(x) - 1.

    Negative exactly where Ψ_a^{4/(2a+1)} < 1 - (2/x)Ψ_a.  Evaluated as
    -Ψ_a·d with d from new_turan_gap, so nothing cancels near x = 0.
    """
    order = as_order(a)
    order.require_nonnegative("fig1_value")
    x = check_positive(x)
    ratio0, _, gap = new_turan_gap(order, x)
    return -ratio0 * gap


__all__ = [
    "beta_limit",
    "fig1_value",
    "gamma_limit",
    "lambda_leading_term",
    "lambda_nu",
    "xi_nu",
]
