"""Closed-form bounds on the order parameter r(K)."""

from __future__ import annotations

import math

from kuramoto_bessel.core.exceptions import DomainError
from kuramoto_bessel.core.order import as_order
from kuramoto_bessel.core.results import BoundKind, GeneralBound
from kuramoto_bessel.core.types import OrderLike

# Orders from which each bound is proven; the rest are conjectures
_QUARTER_POWER_MIN_ORDER = 0.3
_SQRT_MIN_ORDER = 0.5


def check_coupling(K: float, minimum: float = 1.0) -> float:
    """Return K as float, raising DomainError unless K > minimum."""
    K = float(K)
    if math.isnan(K) or K <= minimum:
        raise DomainError(f"K must be > {minimum:g}, got {K!r}")
    return K


def bound_lower_sqrt(K: float) -> float:
    """√(1 - 1/K), lower bound on r(K) for ν = 0."""
    K = check_coupling(K)
    return math.sqrt(1.0 - 1.0 / K)


def bound_upper_half(K: float) -> float:
    """√(1 - 1/(2K)), upper bound on r(K) for ν = 0."""
    K = check_coupling(K)
    return math.sqrt(1.0 - 0.5 / K)


def bound_A(K: float) -> float:
    """A(K) = (1 - 1/K)^{1/4}, the sharper upper bound for ν = 0."""
    K = check_coupling(K)
    return math.sqrt(math.sqrt(1.0 - 1.0 / K))


def bound_general(order: OrderLike, K: float, kind: BoundKind | str) -> GeneralBound:
    """Upper bound on r(K) for r = Ψ_ν(2Kr).

    ============== ================================= ==================
    kind           value                             proven for
    ============== ================================= ==================
    half           √(1 - 1/(2K))                     ν ≥ 0
    sqrt           √(1 - 1/K)                        ν ≥ 1/2
    quarter_power  (1 - 1/K)^{(2ν+1)/4}              ν = 0 or ν ≥ 0.3
    sharp          (1 - (ν+1)/K)^{(2ν+1)/(4(ν+1))}   ν = 0
    ============== ================================= ==================

    Raises:
        DomainError: K ≤ ν+1 for ``sharp``, K ≤ 1 otherwise, or ν < 0
    """
    order = as_order(order)
    order.require_nonnegative("bound_general")
    kind = BoundKind(kind)
    nu = order.nu

    if kind is BoundKind.SHARP:
        K = check_coupling(K, nu + 1.0)
        value = (1.0 - (nu + 1.0) / K) ** ((2.0 * nu + 1.0) / (4.0 * (nu + 1.0)))
        proven = nu == 0.0
    else:
        K = check_coupling(K)
        if kind is BoundKind.HALF:
            value = math.sqrt(1.0 - 0.5 / K)
            proven = True
        elif kind is BoundKind.SQRT:
            value = math.sqrt(1.0 - 1.0 / K)
            proven = nu >= _SQRT_MIN_ORDER
        else:
            value = (1.0 - 1.0 / K) ** ((2.0 * nu + 1.0) / 4.0)
            proven = nu == 0.0 or nu >= _QUARTER_POWER_MIN_ORDER

    return GeneralBound(value=value, kind=kind, order=order, K=K, proven=proven)


__all__ = [
    "bound_A",
    "bound_general",
    "bound_lower_sqrt",
    "bound_upper_half",
    "check_coupling",
]
