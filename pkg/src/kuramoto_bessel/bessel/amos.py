"""Amos-type algebraic bounds Γ_ν(x) < Ψ_ν(x) < Ω_ν(x).

Both accept scalars or numpy arrays; scalar input gives a float back.
"""

from __future__ import annotations

from typing import overload

import numpy as np

from kuramoto_bessel.core.exceptions import DomainError
from kuramoto_bessel.core.order import as_order
from kuramoto_bessel.core.types import FloatArray, OrderLike


def _positive(x: float | FloatArray) -> FloatArray:
    arr = np.asarray(x, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr <= 0.0):
        raise DomainError(f"x must be > 0, got {x!r}")
    return arr


def _nonnegative_nu(order: OrderLike, name: str) -> float:
    order = as_order(order)
    order.require_nonnegative(name)
    return order.nu


def _result(value: FloatArray, like: float | FloatArray) -> float | FloatArray:
    if np.ndim(like) == 0:
        return float(value)
    return value


@overload
def omega_amos(order: OrderLike, x: float) -> float: ...
@overload
def omega_amos(order: OrderLike, x: FloatArray) -> FloatArray: ...
def omega_amos(order: OrderLike, x: float | FloatArray) -> float | FloatArray:
    """Ω_ν(x) = x / (√(x² + (ν+1/2)(ν+3/2)) + ν + 1/2), an upper bound for Ψ_ν."""
    nu = _nonnegative_nu(order, "omega_amos")
    arr = _positive(x)
    a, b = nu + 0.5, nu + 1.5
    return _result(arr / (np.sqrt(arr * arr + a * b) + a), x)


@overload
def gamma_amos(order: OrderLike, x: float) -> float: ...
@overload
def gamma_amos(order: OrderLike, x: FloatArray) -> FloatArray: ...
def gamma_amos(order: OrderLike, x: float | FloatArray) -> float | FloatArray:
    """Γ_ν(x) = x / (√(x² + (ν+3/2)²) + ν + 1/2), a lower bound for Ψ_ν."""
    nu = _nonnegative_nu(order, "gamma_amos")
    arr = _positive(x)
    a, b = nu + 0.5, nu + 1.5
    return _result(arr / (np.sqrt(arr * arr + b * b) + a), x)


def log_omega_amos(order: OrderLike, x: float | FloatArray) -> float | FloatArray:
    """log Ω_ν(x), accurate as Ω_ν → 1."""
    nu = _nonnegative_nu(order, "omega_amos")
    arr = _positive(x)
    a, b = nu + 0.5, nu + 1.5
    root = np.sqrt(arr * arr + a * b)
    # √(x² + ab) - x = ab / (√(x² + ab) + x)
    return _result(-np.log1p((a * b / (root + arr) + a) / arr), x)


def log_gamma_amos(order: OrderLike, x: float | FloatArray) -> float | FloatArray:
    """log Γ_ν(x), accurate as Γ_ν → 1."""
    nu = _nonnegative_nu(order, "gamma_amos")
    arr = _positive(x)
    a, b = nu + 0.5, nu + 1.5
    root = np.sqrt(arr * arr + b * b)
    return _result(-np.log1p((b * b / (root + arr) + a) / arr), x)


def gamma_amos_complement(order: OrderLike, x: float | FloatArray) -> float | FloatArray:
    """1 - Γ_ν(x), accurate as Γ_ν → 1."""
    nu = _nonnegative_nu(order, "gamma_amos")
    arr = _positive(x)
    a, b = nu + 0.5, nu + 1.5
    root = np.sqrt(arr * arr + b * b)
    return _result((b * b / (root + arr) + a) / (root + a), x)


__all__ = ["gamma_amos", "gamma_amos_complement", "log_gamma_amos", "log_omega_amos", "omega_amos"]
