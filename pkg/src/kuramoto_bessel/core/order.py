"""Bessel order shared by every kernel, margin and solver."""

from __future__ import annotations

import math
from dataclasses import dataclass

from kuramoto_bessel.core.exceptions import DomainError

# Lowest order any operation in the package accepts
MIN_ORDER = -0.5


@dataclass(frozen=True)
class Order:
    """Order ν of the modified Bessel function I_ν.

    Examples:
        Order(0)        # the classical Kuramoto nonlinearity
        Order(0.5)      # Ψ_{1/2}(x) = coth(x) - 1/x
    """

    nu: float

    def __post_init__(self) -> None:
        nu = float(self.nu)
        if not math.isfinite(nu):
            raise DomainError(f"Bessel order must be finite, got {self.nu!r}")
        if nu < MIN_ORDER:
            raise DomainError(f"Bessel order must be >= -1/2, got {nu!r}")
        object.__setattr__(self, "nu", nu)

    def shifted(self, steps: int = 1) -> Order:
        """Order ν + steps."""
        return Order(self.nu + steps)

    def require_nonnegative(self, operation: str) -> None:
        """Raise unless ν ≥ 0, naming the operation in the message."""
        if self.nu < 0.0:
            raise DomainError(f"{operation} requires ν >= 0, got ν={self.nu!r}")

    def __float__(self) -> float:
        return self.nu

    def __str__(self) -> str:
        return f"ν={self.nu:g}"


def as_order(order: Order | float | int) -> Order:
    """Coerce a bare number to an Order."""
    if isinstance(order, Order):
        return order
    return Order(float(order))


def check_positive(x: float, name: str = "x") -> float:
    """Return x as float, raising DomainError when it is NaN or ≤ 0."""
    value = float(x)
    if math.isnan(value) or value <= 0.0:
        raise DomainError(f"{name} must be > 0, got {x!r}")
    return value
