"""Approximations of r(K) for ν = 0: one Newton step from A(K), and a rational form."""

from __future__ import annotations

import numpy as np

from kuramoto_bessel.approx.bounds import bound_A, check_coupling
from kuramoto_bessel.bessel.kernel import bessel_ratio
from kuramoto_bessel.core.exceptions import DomainError

# Integer coefficients, highest power first
LPOL_NUMERATOR = (1048576, -393216, -276480, 40320, -7560, -1575)
LPOL_DENOMINATOR = (4194304, -524288, -843776, 376320, 3936, 540, 3375)


def lagrange_L(K: float) -> float:
    """L(K) = A + (Ψ₀(s) - A) / (1 - Ψ₀(s)/A + 2KΨ₀(s)² - 2K·I₂(s)/I₀(s)), s = 2K·A.

    I₂/I₀ is taken as Ψ₀Ψ₁, which never overflows for large s.

    Raises:
        DomainError: K ≤ 1, or the denominator vanishes
    """
    A = bound_A(K)
    K = float(K)
    s = 2.0 * K * A
    ratio0 = bessel_ratio(0.0, s)
    ratio1 = bessel_ratio(1.0, s)
    denominator = 1.0 - ratio0 / A + 2.0 * K * ratio0 * ratio0 - 2.0 * K * ratio0 * ratio1
    if denominator == 0.0:
        raise DomainError(f"Denominator of L(K) vanishes at K={K!r}")
    return A + (ratio0 - A) / denominator


def rational_Lpol(K: float) -> float:
    """L_pol(K) = 4K·P(K)/Q(K) with the transcribed integer polynomials P, Q."""
    K = check_coupling(K)
    numerator = 4.0 * K * float(np.polyval(LPOL_NUMERATOR, K))
    return numerator / float(np.polyval(LPOL_DENOMINATOR, K))


__all__ = ["LPOL_DENOMINATOR", "LPOL_NUMERATOR", "lagrange_L", "rational_Lpol"]
