"""Zeros j_{0,n} of J_0 and the partial-fraction expansion of Ψ_0."""

from __future__ import annotations

import logging
import math
from functools import lru_cache

import numpy as np
from scipy.special import j0, j1

from kuramoto_bessel.core.exceptions import ValidationError
from kuramoto_bessel.core.order import check_positive
from kuramoto_bessel.core.types import FloatArray

logger = logging.getLogger(__name__)

_NEWTON_MAX_STEPS = 50


def _mcmahon_guess(n: FloatArray) -> FloatArray:
    beta = (n - 0.25) * math.pi
    eight_beta = 8.0 * beta
    return beta + 1.0 / eight_beta - 124.0 / (3.0 * eight_beta**3)


@lru_cache(maxsize=16)
def _zeros(count: int) -> tuple[float, ...]:
    z = _mcmahon_guess(np.arange(1, count + 1, dtype=float))
    for step in range(_NEWTON_MAX_STEPS):
        # J_0' = -J_1
        delta = j0(z) / j1(z)
        z = z + delta
        if np.all(np.abs(delta) <= 4.0 * np.finfo(float).eps * z):
            logger.debug(f"Newton refined {count} zeros of J_0 in {step + 1} steps")
            break
    return tuple(float(v) for v in z)


def j0_zeros(count: int) -> list[float]:
    """First ``count`` positive zeros of J_0, increasing.

    McMahon's expansion seeds a vectorised Newton iteration on J_0.
    """
    if isinstance(count, bool) or int(count) != count or count < 1:
        raise ValidationError(f"count must be a positive integer, got {count!r}")
    return list(_zeros(int(count)))


def psi_mittag_leffler(x: float, n_terms: int, tail: bool = False) -> float:
    """Partial sum Σ_{n≤N} 2x/(x² + j²_{0,n}) of Ψ_0(x).

    With ``tail`` the remainder is estimated from j_{0,n} ≈ (n - 1/4)π:
    (2/π)·arctan(x/(π(N + 1/4))), leaving an O(x/N³) error.
    """
    x = check_positive(x)
    zeros = np.asarray(j0_zeros(n_terms))
    total = math.fsum(2.0 * x / (x * x + zeros * zeros))
    if tail:
        total += (2.0 / math.pi) * math.atan(x / (math.pi * (n_terms + 0.25)))
    return total


__all__ = ["j0_zeros", "psi_mittag_leffler"]
