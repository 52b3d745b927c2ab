"""Modified Bessel kernel: I_ν(x) and the ratio Ψ_ν(x) = I_{ν+1}(x)/I_ν(x).

Two regimes, split at ``regime_threshold(ν)``:

* small x: positive-term power series for I_ν (log-scaled, renormalised),
  modified-Lentz continued fraction for Ψ_ν;
* large x: the Hankel asymptotic series, summed until its terms drop below
  machine epsilon.  Ψ_ν and its complement 1 - Ψ_ν are formed from two such
  sums term by term, so neither ever touches e^x.
"""

from __future__ import annotations

import logging
import math
import sys

from scipy.special import gammaln

from kuramoto_bessel.core.exceptions import BesselOverflowError, DomainError
from kuramoto_bessel.core.order import MIN_ORDER, as_order, check_positive
from kuramoto_bessel.core.results import BesselValue, RatioValue
from kuramoto_bessel.core.types import OrderLike

logger = logging.getLogger(__name__)

EPS = sys.float_info.epsilon
LOG_MAX = math.log(sys.float_info.max)

_CF_TINY = 1e-30
_RESCALE = 1e250
_LOG_RESCALE = math.log(_RESCALE)
_HANKEL_MAX_TERMS = 200


def regime_threshold(nu: float) -> float:
    """Argument above which the asymptotic series replaces series/fraction."""
    return max(30.0, (nu + 1.0) ** 2)


def _check_nu(nu: float) -> float:
    nu = float(nu)
    if not math.isfinite(nu) or nu < MIN_ORDER:
        raise DomainError(f"Bessel order must be finite and >= -1/2, got {nu!r}")
    return nu


def _check_argument(x: float) -> float:
    x = float(x)
    if math.isnan(x) or x < 0.0:
        raise DomainError(f"x must be >= 0, got {x!r}")
    return x


# -- power series ------------------------------------------------------------


def _log_iv_series(nu: float, x: float) -> float:
    """log I_ν(x) from Σ (x/2)^{2k+ν} / (k! Γ(k+ν+1)), x > 0."""
    half_sq = 0.25 * x * x
    log_t0 = nu * math.log(0.5 * x) - float(gammaln(nu + 1.0))

    total = 1.0
    term = 1.0
    log_offset = 0.0
    k = 0
    while True:
        k += 1
        term *= half_sq / (k * (k + nu))
        total += term
        if total > _RESCALE:
            total /= _RESCALE
            term /= _RESCALE
            log_offset += _LOG_RESCALE
        if term < EPS * total and k * (k + nu) > half_sq:
            break
    return log_t0 + log_offset + math.log(total)


# -- Hankel asymptotic series ------------------------------------------------


def _hankel_terms(nu: float, x: float, min_terms: int = 0) -> list[float] | None:
    """Terms of Σ (-1)^k a_k(ν)/x^k with I_ν(x) ~ e^x/√(2πx)·Σ.

    Returns None when the terms start growing before reaching machine
    precision, i.e. x is too small for this order.
    """
    mu = 4.0 * nu * nu
    terms = [1.0]
    total = 1.0
    term = 1.0
    k = 0
    while k < _HANKEL_MAX_TERMS:
        k += 1
        previous = term
        term = -term * (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        if abs(term) > abs(previous) and k > 1 and term != 0.0:
            return None
        terms.append(term)
        total += term
        if abs(term) <= EPS * abs(total) and len(terms) >= min_terms:
            return terms
    return None


def _hankel_pair(nu: float, x: float) -> tuple[list[float], list[float]] | None:
    """Equal-length term lists for orders ν and ν+1."""
    lower = _hankel_terms(nu, x)
    upper = _hankel_terms(nu + 1.0, x)
    if lower is None or upper is None:
        return None
    n = max(len(lower), len(upper))
    if len(lower) < n:
        lower = _hankel_terms(nu, x, n)
    if len(upper) < n:
        upper = _hankel_terms(nu + 1.0, x, n)
    if lower is None or upper is None:
        return None
    lower = lower + [0.0] * (n - len(lower))
    upper = upper + [0.0] * (n - len(upper))
    return lower, upper


def _ratio_asymptotic(nu: float, x: float) -> tuple[float, float] | None:
    """(Ψ_ν, 1 - Ψ_ν) from the asymptotic sums, or None off-regime."""
    pair = _hankel_pair(nu, x)
    if pair is None:
        return None
    lower, upper = pair
    denominator = math.fsum(lower)
    ratio = math.fsum(upper) / denominator
    complement = math.fsum(a - b for a, b in zip(lower, upper)) / denominator
    return ratio, complement


# -- continued fraction ------------------------------------------------------


def _ratio_continued_fraction(nu: float, x: float) -> float:
    """Ψ_ν(x) = 1/(b_1 + 1/(b_2 + ...)), b_j = 2(ν+j)/x, by modified Lentz."""
    depth_cap = 10 * (math.ceil(x) + max(math.ceil(nu), 0)) + 50
    # Lentz on the denominator g = b_1 + 1/(b_2 + ...), b_1 > 0 for ν > -1
    g = 2.0 * (nu + 1.0) / x
    c = g
    d = 0.0
    for j in range(2, depth_cap + 1):
        b = 2.0 * (nu + j) / x
        d = b + d
        if d == 0.0:
            d = _CF_TINY
        c = b + 1.0 / c
        if c == 0.0:
            c = _CF_TINY
        d = 1.0 / d
        delta = c * d
        g *= delta
        if abs(delta - 1.0) <= EPS:
            return 1.0 / g
    logger.warning(f"Continued fraction for Ψ_{nu:g}({x:g}) hit depth cap {depth_cap}")
    return 1.0 / g


def _ratio_and_complement(nu: float, x: float) -> tuple[float, float]:
    if x > regime_threshold(nu):
        result = _ratio_asymptotic(nu, x)
        if result is not None:
            return result
        logger.debug(f"Asymptotic ratio diverged at ν={nu:g}, x={x:g}; using continued fraction")
    ratio = _ratio_continued_fraction(nu, x)
    return ratio, 1.0 - ratio


# -- float kernels -----------------------------------------------------------


def bessel_iv(nu: float, x: float, scaled: bool = False) -> float:
    """I_ν(x), or e^{-x}·I_ν(x) when ``scaled``.

    Raises:
        DomainError: x is NaN or negative, or ν < -1/2
        BesselOverflowError: unscaled value exceeds the double range
    """
    nu = _check_nu(nu)
    x = _check_argument(x)

    if x == 0.0:
        if nu == 0.0:
            return 1.0
        return 0.0 if nu > 0.0 else math.inf
    if math.isinf(x):
        if scaled:
            return 0.0
        raise BesselOverflowError(f"I_{nu:g}(inf) overflows")

    log_value: float | None = None
    if x > regime_threshold(nu):
        terms = _hankel_terms(nu, x)
        if terms is not None:
            log_scaled = math.log(math.fsum(terms)) - 0.5 * math.log(2.0 * math.pi * x)
            log_value = log_scaled if scaled else log_scaled + x
        else:
            logger.debug(f"Asymptotic series diverged at ν={nu:g}, x={x:g}; using power series")
    if log_value is None:
        log_value = _log_iv_series(nu, x)
        if scaled:
            log_value -= x

    if log_value > LOG_MAX:
        raise BesselOverflowError(
            f"I_{nu:g}({x:g}) overflows a double; request the scaled value instead"
        )
    return math.exp(log_value)


def bessel_ratio(nu: float, x: float) -> float:
    """Ψ_ν(x) for x > 0."""
    nu = _check_nu(nu)
    x = check_positive(x)
    return _ratio_and_complement(nu, x)[0]


def bessel_ratio_complement(nu: float, x: float) -> tuple[float, float]:
    """(Ψ_ν(x), 1 - Ψ_ν(x)), the second accurate even when Ψ_ν(x) rounds to 1."""
    nu = _check_nu(nu)
    x = check_positive(x)
    return _ratio_and_complement(nu, x)


# -- public Order-based API --------------------------------------------------


def iv(order: OrderLike, x: float, scaled: bool = False) -> BesselValue:
    """Modified Bessel function of the first kind.

    Args:
        order: Bessel order ν ≥ -1/2
        x: Argument, x ≥ 0
        scaled: Return e^{-x}·I_ν(x), which never overflows
    """
    order = as_order(order)
    value = bessel_iv(order.nu, x, scaled)
    return BesselValue(value=value, scaled=scaled, order=order, argument=float(x))


def psi(order: OrderLike, x: float) -> RatioValue:
    """Bessel ratio Ψ_ν(x) = I_{ν+1}(x)/I_ν(x), always in (0, 1)."""
    order = as_order(order)
    return RatioValue(value=bessel_ratio(order.nu, x), order=order, argument=float(x))


def psi_complement(order: OrderLike, x: float) -> float:
    """1 - Ψ_ν(x), accurate to full relative precision for large x."""
    order = as_order(order)
    return _ratio_and_complement(order.nu, check_positive(x))[1]


def log_psi(order: OrderLike, x: float) -> float:
    """log Ψ_ν(x) without cancellation as Ψ_ν(x) → 1."""
    order = as_order(order)
    ratio, complement = _ratio_and_complement(order.nu, check_positive(x))
    if ratio > 0.5:
        return math.log1p(-complement)
    return math.log(ratio)


def psi_derivative(order: OrderLike, x: float) -> float:
    """dΨ_ν/dx = 1 - Ψ² - (2ν+1)Ψ/x."""
    order = as_order(order)
    x = check_positive(x)
    ratio, complement = _ratio_and_complement(order.nu, x)
    return complement * (2.0 - complement) - (2.0 * order.nu + 1.0) * ratio / x


def iv_asymptotic(order: OrderLike, x: float, terms: int = 4, scaled: bool = False) -> float:
    """Truncated large-x expansion e^x/√(2πx)·Σ_{k<terms} (-1)^k a_k(ν)/x^k.

    The k-th coefficient is Π_{j≤k} (4ν² - (2j-1)²) / (k!·8^k).
    """
    order = as_order(order)
    x = check_positive(x)
    if isinstance(terms, bool) or not 1 <= terms <= 4:
        raise DomainError(f"terms must be in 1..4, got {terms!r}")

    mu = 4.0 * order.nu * order.nu
    total = 1.0
    term = 1.0
    for k in range(1, terms):
        term = -term * (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        total += term

    value = total / math.sqrt(2.0 * math.pi * x)
    if scaled:
        return value
    if x > LOG_MAX:
        raise BesselOverflowError(f"e^{x:g} overflows; request the scaled expansion")
    return value * math.exp(x)


def psi_asymptotic(order: OrderLike, x: float) -> float:
    """Rational large-x form (8x - 4(ν+1)² + 1)/(8x - 4ν² + 1) of Ψ_ν(x)."""
    order = as_order(order)
    x = check_positive(x)
    nu = order.nu
    return (8.0 * x - 4.0 * (nu + 1.0) ** 2 + 1.0) / (8.0 * x - 4.0 * nu * nu + 1.0)


__all__ = [
    "bessel_iv",
    "bessel_ratio",
    "bessel_ratio_complement",
    "iv",
    "iv_asymptotic",
    "log_psi",
    "psi",
    "psi_asymptotic",
    "psi_complement",
    "psi_derivative",
    "regime_threshold",
]
