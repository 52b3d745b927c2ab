"""Modified Bessel kernel, J_0 zeros and Amos-type bounds."""

from kuramoto_bessel.bessel.amos import (
    gamma_amos,
    gamma_amos_complement,
    log_gamma_amos,
    log_omega_amos,
    omega_amos,
)
from kuramoto_bessel.bessel.kernel import (
    bessel_iv,
    bessel_ratio,
    bessel_ratio_complement,
    iv,
    iv_asymptotic,
    log_psi,
    psi,
    psi_asymptotic,
    psi_complement,
    psi_derivative,
    regime_threshold,
)
from kuramoto_bessel.bessel.zeros import j0_zeros, psi_mittag_leffler

__all__ = [
    "bessel_iv",
    "bessel_ratio",
    "bessel_ratio_complement",
    "gamma_amos",
    "gamma_amos_complement",
    "iv",
    "iv_asymptotic",
    "j0_zeros",
    "log_gamma_amos",
    "log_omega_amos",
    "log_psi",
    "omega_amos",
    "psi",
    "psi_asymptotic",
    "psi_complement",
    "psi_derivative",
    "psi_mittag_leffler",
    "regime_threshold",
]
