"""Tests for the sharpness functionals λ_ν and ξ_ν."""

import math

import numpy as np
import pytest

from kuramoto_bessel.bessel import bessel_ratio
from kuramoto_bessel.core import DomainError, EvaluationGrid
from kuramoto_bessel.turan import (
    beta_limit,
    gamma_limit,
    lambda_leading_term,
    lambda_nu,
    xi_nu,
)

SHARPNESS_GRID = EvaluationGrid.logarithmic(1e-6, 1e6, 2000).values()
LIMIT_ORDERS = [0.0, 0.5, 1.0, 2.0, 3.0, 5.0]


class TestLambda:
    """Tests for λ_ν."""

    def test_direct_form(self):
        """Test against log(1 - (2/x)Ψ) / log Ψ at x = 1."""
        p = bessel_ratio(0, 1.0)
        assert lambda_nu(0, 1.0) == pytest.approx(math.log(1 - 2 * p) / math.log(p), rel=1e-12)

    def test_bounded_by_two_and_four(self):
        """Test 2 < λ_0(x) < 4 from x = 1e-6 to x = 1e6."""
        values = [lambda_nu(0, x) for x in SHARPNESS_GRID]
        assert all(2 < value < 4 for value in values)

    def test_increasing(self):
        """Test λ_0 climbs from 2 towards 4."""
        values = [lambda_nu(0, x) for x in EvaluationGrid.logarithmic(1e-6, 1e3, 200).values()]
        assert np.all(np.diff(values) > 0)

    @pytest.mark.parametrize("nu", LIMIT_ORDERS)
    def test_limit_at_infinity(self, nu):
        """Test λ_ν(x) → β_ν = 4/(2ν+1)."""
        assert lambda_nu(nu, 1e6) == pytest.approx(beta_limit(nu), abs=1e-3)

    @pytest.mark.parametrize("nu", [0.5, 1.0, 2.0, 5.0])
    def test_below_limit(self, nu):
        """Test λ_ν < β_ν at every grid point."""
        values = np.array([lambda_nu(nu, x) for x in SHARPNESS_GRID])
        assert np.all(values < beta_limit(nu))

    def test_leading_term_near_zero(self):
        """Test λ_0 against its small-x behaviour."""
        assert lambda_nu(0, 1e-6) == pytest.approx(lambda_leading_term(1e-6), rel=1e-4)
        assert lambda_leading_term(1e-6) == pytest.approx(2.04777, abs=1e-5)

    def test_negative_order(self):
        """Test ν < 0 is rejected."""
        with pytest.raises(DomainError):
            lambda_nu(-0.5, 1.0)

    def test_far_out_stays_finite(self):
        """Test the complement form keeps λ_0 finite far beyond 1 - Ψ_0 ~ eps."""
        assert lambda_nu(0, 1e300) == pytest.approx(4.0)


class TestXi:
    """Tests for ξ_ν."""

    def test_equals_lambda_at_zero_order(self):
        """Test ξ_0 = λ_0."""
        for x in [0.01, 1.0, 10.0]:
            assert xi_nu(0, x) == pytest.approx(lambda_nu(0, x), rel=1e-12)

    def test_direct_form(self):
        """Test against log(1 - (2(ν+1)/x)Ψ_ν) / log Ψ_ν at ν = 1, x = 5."""
        nu, x = 1.0, 5.0
        p = bessel_ratio(nu, x)
        expected = math.log(1 - 2 * (nu + 1) / x * p) / math.log(p)
        assert xi_nu(nu, x) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("nu", LIMIT_ORDERS)
    def test_limit_at_infinity(self, nu):
        """Test ξ_ν(x) → γ_ν = 4(ν+1)/(2ν+1)."""
        assert xi_nu(nu, 1e6) == pytest.approx(gamma_limit(nu), abs=1e-3)

    @pytest.mark.parametrize("nu", [0.5, 1.0, 2.0, 5.0])
    def test_below_limit(self, nu):
        """Test ξ_ν < γ_ν at every grid point."""
        values = np.array([xi_nu(nu, x) for x in SHARPNESS_GRID])
        assert np.all(values < gamma_limit(nu))


class TestLimits:
    """Tests for β_ν and γ_ν."""

    def test_values(self):
        """Test the closed forms."""
        assert beta_limit(0) == 4.0
        assert beta_limit(1.5) == 1.0
        assert gamma_limit(0) == 4.0
        assert gamma_limit(0.5) == 3.0

    def test_gamma_exceeds_beta(self):
        """Test γ_ν - β_ν = 4ν/(2ν+1)."""
        for nu in [0.0, 0.3, 2.0]:
            assert gamma_limit(nu) - beta_limit(nu) == pytest.approx(4 * nu / (2 * nu + 1))

    def test_leading_term_rejects_nonpositive(self):
        """Test x ≤ 0."""
        with pytest.raises(DomainError):
            lambda_leading_term(0.0)
