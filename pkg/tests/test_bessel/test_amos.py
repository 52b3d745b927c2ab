"""Tests for the Amos-type bounds Ω_ν and Γ_ν."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kuramoto_bessel.bessel import (
    bessel_ratio,
    gamma_amos,
    gamma_amos_complement,
    log_gamma_amos,
    log_omega_amos,
    omega_amos,
)
from kuramoto_bessel.core import DomainError, EvaluationGrid


class TestClosedForms:
    """Tests for the closed forms."""

    def test_omega_at_one(self):
        """Test Ω_0(1) = 1/(√(7/4) + 1/2)."""
        assert omega_amos(0, 1.0) == pytest.approx(1 / (math.sqrt(1.75) + 0.5), rel=1e-15)
        assert omega_amos(0, 1.0) == pytest.approx(0.54691, abs=1e-5)

    def test_gamma_at_one(self):
        """Test Γ_0(1) = 1/(√(13/4) + 1/2)."""
        assert gamma_amos(0, 1.0) == pytest.approx(1 / (math.sqrt(3.25) + 0.5), rel=1e-15)
        assert gamma_amos(0, 1.0) == pytest.approx(0.43241, abs=1e-5)

    def test_limit_at_infinity(self):
        """Test both bounds tend to 1."""
        assert omega_amos(0, 1e12) == pytest.approx(1.0, abs=1e-11)
        assert gamma_amos(0, 1e12) == pytest.approx(1.0, abs=1e-11)

    def test_vectorised(self):
        """Test arrays in, arrays out."""
        xs = np.array([0.5, 1.0, 2.0])
        values = omega_amos(1, xs)
        assert isinstance(values, np.ndarray)
        np.testing.assert_allclose(values, [omega_amos(1, float(x)) for x in xs])

    def test_logs(self):
        """Test the log forms against log of the bounds."""
        for x in [1e-3, 1.0, 50.0]:
            assert log_omega_amos(0.5, x) == pytest.approx(math.log(omega_amos(0.5, x)), rel=1e-13)
            assert log_gamma_amos(0.5, x) == pytest.approx(math.log(gamma_amos(0.5, x)), rel=1e-13)

    def test_log_accurate_near_one(self):
        """Test log Ω_0(x) ≈ -1/(2x) at large x."""
        assert log_omega_amos(0, 1e10) == pytest.approx(-0.5e-10, rel=1e-6)

    def test_gamma_complement(self):
        """Test 1 - Γ_ν against the closed form and its 1/(2x) tail."""
        for x in [1e-3, 1.0, 50.0]:
            assert gamma_amos_complement(1, x) == pytest.approx(1 - gamma_amos(1, x), rel=1e-12)
        assert gamma_amos_complement(0, 1e10) == pytest.approx(0.5e-10, rel=1e-6)

    @pytest.mark.parametrize("x", [0.0, -1.0, math.nan])
    def test_invalid_argument(self, x):
        """Test x ≤ 0 and NaN."""
        with pytest.raises(DomainError):
            omega_amos(0, x)
        with pytest.raises(DomainError):
            gamma_amos(0, np.array([1.0, x]))

    def test_negative_order(self):
        """Test ν < 0 is rejected."""
        with pytest.raises(DomainError, match="omega_amos"):
            omega_amos(-0.5, 1.0)


class TestSandwich:
    """Tests for Γ_ν < Ψ_ν < Ω_ν."""

    def test_at_known_points(self):
        """Test the sandwich at (ν=0, x=1) and (ν=1, x=5)."""
        assert gamma_amos(0, 1.0) < bessel_ratio(0, 1.0) < omega_amos(0, 1.0)
        assert gamma_amos(1, 5.0) < bessel_ratio(1, 5.0) < omega_amos(1, 5.0)

    @pytest.mark.parametrize("nu", [0.0, 0.25, 0.5, 1.0, 2.0, 5.0])
    def test_on_grid(self, nu):
        """Test the sandwich on a log grid."""
        xs = EvaluationGrid.logarithmic(1e-3, 1e3, 500).values()
        ratios = np.array([bessel_ratio(nu, x) for x in xs])
        assert np.all(gamma_amos(nu, xs) < ratios)
        assert np.all(ratios < omega_amos(nu, xs))

    @given(
        nu=st.floats(min_value=0.0, max_value=10.0),
        x=st.floats(min_value=1e-2, max_value=1e2),
    )
    @settings(max_examples=200, deadline=None)
    def test_property(self, nu, x):
        """Test the sandwich for arbitrary orders."""
        assert gamma_amos(nu, x) < bessel_ratio(nu, x) < omega_amos(nu, x)
