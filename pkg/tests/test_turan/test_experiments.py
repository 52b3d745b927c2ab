"""Tests for the threshold order, x_ν and the turaninter crossover."""

import math

import numpy as np
import pytest

from kuramoto_bessel.bessel import omega_amos
from kuramoto_bessel.core import (
    DomainError,
    EvaluationGrid,
    Order,
    RootNotFoundError,
    ThresholdError,
)
from kuramoto_bessel.turan import (
    find_omega_threshold,
    find_turaninter_crossover,
    margin_ineq9,
    omega_relaxation,
    omega_sup,
    x_nu_root,
)
from kuramoto_bessel.turan.experiments import x_nu_equation
from kuramoto_bessel.turan.margins import turaninter_factor


class TestOmegaRelaxation:
    """Tests for h_ν."""

    def test_direct_form(self):
        """Test against Ω^{4/(2ν+1)} + (2/x)Ω - 1 at a moderate point."""
        nu, x = 0.5, 2.0
        omega = omega_amos(nu, x)
        expected = omega**2 + 2 / x * omega - 1
        assert omega_relaxation(nu, x) == pytest.approx(expected, rel=1e-12)

    def test_limit_at_zero(self):
        """Test h_ν(0⁺) = (2 - √(ab) - a)/(√(ab) + a), which vanishes at ν = 0.3."""
        for nu in [0.1, 0.3, 0.7]:
            a, b = nu + 0.5, nu + 1.5
            root = math.sqrt(a * b)
            expected = (2 - root - a) / (root + a)
            assert omega_relaxation(nu, 1e-12) == pytest.approx(expected, abs=1e-10)

    def test_vectorised(self):
        """Test arrays in, arrays out."""
        xs = np.array([0.1, 1.0, 10.0])
        values = omega_relaxation(1, xs)
        assert isinstance(values, np.ndarray)
        np.testing.assert_allclose(values, [omega_relaxation(1, float(x)) for x in xs])

    def test_sup_signs(self):
        """Test sup h is positive at ν = 0.1 and negative at ν = 0.5."""
        assert omega_sup(0.1).value > 0
        assert omega_sup(0.5).value < 0

    def test_sup_location_below_threshold(self):
        """Test the supremum sits at the small end of the grid for ν < 0.3."""
        grid = EvaluationGrid.logarithmic(1e-8, 1e4, 500)
        result = omega_sup(0.1, grid)
        assert result.argmax_x == pytest.approx(1e-8)
        assert result.order == Order(0.1)


class TestThreshold:
    """Tests for find_omega_threshold."""

    def test_close_to_three_tenths(self):
        """Test the threshold order lies within tolerance of 0.3."""
        nu_star = find_omega_threshold(0.01)
        assert 0.29 <= nu_star <= 0.31

    def test_tighter_tolerance(self):
        """Test a tighter tolerance narrows the answer."""
        nu_star = find_omega_threshold(1e-4)
        assert abs(nu_star - 0.3) <= 1e-4

    @pytest.mark.parametrize("tolerance", [0.0, -0.01])
    def test_invalid_tolerance(self, tolerance):
        """Test tolerance ≤ 0."""
        with pytest.raises(DomainError):
            find_omega_threshold(tolerance)

    def test_bad_endpoints(self):
        """Test an interval without the (+, -) pattern."""
        with pytest.raises(ThresholdError):
            find_omega_threshold(0.01, nu_lo=0.5, nu_hi=1.0)


class TestXNu:
    """Tests for x_nu_root."""

    @pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.0])
    def test_is_root(self, nu):
        """Test the residual and the sign pattern around x_ν."""
        root = x_nu_root(nu)
        assert root > 0
        assert abs(x_nu_equation(nu, root)) <= 1e-10
        assert x_nu_equation(nu, 0.5 * root) > 0
        assert x_nu_equation(nu, 2.0 * root) < 0

    def test_zero_order_value(self):
        """Test x_0 lies between 3.09 and 3.17."""
        assert 3.09 < x_nu_root(0) < 3.17

    def test_increasing_in_order(self):
        """Test x_ν grows with ν."""
        roots = [x_nu_root(nu) for nu in [0.0, 0.5, 1.0, 1.5, 2.0]]
        assert np.all(np.diff(roots) > 0)

    @pytest.mark.parametrize("nu", [0.0, 1.0])
    def test_ineq9_holds_below_root(self, nu):
        """Test margin_ineq9 > 0 on (0, x_ν)."""
        root = x_nu_root(nu)
        for x in EvaluationGrid.logarithmic(1e-4, root * (1 - 1e-9), 200).values():
            assert margin_ineq9(nu, x) > 0

    def test_invalid(self):
        """Test ν < 0 and a nonpositive tolerance."""
        with pytest.raises(DomainError):
            x_nu_root(-0.5)
        with pytest.raises(DomainError):
            x_nu_root(0, tolerance=0.0)


class TestTuraninterCrossover:
    """Tests for find_turaninter_crossover."""

    def test_quarter_order(self):
        """Test the crossover at ν = 1/4 lies in (2.29, 2.40)."""
        x = find_turaninter_crossover(0.25)
        assert 2.29 < x < 2.40
        assert abs(turaninter_factor(Order(0.25), x)) <= 1e-12

    def test_moves_out_with_order(self):
        """Test the crossover grows with ν on (0, 1/2)."""
        assert find_turaninter_crossover(0.1) < find_turaninter_crossover(0.25)

    @pytest.mark.parametrize("nu", [0.0, 0.5, 1.0])
    def test_no_crossover(self, nu):
        """Test ν = 0 (always negative) and ν ≥ 1/2 (always positive)."""
        with pytest.raises(RootNotFoundError):
            find_turaninter_crossover(nu)
