"""Tests for the safeguarded Newton iteration."""

import math

import pytest

from kuramoto_bessel.core import ConvergenceError, NoBracketError
from kuramoto_bessel.solver import NewtonResult, safeguarded_newton


class TestSafeguardedNewton:
    """Tests for safeguarded_newton."""

    def test_square_root(self):
        """Test x² - 2 on [0, 2]."""
        result = safeguarded_newton(lambda x: x * x - 2, lambda x: 2 * x, 0.0, 2.0, 1e-14)
        assert isinstance(result, NewtonResult)
        assert result.root == pytest.approx(math.sqrt(2), rel=1e-14)
        assert abs(result.value) <= 1e-14
        assert 0 < result.iterations < 10

    def test_endpoint_root(self):
        """Test an exact zero at an endpoint returns without iterating."""
        result = safeguarded_newton(lambda x: x - 1, lambda x: 1.0, 1.0, 3.0, 1e-12)
        assert result.root == 1.0
        assert result.iterations == 0

    def test_no_bracket(self):
        """Test same-sign endpoints."""
        with pytest.raises(NoBracketError, match="does not change sign"):
            safeguarded_newton(lambda x: x * x + 1, lambda x: 2 * x, -1.0, 1.0, 1e-12)

    def test_bisects_on_flat_derivative(self):
        """Test a zero derivative falls back to bisection."""
        result = safeguarded_newton(lambda x: x**3 - 0.001, lambda x: 0.0, 0.0, 1.0, 1e-12)
        assert result.root == pytest.approx(0.1, rel=1e-9)

    def test_bisects_when_step_leaves_bracket(self):
        """Test atan, whose Newton steps overshoot from far out."""
        result = safeguarded_newton(
            math.atan, lambda x: 1 / (1 + x * x), -10.0, 20.0, 1e-14, start=15.0
        )
        assert abs(result.root) <= 1e-14

    def test_convergence_error(self):
        """Test the iteration cap."""
        with pytest.raises(ConvergenceError, match="No convergence after 3 steps"):
            safeguarded_newton(lambda x: x - 0.3, lambda x: 0.0, 0.0, 1.0, 1e-15, max_iterations=3)

    def test_flat_function_keeps_refining(self):
        """Test |f| ≤ tolerance on the whole bracket does not stop at the first iterate."""
        result = safeguarded_newton(lambda x: 1e-14 * (x - 0.3), lambda x: 1e-14, 0.0, 1.0, 1e-12)
        assert result.root == pytest.approx(0.3, rel=1e-12)
        assert result.iterations >= 1
