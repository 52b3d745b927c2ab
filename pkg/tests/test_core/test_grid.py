"""Tests for evaluation grids and orders."""

import math

import numpy as np
import pytest

from kuramoto_bessel.core.exceptions import DomainError, ValidationError
from kuramoto_bessel.core.grid import EvaluationGrid, Spacing
from kuramoto_bessel.core.order import Order, as_order, check_positive


class TestEvaluationGrid:
    """Tests for EvaluationGrid."""

    def test_linear_values(self):
        """Test linear spacing."""
        grid = EvaluationGrid.linear(0.0, 1.0, 5)
        np.testing.assert_allclose(grid.values(), [0.0, 0.25, 0.5, 0.75, 1.0])
        assert len(grid) == 5

    def test_logarithmic_endpoints_exact(self):
        """Test log grids hit both endpoints exactly."""
        grid = EvaluationGrid.logarithmic(1e-4, 1e3, 4000)
        xs = grid.values()

        assert xs[0] == 1e-4
        assert xs[-1] == 1e3
        assert np.all(np.diff(xs) > 0)

    def test_spacing_from_string(self):
        """Test spacing accepts its string value."""
        grid = EvaluationGrid(1.0, 2.0, 3, "linear")
        assert grid.spacing is Spacing.LINEAR

    @pytest.mark.parametrize(
        "lo, hi, points, spacing",
        [
            (1.0, 1.0, 10, Spacing.LINEAR),
            (2.0, 1.0, 10, Spacing.LINEAR),
            (0.0, 1.0, 10, Spacing.LOGARITHMIC),
            (1.0, 2.0, 1, Spacing.LINEAR),
            (1.0, math.inf, 10, Spacing.LINEAR),
            (1.0, 2.0, 2.5, Spacing.LINEAR),
        ],
    )
    def test_invalid_grids(self, lo, hi, points, spacing):
        """Test invalid grids raise ValidationError."""
        with pytest.raises(ValidationError):
            EvaluationGrid(lo, hi, points, spacing)


class TestOrder:
    """Tests for Order."""

    def test_coerces_to_float(self):
        """Test integer orders are stored as floats."""
        order = Order(2)
        assert order.nu == 2.0
        assert float(order) == 2.0
        assert str(order) == "ν=2"

    def test_shifted(self):
        """Test shifting the order."""
        assert Order(0.5).shifted(2) == Order(2.5)

    @pytest.mark.parametrize("nu", [-1.0, -0.51, math.nan, math.inf])
    def test_invalid_order(self, nu):
        """Test orders below -1/2 or non-finite are rejected."""
        with pytest.raises(DomainError):
            Order(nu)

    def test_minimum_order_allowed(self):
        """Test ν = -1/2 is accepted."""
        assert Order(-0.5).nu == -0.5

    def test_require_nonnegative(self):
        """Test the ν ≥ 0 guard names the operation."""
        with pytest.raises(DomainError, match="margin_ineq9"):
            Order(-0.5).require_nonnegative("margin_ineq9")
        Order(0).require_nonnegative("margin_ineq9")

    def test_as_order(self):
        """Test as_order passes Orders through."""
        order = Order(1)
        assert as_order(order) is order
        assert as_order(1) == order


class TestCheckPositive:
    """Tests for check_positive."""

    @pytest.mark.parametrize("x", [0.0, -1.0, math.nan])
    def test_rejects(self, x):
        """Test non-positive and NaN arguments."""
        with pytest.raises(DomainError, match="x must be > 0"):
            check_positive(x)

    def test_accepts(self):
        """Test positive arguments come back as float."""
        assert check_positive(3) == 3.0
