"""Tests for J_0 zeros and the Mittag-Leffler expansion of Ψ_0."""

import math

import numpy as np
import pytest
from scipy.special import j0, jn_zeros

from kuramoto_bessel.bessel import bessel_ratio, j0_zeros, psi_mittag_leffler
from kuramoto_bessel.core import DomainError, EvaluationGrid, ValidationError


class TestJ0Zeros:
    """Tests for j0_zeros."""

    def test_first_zeros(self):
        """Test the first two zeros."""
        zeros = j0_zeros(2)
        assert zeros[0] == pytest.approx(2.404825557695773, abs=1e-14)
        assert zeros[1] == pytest.approx(5.520078110286311, abs=1e-14)

    def test_matches_scipy(self):
        """Test 500 zeros against scipy."""
        np.testing.assert_allclose(j0_zeros(500), jn_zeros(0, 500), rtol=1e-12)

    def test_are_roots(self):
        """Test |J_0(z)| ≤ 1e-12 at every zero."""
        assert np.max(np.abs(j0(np.array(j0_zeros(500))))) <= 1e-12

    def test_spacing_tends_to_pi(self):
        """Test z_{n+1} - z_n → π."""
        zeros = j0_zeros(51)
        assert np.all(np.diff(zeros) > 0)
        assert abs(zeros[50] - zeros[49] - math.pi) <= 1e-3

    @pytest.mark.parametrize("count", [0, -1, 2.5, True])
    def test_invalid_count(self, count):
        """Test invalid counts."""
        with pytest.raises(ValidationError):
            j0_zeros(count)


class TestMittagLeffler:
    """Tests for psi_mittag_leffler."""

    def test_single_term(self):
        """Test n = 1 gives 2x/(x² + j²_{0,1})."""
        j = 2.404825557695773
        assert psi_mittag_leffler(1.0, 1) == pytest.approx(2 / (1 + j * j), rel=1e-14)

    def test_plain_partial_sum_at_one(self):
        """Test the plain sum of 500 terms at x = 1."""
        assert abs(psi_mittag_leffler(1.0, 500) - bessel_ratio(0, 1.0)) <= 1e-3

    def test_tail_corrected_agreement(self):
        """Test the tail-corrected sum matches Ψ_0 on [0.1, 20]."""
        for x in EvaluationGrid.linear(0.1, 20.0, 100).values():
            assert abs(psi_mittag_leffler(x, 500, tail=True) - bessel_ratio(0, x)) <= 1e-5

    def test_tail_shrinks_error(self):
        """Test the tail estimate improves the partial sum."""
        exact = bessel_ratio(0, 5.0)
        plain = abs(psi_mittag_leffler(5.0, 100) - exact)
        corrected = abs(psi_mittag_leffler(5.0, 100, tail=True) - exact)
        assert corrected < plain / 100

    def test_small_argument(self):
        """Test every summand vanishes as x → 0⁺."""
        assert psi_mittag_leffler(1e-12, 50) < 1e-12

    def test_invalid_argument(self):
        """Test x ≤ 0."""
        with pytest.raises(DomainError):
            psi_mittag_leffler(0.0, 10)
