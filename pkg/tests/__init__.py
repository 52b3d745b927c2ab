"""Tests for kuramoto-bessel."""
