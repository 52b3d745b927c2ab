"""Tests for the Bessel kernel."""
