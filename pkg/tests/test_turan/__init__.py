"""Tests for the Turán-type inequalities."""
