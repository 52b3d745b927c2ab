"""Tests for the closed-form approximations."""
