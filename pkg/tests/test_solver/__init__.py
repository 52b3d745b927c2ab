"""Tests for the order-parameter solver."""
