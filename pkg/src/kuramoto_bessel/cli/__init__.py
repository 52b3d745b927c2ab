"""CLI for kuramoto-bessel."""
