"""Custom exceptions for kuramoto-bessel."""


class KuramotoError(Exception):
    """Base exception for kuramoto-bessel."""


class DomainError(KuramotoError, ValueError):
    """Argument outside the domain of an operation."""


class BesselOverflowError(KuramotoError, OverflowError):
    """Unscaled Bessel value does not fit in a double."""


class ValidationError(KuramotoError, ValueError):
    """Invalid grid, output specification or identifier."""


class SolverError(KuramotoError):
    """Error while solving the self-consistency equation."""


class NoNontrivialRootError(SolverError):
    """The coupling is too weak for a nontrivial order parameter."""

    def __init__(self, nu: float, k_value: float) -> None:
        self.nu = nu
        self.k_value = k_value
        super().__init__(f"no nontrivial root (K ≤ ν+1): K={k_value!r}, ν={nu!r}")


class NoBracketError(SolverError):
    """Bracket endpoints do not straddle a sign change."""


class ConvergenceError(SolverError):
    """Iteration stopped before reaching the requested tolerance."""


class RootNotFoundError(KuramotoError):
    """No sign change was found on the scanned interval."""


class ThresholdError(KuramotoError):
    """Sign pattern of the threshold search is not monotone."""


class ConfigError(KuramotoError):
    """Error in configuration."""


class ConfigNotFoundError(ConfigError):
    """Configuration file not found."""
