"""Core types, results, configuration and exceptions for kuramoto-bessel."""

from .config import NumericsConfig, get_config, load_config, reload_config
from .exceptions import (
    BesselOverflowError,
    ConfigError,
    ConfigNotFoundError,
    ConvergenceError,
    DomainError,
    KuramotoError,
    NoBracketError,
    NoNontrivialRootError,
    RootNotFoundError,
    SolverError,
    ThresholdError,
    ValidationError,
)
from .grid import EvaluationGrid, Spacing
from .order import Order, as_order
from .results import (
    ApproximationRow,
    BesselValue,
    BoundKind,
    GeneralBound,
    InequalityReport,
    OrderParameterSolution,
    RatioValue,
)

__all__ = [
    # Exceptions
    "BesselOverflowError",
    "ConfigError",
    "ConfigNotFoundError",
    "ConvergenceError",
    "DomainError",
    "KuramotoError",
    "NoBracketError",
    "NoNontrivialRootError",
    "RootNotFoundError",
    "SolverError",
    "ThresholdError",
    "ValidationError",
    # Config
    "NumericsConfig",
    "get_config",
    "load_config",
    "reload_config",
    # Types
    "ApproximationRow",
    "BesselValue",
    "BoundKind",
    "EvaluationGrid",
    "GeneralBound",
    "InequalityReport",
    "Order",
    "OrderParameterSolution",
    "RatioValue",
    "Spacing",
    "as_order",
]
