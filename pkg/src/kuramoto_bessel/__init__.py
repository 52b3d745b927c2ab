"""kuramoto-bessel: Kuramoto order parameter r(K) and Turán-type Bessel ratio inequalities."""

try:
    from kuramoto_bessel._version import __version__
except ImportError:
    __version__ = "0.0.0.dev0"

from kuramoto_bessel.approx import (
    bound_A,
    bound_general,
    bound_lower_sqrt,
    bound_upper_half,
    error_table,
    lagrange_L,
    rational_Lpol,
)
from kuramoto_bessel.bessel import iv, psi, psi_mittag_leffler
from kuramoto_bessel.core.config import NumericsConfig, get_config, load_config, reload_config
from kuramoto_bessel.core.exceptions import (
    ConfigError,
    ConfigNotFoundError,
    DomainError,
    KuramotoError,
    NoNontrivialRootError,
    SolverError,
    ValidationError,
)
from kuramoto_bessel.core.grid import EvaluationGrid, Spacing
from kuramoto_bessel.core.order import Order
from kuramoto_bessel.core.results import ApproximationRow, InequalityReport, OrderParameterSolution
from kuramoto_bessel.solver import existence, solve_r
from kuramoto_bessel.turan import list_inequalities, register_inequality, sweep

__all__ = [
    # Version
    "__version__",
    # Core
    "Order",
    "EvaluationGrid",
    "Spacing",
    "OrderParameterSolution",
    "InequalityReport",
    "ApproximationRow",
    # Kernel
    "iv",
    "psi",
    "psi_mittag_leffler",
    # Solver
    "existence",
    "solve_r",
    # Approximations
    "bound_A",
    "bound_general",
    "bound_lower_sqrt",
    "bound_upper_half",
    "error_table",
    "lagrange_L",
    "rational_Lpol",
    # Inequalities
    "list_inequalities",
    "register_inequality",
    "sweep",
    # Config
    "load_config",
    "get_config",
    "reload_config",
    "NumericsConfig",
    # Exceptions
    "KuramotoError",
    "DomainError",
    "SolverError",
    "NoNontrivialRootError",
    "ConfigError",
    "ConfigNotFoundError",
    "ValidationError",
]
