"""Turán-type inequality margins, sharpness functionals and grid sweeps."""

from __future__ import annotations

import importlib
import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from kuramoto_bessel.core.config import get_config
from kuramoto_bessel.core.exceptions import ValidationError
from kuramoto_bessel.core.grid import EvaluationGrid
from kuramoto_bessel.core.order import Order, as_order
from kuramoto_bessel.core.results import InequalityReport
from kuramoto_bessel.core.types import OrderLike
from kuramoto_bessel.turan.experiments import (
    find_omega_threshold,
    find_turaninter_crossover,
    omega_relaxation,
    omega_sup,
    x_nu_root,
)
from kuramoto_bessel.turan.margins import (
    margin_edin,
    margin_ineq9,
    margin_lower_turan,
    margin_new_turan,
    margin_turanb,
    margin_turaninter,
)
from kuramoto_bessel.turan.sharpness import (
    beta_limit,
    fig1_value,
    gamma_limit,
    lambda_leading_term,
    lambda_nu,
    xi_nu,
)

logger = logging.getLogger(__name__)

MarginFunction = Callable[[Order, float], float]

_INEQUALITIES: dict[str, str] = {
    "turanb": "kuramoto_bessel.turan.margins:margin_turanb",
    "lower_turan": "kuramoto_bessel.turan.margins:margin_lower_turan",
    "edin": "kuramoto_bessel.turan.margins:margin_edin_for_order",
    "turaninter": "kuramoto_bessel.turan.margins:margin_turaninter",
    "ineq9": "kuramoto_bessel.turan.margins:margin_ineq9",
    "new_turan": "kuramoto_bessel.turan.margins:margin_new_turan",
    "fig1": "kuramoto_bessel.turan.margins:margin_fig1",
}


def get_margin(inequality_id: str) -> MarginFunction:
    """Get the margin function registered under ``inequality_id``.

    Raises:
        ValidationError: unknown id
    """
    if inequality_id not in _INEQUALITIES:
        available = list(_INEQUALITIES.keys())
        raise ValidationError(f"Unknown inequality: {inequality_id}. Available: {available}")

    # Lazy import
    module_path, attr = _INEQUALITIES[inequality_id].rsplit(":", 1)
    module = importlib.import_module(module_path)
    margin: MarginFunction = getattr(module, attr)
    return margin


def register_inequality(inequality_id: str, import_path: str) -> None:
    """Register a custom margin.

    Args:
        inequality_id: Name used by ``sweep`` and the CLI
        import_path: Import path like "mypackage.margins:my_margin"; the
            function takes (order, x) and is positive where the inequality holds
    """
    _INEQUALITIES[inequality_id] = import_path


def list_inequalities() -> list[str]:
    """List registered inequality ids."""
    return list(_INEQUALITIES.keys())


def sweep(
    inequality_id: str,
    order: OrderLike,
    grid: EvaluationGrid | None = None,
    max_workers: int | None = None,
) -> InequalityReport:
    """Evaluate one margin at every grid point.

    Args:
        inequality_id: Registered inequality id
        order: Bessel order passed to the margin
        grid: Sample points, default from the [grid] config section
        max_workers: Evaluate in a thread pool of this size; results are
            collected in grid order either way

    Returns:
        Report with the minimum margin, its first argmin and the number of
        points whose margin is not strictly positive
    """
    margin = get_margin(inequality_id)
    order = as_order(order)
    if grid is None:
        grid = get_config().default_grid()
    xs = grid.values()

    def evaluate(x: float) -> float:
        return margin(order, float(x))

    if max_workers is not None and max_workers > 1:
        pool = ThreadPoolExecutor(max_workers=max_workers, thread_name_prefix="kbessel-sweep")
        with pool:
            values = np.fromiter(pool.map(evaluate, xs), dtype=float, count=len(xs))
    else:
        values = np.fromiter(map(evaluate, xs), dtype=float, count=len(xs))

    # np.argmin returns the lowest index among ties
    i = int(np.argmin(values))
    violations = int(np.count_nonzero(~(values > 0.0)))
    logger.debug(
        f"sweep {inequality_id} at {order}: min {values[i]:.3e} at x={xs[i]:g}, "
        f"{violations} violations"
    )
    return InequalityReport(
        inequality_id=inequality_id,
        order=order,
        grid=grid,
        min_margin=float(values[i]),
        argmin_x=float(xs[i]),
        violations=violations,
    )


__all__ = [
    "MarginFunction",
    "beta_limit",
    "fig1_value",
    "find_omega_threshold",
    "find_turaninter_crossover",
    "gamma_limit",
    "get_margin",
    "lambda_leading_term",
    "lambda_nu",
    "list_inequalities",
    "margin_edin",
    "margin_ineq9",
    "margin_lower_turan",
    "margin_new_turan",
    "margin_turanb",
    "margin_turaninter",
    "omega_relaxation",
    "omega_sup",
    "register_inequality",
    "sweep",
    "x_nu_root",
    "xi_nu",
]
