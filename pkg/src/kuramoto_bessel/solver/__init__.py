"""Order parameter r(K) from the self-consistency equation."""

from kuramoto_bessel.solver.newton import NewtonResult, safeguarded_newton
from kuramoto_bessel.solver.order_parameter import (
    existence,
    origin_slope,
    residual,
    solve_curve,
    solve_r,
)

__all__ = [
    "NewtonResult",
    "existence",
    "origin_slope",
    "residual",
    "safeguarded_newton",
    "solve_curve",
    "solve_r",
]
