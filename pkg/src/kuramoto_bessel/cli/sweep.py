"""Sweep command - r(K) with its bounds and approximations over a K range."""

import rich_click as click

from kuramoto_bessel.cli.main import Context, exit_on_error, pass_context
from kuramoto_bessel.core.types import Record

CLASSICAL_COLUMNS = ("K", "r", "lower_sqrt", "A", "upper_half", "L", "Lpol")
GENERAL_COLUMNS = ("K", "r", "bound_half", "bound_sqrt", "bound_quarter_power", "bound_sharp")


@click.command()
@click.option("--k-min", type=float, default=1.01, show_default=True, help="First K")
@click.option("--k-max", type=float, default=3.0, show_default=True, help="Last K")
@click.option(
    "--steps", type=click.IntRange(min=2), default=200, show_default=True, help="Number of K"
)
@click.option("--nu", type=float, default=0.0, show_default=True, help="Bessel order ν ≥ 0")
@pass_context
def sweep(ctx: Context, k_min: float, k_max: float, steps: int, nu: float) -> None:
    """Tabulate r(K) on an even K grid.

    For ν = 0 the rows carry the classical bounds and both approximations;
    for other orders they carry the four general upper bounds, left empty
    where K is outside a bound's domain.
    """
    from kuramoto_bessel.cli.output import emit
    from kuramoto_bessel.core import DomainError, EvaluationGrid, as_order
    from kuramoto_bessel.solver import solve_curve

    with exit_on_error():
        order = as_order(nu)
        order.require_nonnegative("sweep")
        if not k_min > order.nu + 1.0:
            raise DomainError(f"--k-min must exceed ν+1 = {order.nu + 1.0:g}, got {k_min!r}")
        ks = EvaluationGrid.linear(k_min, k_max, steps).values()
        solutions = solve_curve(order, ks)
        if order.nu == 0.0:
            records = [_classical_record(s.K, s.r) for s in solutions]
            columns = CLASSICAL_COLUMNS
        else:
            records = [_general_record(order.nu, s.K, s.r) for s in solutions]
            columns = GENERAL_COLUMNS
    emit(records, columns, ctx.output)


def _classical_record(K: float, r: float) -> Record:
    from kuramoto_bessel.approx import (
        bound_A,
        bound_lower_sqrt,
        bound_upper_half,
        lagrange_L,
        rational_Lpol,
    )

    return {
        "K": K,
        "r": r,
        "lower_sqrt": bound_lower_sqrt(K),
        "A": bound_A(K),
        "upper_half": bound_upper_half(K),
        "L": lagrange_L(K),
        "Lpol": rational_Lpol(K),
    }


def _general_record(nu: float, K: float, r: float) -> Record:
    from kuramoto_bessel.approx import bound_general
    from kuramoto_bessel.core import BoundKind, DomainError

    record: Record = {"K": K, "r": r}
    for kind in BoundKind:
        try:
            record[f"bound_{kind.value}"] = bound_general(nu, K, kind).value
        except DomainError:
            record[f"bound_{kind.value}"] = None
    return record
