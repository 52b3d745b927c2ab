"""Solve command - nontrivial root of r = Ψ_ν(2Kr)."""

import rich_click as click

from kuramoto_bessel.cli.main import Context, exit_on_error, pass_context

COLUMNS = ("K", "nu", "r", "residual", "bracket_lo", "bracket_hi", "iterations", "sign_changes")


@click.command()
@click.option("--K", "k_value", type=float, required=True, help="Coupling strength K")
@click.option("--nu", type=float, default=0.0, show_default=True, help="Bessel order ν ≥ 0")
@click.option("--tol", type=float, default=None, help="Residual tolerance (default: 1e-12)")
@pass_context
def solve(ctx: Context, k_value: float, nu: float, tol: float | None) -> None:
    """Solve r = Ψ_ν(2Kr) for the order parameter r(K).

    Exits with status 1 when K ≤ ν+1, where only the trivial root exists.
    """
    from kuramoto_bessel.cli.output import emit
    from kuramoto_bessel.solver import solve_r

    with exit_on_error():
        solution = solve_r(nu, k_value, tol)
    emit([solution.as_record()], COLUMNS, ctx.output, single=True)
