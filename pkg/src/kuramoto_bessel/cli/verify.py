"""Verify command - check one inequality on an x grid."""

import rich_click as click

from kuramoto_bessel.cli.main import NEGATIVE_EXIT, Context, console, exit_on_error, pass_context

COLUMNS = (
    "inequality",
    "nu",
    "x_min",
    "x_max",
    "points",
    "spacing",
    "min_margin",
    "argmin_x",
    "violations",
)


@click.command()
@click.option("--inequality", "inequality_id", required=True, help="Inequality id, e.g. edin")
@click.option("--nu", type=float, default=0.0, show_default=True, help="Bessel order ν")
@click.option("--x-min", type=float, default=None, help="First x (default: 1e-4)")
@click.option("--x-max", type=float, default=None, help="Last x (default: 1e3)")
@click.option("--points", type=int, default=None, help="Grid points (default: 4000)")
@click.option(
    "--spacing",
    type=click.Choice(["linear", "logarithmic"]),
    default=None,
    help="Grid spacing (default: logarithmic)",
)
@pass_context
def verify(
    ctx: Context,
    inequality_id: str,
    nu: float,
    x_min: float | None,
    x_max: float | None,
    points: int | None,
    spacing: str | None,
) -> None:
    """Evaluate an inequality's margin on a grid and count violations.

    Exits with status 1 when any grid point has a margin ≤ 0.  A clean run is
    evidence on finitely many points, not a proof.
    """
    from kuramoto_bessel.cli.output import emit
    from kuramoto_bessel.core import EvaluationGrid, Spacing, get_config
    from kuramoto_bessel.turan import sweep

    with exit_on_error():
        default = get_config().default_grid()
        grid = EvaluationGrid(
            default.lo if x_min is None else x_min,
            default.hi if x_max is None else x_max,
            default.points if points is None else points,
            default.spacing if spacing is None else Spacing(spacing),
        )
        report = sweep(inequality_id, nu, grid)

    emit([report.as_record()], COLUMNS, ctx.output, single=True)
    if not report.holds:
        console.print(
            f"[red]{report.violations} violation(s)[/red] of {inequality_id} at ν={nu:g}; "
            f"min margin {report.min_margin:.3g} at x={report.argmin_x:g}"
        )
        raise SystemExit(NEGATIVE_EXIT)
