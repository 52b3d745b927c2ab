"""Threshold command - smallest order with h_ν < 0 on (0, ∞)."""

import rich_click as click

from kuramoto_bessel.cli.main import Context, exit_on_error, pass_context

COLUMNS = ("nu_star", "tolerance")


@click.command()
@click.option(
    "--tolerance",
    type=click.FloatRange(min=0.0, min_open=True),
    default=0.01,
    show_default=True,
    help="Width of the final ν bracket",
)
@pass_context
def threshold(ctx: Context, tolerance: float) -> None:
    """Bisect on ν for the threshold of Ω_ν^{4/(2ν+1)} + (2/x)Ω_ν < 1.

    The expected answer is close to ν = 0.3.
    """
    from kuramoto_bessel.cli.output import emit
    from kuramoto_bessel.turan import find_omega_threshold

    with exit_on_error():
        nu_star = find_omega_threshold(tolerance)
    emit([{"nu_star": nu_star, "tolerance": tolerance}], COLUMNS, ctx.output, single=True)
