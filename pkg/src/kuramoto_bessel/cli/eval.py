"""Eval command - one kernel or functional value."""

from collections.abc import Callable

import rich_click as click

from kuramoto_bessel.cli.main import Context, exit_on_error, pass_context

COLUMNS = ("function", "nu", "x", "value")

FUNCTIONS = ("iv", "psi", "omega", "gamma", "lambda", "xi")


def _evaluator(name: str, scaled: bool) -> Callable[[float, float], float]:
    from kuramoto_bessel.bessel import bessel_iv, bessel_ratio, gamma_amos, omega_amos
    from kuramoto_bessel.turan import lambda_nu, xi_nu

    evaluators: dict[str, Callable[[float, float], float]] = {
        "iv": lambda nu, x: bessel_iv(nu, x, scaled),
        "psi": bessel_ratio,
        "omega": omega_amos,
        "gamma": gamma_amos,
        "lambda": lambda_nu,
        "xi": xi_nu,
    }
    return evaluators[name]


@click.command()
@click.option("--fn", "function", type=click.Choice(FUNCTIONS), required=True, help="Function")
@click.option("--nu", type=float, default=0.0, show_default=True, help="Bessel order ν")
@click.option("--x", type=float, required=True, help="Argument x")
@click.option("--scaled", is_flag=True, help="Return e^{-x}·I_ν(x) (iv only)")
@pass_context
def eval_cmd(ctx: Context, function: str, nu: float, x: float, scaled: bool) -> None:
    """Evaluate I_ν, Ψ_ν, the Amos bounds Ω_ν and Γ_ν, or λ_ν and ξ_ν at x."""
    from kuramoto_bessel.cli.output import emit

    with exit_on_error():
        value = _evaluator(function, scaled)(nu, x)
    emit(
        [{"function": function, "nu": nu, "x": x, "value": value}],
        COLUMNS,
        ctx.output,
        single=True,
    )
