"""Figure command - data series for re-plotting the three figures."""

import rich_click as click

from kuramoto_bessel.cli.main import Context, exit_on_error, pass_context
from kuramoto_bessel.core.types import Record

FIGURE_COLUMNS = {
    "1": ("x", "g_0", "g_1", "g_2", "g_3"),
    "2": ("K", "r", "lower_sqrt", "A", "L"),
    "3": ("K", "r", "A", "Lpol"),
}

# Right end of each figure's axis
_AXIS_END = {"1": 10.0, "2": 3.0, "3": 4.0}


@click.command()
@click.argument("figure_id", type=click.Choice(sorted(FIGURE_COLUMNS)))
@click.option("--points", type=click.IntRange(min=2), default=None, help="Rows (default: 500)")
@pass_context
def figure(ctx: Context, figure_id: str, points: int | None) -> None:
    """Emit the data series of figure FIGURE_ID.

    \b
    1  g_a(x) for a = 0..3 on (0, 10]
    2  r(K) with √(1-1/K), A(K) and L(K) on (1, 3]
    3  r(K) with A(K) and L_pol(K) on (1, 4]

    Axes start at the configured offset above the singular endpoint.
    """
    from kuramoto_bessel.cli.output import emit
    from kuramoto_bessel.core import EvaluationGrid, get_config

    settings = get_config().get_section("figure")
    count = int(settings["points"]) if points is None else points
    offset = float(settings["offset"])

    with exit_on_error():
        if figure_id == "1":
            xs = EvaluationGrid.linear(offset, _AXIS_END[figure_id], count).values()
            records = [_relaxation_record(float(x)) for x in xs]
        else:
            ks = EvaluationGrid.linear(1.0 + offset, _AXIS_END[figure_id], count).values()
            records = _approximation_records(ks.tolist())
    emit(records, FIGURE_COLUMNS[figure_id], ctx.output)


def _relaxation_record(x: float) -> Record:
    from kuramoto_bessel.turan import fig1_value

    record: Record = {"x": x}
    for a in range(4):
        record[f"g_{a}"] = fig1_value(a, x)
    return record


def _approximation_records(ks: list[float]) -> list[Record]:
    from kuramoto_bessel.approx import bound_A, bound_lower_sqrt, lagrange_L, rational_Lpol
    from kuramoto_bessel.solver import solve_curve

    return [
        {
            "K": s.K,
            "r": s.r,
            "lower_sqrt": bound_lower_sqrt(s.K),
            "A": bound_A(s.K),
            "L": lagrange_L(s.K),
            "Lpol": rational_Lpol(s.K),
        }
        for s in solve_curve(0.0, ks)
    ]
