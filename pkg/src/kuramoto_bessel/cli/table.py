"""Table command - published error table of A(K) and L_pol(K)."""

import rich_click as click

from kuramoto_bessel.cli.main import Context, exit_on_error, pass_context

COLUMNS = ("K", "A_minus_r", "Lpol_minus_r", "r", "L_minus_r")


@click.command()
@pass_context
def table(ctx: Context) -> None:
    """Differences A(K) - r(K) and L_pol(K) - r(K) at K = 1.5, 2, 5, 10, 100.

    Without --precision the two difference columns are rounded to the digits
    of the published table, so the output can be compared line by line.
    """
    from kuramoto_bessel.approx import (
        PUBLISHED_ERROR_TABLE,
        error_table,
        printed_significant_digits,
    )
    from kuramoto_bessel.cli.output import emit, round_value

    with exit_on_error():
        rows = error_table()

    records = []
    for row in rows:
        record = row.as_record()
        printed = PUBLISHED_ERROR_TABLE.get(row.K)
        if printed is not None and not ctx.precision_given:
            for column, text in zip(("A_minus_r", "Lpol_minus_r"), printed):
                record[column] = round_value(record[column], printed_significant_digits(text))
        records.append(record)
    emit(records, COLUMNS, ctx.output)
