"""CSV/JSON writers with fixed number formatting."""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import rich_click as click

from kuramoto_bessel.core.exceptions import ValidationError
from kuramoto_bessel.core.types import Record

MAX_PRECISION = 17


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class OutputSpec:
    """Where and how command output is written.

    Attributes:
        format: csv or json
        path: Output file, standard output when None
        precision: Significant digits for floats, 1..17
    """

    format: OutputFormat = OutputFormat.CSV
    path: Path | None = None
    precision: int = 15

    def __post_init__(self) -> None:
        object.__setattr__(self, "format", OutputFormat(self.format))
        if isinstance(self.precision, bool) or not 1 <= self.precision <= MAX_PRECISION:
            raise ValidationError(
                f"precision must be in 1..{MAX_PRECISION}, got {self.precision!r}"
            )


def round_value(value: float | int | str | None, precision: int) -> float | int | str | None:
    """Round floats to ``precision`` significant digits; None for NaN/inf."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    value = float(value)
    if not math.isfinite(value):
        return None
    return float(f"{value:.{precision}g}")


def _csv_cell(value: float | int | str | None) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render(
    records: Sequence[Record], columns: Sequence[str], spec: OutputSpec, single: bool
) -> str:
    """Render records in ``columns`` order; ``single`` emits one JSON object."""
    rows = [
        {name: round_value(record.get(name), spec.precision) for name in columns}
        for record in records
    ]

    if spec.format is OutputFormat.JSON:
        payload: object = rows[0] if single else rows
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row[name]) for name in columns])
    return buffer.getvalue()


def emit(
    records: Sequence[Record], columns: Sequence[str], spec: OutputSpec, single: bool = False
) -> None:
    """Write rendered records to ``spec.path`` or standard output."""
    text = render(records, columns, spec, single)
    if spec.path is None:
        click.echo(text, nl=False)
        return
    spec.path.write_text(text, encoding="utf-8", newline="\n")


__all__ = ["MAX_PRECISION", "OutputFormat", "OutputSpec", "emit", "render", "round_value"]
