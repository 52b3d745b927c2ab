"""Main CLI entry point using rich-click."""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import rich_click as click
from rich.console import Console
from rich.logging import RichHandler

from kuramoto_bessel.cli.output import MAX_PRECISION, OutputFormat, OutputSpec
from kuramoto_bessel.core.config import get_config
from kuramoto_bessel.core.exceptions import (
    BesselOverflowError,
    ConfigError,
    DomainError,
    KuramotoError,
    ValidationError,
)

# Configure rich-click
click.rich_click.SHOW_ARGUMENTS = True

# Diagnostics go to stderr; stdout carries data only
console = Console(stderr=True)

# Exit status for usage and domain errors; mathematical negatives exit 1
USAGE_EXIT = 2
NEGATIVE_EXIT = 1


# Context object to pass state between commands
class Context:
    def __init__(self) -> None:
        self.output = OutputSpec()
        self.precision_given: bool = False
        self.verbose: bool = False


pass_context = click.make_pass_decorator(Context, ensure=True)


def _configure_logging(verbose: bool) -> None:
    logger = logging.getLogger("kuramoto_bessel")
    logger.handlers.clear()
    logger.addHandler(RichHandler(console=console, show_path=False))
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    logger.propagate = False


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Report package errors on stderr and exit with the matching status."""
    try:
        yield
    except (DomainError, ValidationError, BesselOverflowError, ConfigError) as exc:
        console.print(f"[red]Error:[/red] {exc}")
        raise SystemExit(USAGE_EXIT) from exc
    except KuramotoError as exc:
        console.print(f"[red]Error:[/red] {exc}")
        raise SystemExit(NEGATIVE_EXIT) from exc


@click.group()
@click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=None,
    help="Output format (default: csv)",
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True, path_type=Path),
    help="Write output to a file instead of stdout",
)
@click.option(
    "--precision",
    type=click.IntRange(1, MAX_PRECISION),
    default=None,
    help="Significant digits of floating-point output (default: 15)",
)
@click.option(
    "--verbose",
    is_flag=True,
    help="Log solver and search progress to stderr",
)
@click.version_option(package_name="kuramoto-bessel")
@pass_context
def cli(
    ctx: Context,
    output_format: str | None,
    out: Path | None,
    precision: int | None,
    verbose: bool,
) -> None:
    """Order parameter of the stochastic Kuramoto model.

    Solve r = Ψ_ν(2Kr), check the Turán-type inequalities behind its bounds,
    and tabulate the approximations of r(K).  Results are written as CSV or
    JSON.
    """
    settings = get_config().get_section("output")
    ctx.output = OutputSpec(
        format=OutputFormat(output_format or settings["format"]),
        path=out,
        precision=int(settings["precision"]) if precision is None else precision,
    )
    ctx.precision_given = precision is not None
    ctx.verbose = verbose
    _configure_logging(verbose)


# Import and register subcommands (must be after cli is defined to avoid circular imports)
from kuramoto_bessel.cli.eval import eval_cmd  # noqa: E402
from kuramoto_bessel.cli.figure import figure  # noqa: E402
from kuramoto_bessel.cli.solve import solve  # noqa: E402
from kuramoto_bessel.cli.sweep import sweep  # noqa: E402
from kuramoto_bessel.cli.table import table  # noqa: E402
from kuramoto_bessel.cli.threshold import threshold  # noqa: E402
from kuramoto_bessel.cli.verify import verify  # noqa: E402

cli.add_command(solve)
cli.add_command(table)
cli.add_command(sweep)
cli.add_command(verify)
cli.add_command(figure)
cli.add_command(threshold)
cli.add_command(eval_cmd, name="eval")


def main() -> None:
    """Entry point for console script."""
    cli()


if __name__ == "__main__":
    main()
