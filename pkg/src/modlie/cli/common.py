"""Shared CLI helpers, options, and utilities."""

from __future__ import annotations

import contextlib
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Annotated

import typer

from modlie.console import MSG_CAP_EXCEEDED, console, format_entry_details, format_status, print_error
from modlie.errors import (
    EXIT_CAP,
    EXIT_FAIL,
    EXIT_USAGE,
    AlgebraFileParseError,
    BadParametersError,
    CapExceededError,
    ModlieError,
)

if TYPE_CHECKING:
    from collections.abc import Generator

    from rich.progress import Progress, TaskID

    from modlie.config import Settings
    from modlie.fileformat import AlgebraFile
    from modlie.report import Report

# --- Shared CLI Options ---
SourceArg = Annotated[
    str,
    typer.Argument(help="Algebra file, or - to read standard input"),
]
JsonOption = Annotated[
    bool,
    typer.Option("--json", help="Print the deterministic JSON report instead of tables"),
]
CapOption = Annotated[
    int | None,
    typer.Option("--cap", min=1, help="Subspace enumeration cap (overrides the config)"),
]
SeedOption = Annotated[
    int | None,
    typer.Option("--seed", help="Seed for sampled checks (overrides the config)"),
]


@contextlib.contextmanager
def progress_bar(label: str, total: int) -> Generator[tuple[Progress, TaskID], None, None]:
    """Create a standardized progress bar with consistent styling.

    Yields (progress, task_id). Use progress.update(task_id, advance=1, description=...)
    to advance.
    """
    # Lazy import: Rich progress pulls in heavy rendering modules and slows `modlie --help`.
    from rich.progress import (  # noqa: PLC0415
        BarColumn,
        MofNCompleteColumn,
        Progress,
        SpinnerColumn,
        TextColumn,
        TimeElapsedColumn,
    )

    with Progress(
        SpinnerColumn(),
        TextColumn(f"[bold blue]{label}[/]"),
        BarColumn(),
        MofNCompleteColumn(),
        TextColumn("•"),
        TimeElapsedColumn(),
        TextColumn("•"),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True,
    ) as progress:
        task_id = progress.add_task("[dim]starting...[/]", total=total)
        yield progress, task_id


@contextlib.contextmanager
def exit_on_error() -> Generator[None, None, None]:
    """Turn library errors into a ✗ message and the documented exit code."""
    try:
        yield
    except CapExceededError as e:
        print_error(MSG_CAP_EXCEEDED.format(count=e.count, cap=e.cap))
        raise typer.Exit(EXIT_CAP) from e
    except (AlgebraFileParseError, BadParametersError) as e:
        print_error(str(e))
        raise typer.Exit(EXIT_USAGE) from e
    except ModlieError as e:
        print_error(str(e))
        raise typer.Exit(EXIT_FAIL) from e


def read_source(source: str) -> str:
    """Text of a file argument; ``-`` reads standard input."""
    if source == "-":
        return sys.stdin.read()
    path = Path(source).expanduser()
    if not path.is_file():
        print_error(f"File not found: [cyan]{source}[/]")
        raise typer.Exit(EXIT_USAGE)
    return path.read_text(encoding="utf-8")


def load_algebra_or_exit(source: str) -> AlgebraFile:
    """Parse and validate an algebra file or exit (2 for syntax, 1 for a Jacobi failure)."""
    # Lazy import: the algebra stack is not needed while rendering `modlie --help`.
    from modlie.fileformat import read_algebra_file  # noqa: PLC0415

    text = read_source(source)
    with exit_on_error():
        return read_algebra_file(text)


def load_settings_or_exit(
    ctx: typer.Context,
    *,
    cap: int | None = None,
    seed: int | None = None,
) -> Settings:
    """Load config (from the global --config) with per-command overrides, or exit."""
    # Lazy import: pydantic adds startup time, only load when actually needed
    from modlie.config import load_config  # noqa: PLC0415

    config_path = getattr(ctx.obj, "config_path", None)
    try:
        settings = load_config(config_path)
    except FileNotFoundError as e:
        print_error(str(e))
        raise typer.Exit(1) from e
    except Exception as e:
        print_error(f"Invalid config: {e}")
        raise typer.Exit(1) from e
    return settings.with_overrides(cap=cap, seed=seed)


def print_report(report: Report, *, as_json: bool, title: str) -> None:
    """Print the report (JSON or a table) and exit with its exit code."""
    if as_json:
        typer.echo(report.to_json(), nl=False)
        raise typer.Exit(report.exit_code)

    # Lazy import: Rich table rendering is not needed while building `modlie --help`.
    from rich.table import Table  # noqa: PLC0415

    table = Table(title=title, show_header=True, header_style="bold cyan")
    table.add_column("Check", style="magenta")
    table.add_column("Status")
    table.add_column("Details")
    for entry in report.entries:
        table.add_row(entry.scenario, format_status(entry.status), format_entry_details(entry.data))
    console.print(table)
    raise typer.Exit(report.exit_code)
