"""Shared Typer app instance."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Annotated

import typer

__all__ = ["AppState", "app"]


@dataclass
class AppState:
    """Options given before the subcommand."""

    config_path: Path | None = None


def _version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        # Lazy import: package version lookup is not needed while rendering `modlie --help`.
        from modlie import __version__  # noqa: PLC0415

        typer.echo(f"modlie {__version__}")
        raise typer.Exit


def _setup_logging(verbose: bool) -> None:
    if not verbose:
        logging.getLogger("modlie").setLevel(logging.WARNING)
        return
    # Lazy import: the Rich logging handler is only needed with --verbose.
    from rich.logging import RichHandler  # noqa: PLC0415

    logging.basicConfig(
        level=logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(rich_tracebacks=True, show_path=False)],
    )
    logging.getLogger("modlie").setLevel(logging.DEBUG)


app = typer.Typer(
    name="modlie",
    help="modlie - exact computations with Lie algebras over F_p and the rationals",
    no_args_is_help=True,
    context_settings={"help_option_names": ["-h", "--help"]},
    suggest_commands=False,
    rich_markup_mode="rich",
)


@app.callback()
def main(
    ctx: typer.Context,
    version: Annotated[  # noqa: ARG001
        bool,
        typer.Option(
            "--version",
            "-v",
            help="Show version and exit",
            callback=_version_callback,
            is_eager=True,
        ),
    ] = False,
    verbose: Annotated[
        bool,
        typer.Option("--verbose", help="Log debug details (enumeration sizes, timings) to stderr"),
    ] = False,
    config: Annotated[
        Path | None,
        typer.Option("--config", "-c", help="Path to config file"),
    ] = None,
) -> None:
    """modlie - exact computations with Lie algebras over F_p and the rationals."""
    _setup_logging(verbose)
    ctx.obj = AppState(config_path=config)
