"""Catalog command: print a built-in algebra."""

from __future__ import annotations

from typing import Annotated

import typer

from modlie.cli.app import app
from modlie.cli.common import exit_on_error
from modlie.console import MSG_UNKNOWN_BUILTIN, console, print_error, print_hint
from modlie.errors import EXIT_USAGE


@app.command("builtin", rich_help_panel="Catalog")
def builtin_algebra(
    name: Annotated[
        str,
        typer.Argument(help="gl, sl, sl2, fsl2, heisenberg, aff2 or lie51"),
    ],
    p: Annotated[
        int,
        typer.Option("--p", help="Characteristic of the base field; 0 for the rationals"),
    ] = 0,
    n: Annotated[
        int | None,
        typer.Option("--n", help="Matrix size for gl and sl"),
    ] = None,
    emit: Annotated[
        bool,
        typer.Option("--emit", help="Print the algebra file (pipe it into check/analyze/pmap with -)"),
    ] = False,
) -> None:
    """Print a catalog algebra as a bracket table or as an algebra file."""
    # Lazy import: the algebra stack is not needed while rendering `modlie --help`.
    from modlie.catalog import BUILTIN_NAMES, builtin  # noqa: PLC0415
    from modlie.field import FieldSpec  # noqa: PLC0415
    from modlie.fileformat import emit_algebra_file  # noqa: PLC0415
    from modlie.liealg import format_combination  # noqa: PLC0415

    if name not in BUILTIN_NAMES:
        print_error(MSG_UNKNOWN_BUILTIN.format(name=name))
        print_hint(f"choose from {', '.join(BUILTIN_NAMES)}")
        raise typer.Exit(EXIT_USAGE)
    try:
        spec = FieldSpec(p)
    except ValueError as e:
        print_error(str(e))
        raise typer.Exit(EXIT_USAGE) from e
    with exit_on_error():
        algebra = builtin(name, spec, n)

    file_name = f"{name}{n}" if n is not None and name in ("gl", "sl") else name
    if emit:
        typer.echo(emit_algebra_file(algebra, file_name), nl=False)
        return

    # Lazy import: Rich table rendering is not needed while building `modlie --help`.
    from rich.table import Table  # noqa: PLC0415

    table = Table(
        title=f"{file_name} over {spec.label} (dimension {algebra.dim})",
        show_header=True,
        header_style="bold cyan",
    )
    table.add_column("[a, b]", style="magenta")
    for label in algebra.labels:
        table.add_column(label)
    for i, label in enumerate(algebra.labels):
        row = [format_combination(spec, algebra.labels, algebra.structure[i][j]) for j in range(algebra.dim)]
        table.add_row(label, *(value if value != "0" else "[dim]0[/]" for value in row))
    console.print(table)
