"""The config command group: init, show, path, validate."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, Annotated

import typer

from modlie.cli.app import app
from modlie.console import MSG_CONFIG_NOT_FOUND, console, print_error, print_success
from modlie.paths import config_search_paths, default_config_path, find_config_path

if TYPE_CHECKING:
    from modlie.config import Settings

config_app = typer.Typer(
    name="config",
    help="Create, inspect and validate the modlie config file.",
    no_args_is_help=True,
)


_PathOption = Annotated[
    Path | None,
    typer.Option("--path", "-p", help="Config file to use instead of the search order"),
]
_ForceOption = Annotated[
    bool,
    typer.Option("--force", "-f", help="Overwrite an existing file without asking"),
]
_RawOption = Annotated[
    bool,
    typer.Option("--raw", "-r", help="Print the file unformatted"),
]
_EffectiveOption = Annotated[
    bool,
    typer.Option("--effective", "-e", help="Print the settings after defaults are filled in"),
]


def _generate_template() -> str:
    """The annotated example-config.yaml shipped in the package."""
    # Lazy import: package resource lookup is only needed when generating a config template.
    from importlib import resources  # noqa: PLC0415

    try:
        return (resources.files("modlie") / "example-config.yaml").read_text(encoding="utf-8")
    except FileNotFoundError as e:
        print_error("example-config.yaml is missing from the installed package")
        raise typer.Exit(1) from e


def _get_config_file(path: Path | None) -> Path | None:
    if path:
        return path.expanduser().resolve()
    found = find_config_path()
    return found.resolve() if found else None


def _report_missing_config(explicit_path: Path | None = None) -> None:
    console.print("[yellow]Config file not found.[/]")
    if explicit_path:
        console.print(f"No file at [cyan]{explicit_path}[/]")
    else:
        for candidate in config_search_paths():
            state = "[green]exists[/]" if candidate.exists() else "[dim]missing[/]"
            console.print(f"  {candidate} ({state})")
    console.print("Defaults apply. Run [bold cyan]modlie config init[/] to write a template.")


def _load_or_exit(config_file: Path | None) -> Settings:
    # Lazy import: pydantic adds startup time, only load when actually needed
    from modlie.config import Settings, load_config  # noqa: PLC0415

    if config_file is None:
        return Settings()
    try:
        return load_config(config_file)
    except FileNotFoundError as e:
        print_error(str(e))
        raise typer.Exit(1) from e
    except Exception as e:
        print_error(f"Invalid config: {e}")
        raise typer.Exit(1) from e


def _print_settings(settings: Settings, title: str) -> None:
    from rich.table import Table  # noqa: PLC0415

    from modlie.scenarios import oracle_store_path  # noqa: PLC0415

    store = oracle_store_path(settings)
    table = Table(title=title, show_header=False)
    table.add_column("Setting", style="magenta")
    table.add_column("Value")
    table.add_row("Enumeration cap", str(settings.enumeration_cap))
    table.add_row("Seed", str(settings.seed))
    for name, size in settings.samples.model_dump().items():
        table.add_row(f"Samples: {name}", str(size))
    table.add_row("Oracle store", f"{store}" if store.is_file() else f"{store} [dim](packaged copy used)[/]")
    console.print(table)


@config_app.command("init")
def config_init(
    path: _PathOption = None,
    force: _ForceOption = False,
) -> None:
    """Write the annotated config template."""
    target = path.expanduser().resolve() if path else default_config_path()
    if target.exists() and not force:
        console.print(f"[bold yellow]Config file already exists:[/] [cyan]{target}[/]")
        if not typer.confirm("Overwrite it?"):
            console.print("[dim]Aborted.[/]")
            raise typer.Exit(0)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(_generate_template(), encoding="utf-8")
    print_success(f"Config file created at: {target}")


@config_app.command("show")
def config_show(
    path: _PathOption = None,
    raw: _RawOption = False,
    effective: _EffectiveOption = False,
) -> None:
    """Show the config file, or with --effective the settings modlie will use."""
    config_file = _get_config_file(path)
    if config_file is not None and not config_file.exists():
        _report_missing_config(config_file)
        raise typer.Exit(1)

    if effective:
        settings = _load_or_exit(config_file)
        if raw:
            import yaml  # noqa: PLC0415

            typer.echo(yaml.safe_dump(settings.model_dump(mode="json", exclude={"config_path"}), sort_keys=True), nl=False)
            return
        _print_settings(settings, f"Effective settings ({config_file or 'defaults'})")
        return

    if config_file is None:
        _report_missing_config()
        raise typer.Exit(0)

    content = config_file.read_text(encoding="utf-8")
    if raw:
        typer.echo(content, nl=False)
        return

    from rich.syntax import Syntax  # noqa: PLC0415

    console.print(f"[bold green]Config file:[/] [cyan]{config_file}[/]")
    console.print(Syntax(content, "yaml", theme="monokai", line_numbers=True, word_wrap=True))


@config_app.command("path")
def config_path(
    path: _PathOption = None,
) -> None:
    """Print the config file path."""
    config_file = _get_config_file(path)
    if config_file is None:
        _report_missing_config()
        raise typer.Exit(1)
    typer.echo(str(config_file))


@config_app.command("validate")
def config_validate(
    path: _PathOption = None,
) -> None:
    """Check the config file against the settings schema."""
    config_file = _get_config_file(path)
    if config_file is None:
        print_error(MSG_CONFIG_NOT_FOUND)
        raise typer.Exit(1)
    settings = _load_or_exit(config_file)
    print_success(f"Valid config: {config_file}")
    _print_settings(settings, "Settings")


app.add_typer(config_app, name="config", rich_help_panel="Configuration")
