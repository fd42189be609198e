"""The verify-paper command."""

from __future__ import annotations

from typing import TYPE_CHECKING, Annotated

import typer

from modlie.cli.app import app
from modlie.cli.common import (
    CapOption,
    JsonOption,
    SeedOption,
    load_settings_or_exit,
    print_report,
    progress_bar,
)
from modlie.console import print_error, print_success, print_warning
from modlie.errors import EXIT_FAIL, EXIT_USAGE

if TYPE_CHECKING:
    from modlie.config import Settings
    from modlie.scenarios import Oracles


def _load_oracles_or_exit(settings: Settings) -> Oracles:
    from modlie.scenarios import load_oracles  # noqa: PLC0415

    try:
        return load_oracles(settings)
    except Exception as e:
        print_error(f"Invalid oracle store: {e}")
        raise typer.Exit(EXIT_FAIL) from e


@app.command("verify-paper", rich_help_panel="Verification")
def verify_paper(
    ctx: typer.Context,
    scenario: Annotated[
        list[str] | None,
        typer.Option("--scenario", "-s", help="Scenario id or family (repeatable), e.g. WEYL-5.5 or LIE-5.1"),
    ] = None,
    json_output: JsonOption = False,
    cap: CapOption = None,
    seed: SeedOption = None,
    regen_oracles: Annotated[
        bool,
        typer.Option("--regen-oracles", help="Write the computed oracle values to the oracle store"),
    ] = False,
) -> None:
    """Run the counterexample and consistency scenarios and report pass/fail/skip."""
    # Lazy import: the scenario suite pulls in the whole algebra stack.
    from modlie.scenarios import (  # noqa: PLC0415
        oracle_store_path,
        run_scenarios,
        save_oracles,
        select_scenarios,
    )

    settings = load_settings_or_exit(ctx, cap=cap, seed=seed)
    try:
        selected = select_scenarios(scenario)
    except ValueError as e:
        print_error(str(e))
        raise typer.Exit(EXIT_USAGE) from e

    oracles = None if regen_oracles else _load_oracles_or_exit(settings)
    if json_output:
        report, computed = run_scenarios(settings, scenario, oracles=oracles)
    else:
        with progress_bar("Verifying", len(selected)) as (progress, task_id):
            report, computed = run_scenarios(
                settings,
                scenario,
                oracles=oracles,
                on_done=lambda e: progress.update(task_id, advance=1, description=f"[cyan]{e.scenario}[/]"),
            )

    if regen_oracles:
        store = _load_oracles_or_exit(settings)
        store.update(computed)
        path = oracle_store_path(settings)
        save_oracles(path, store)
        if not report.passed:
            print_warning("Some scenarios failed; their oracle values were written anyway")
        print_success(f"Oracle store written: {path} ({len(computed)} scenarios)")
        raise typer.Exit(0)

    print_report(report, as_json=json_output, title="verify-paper")
