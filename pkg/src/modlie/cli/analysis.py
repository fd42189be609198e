"""Analysis commands: check, analyze, pmap, rep."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, Annotated, Any

import typer

from modlie.cli.app import app
from modlie.cli.common import (
    CapOption,
    JsonOption,
    SeedOption,
    SourceArg,
    exit_on_error,
    load_algebra_or_exit,
    load_settings_or_exit,
    read_source,
)
from modlie.console import console, format_status, format_value, print_error, print_success

if TYPE_CHECKING:
    from modlie.config import Settings
    from modlie.fileformat import AlgebraFile
    from modlie.liealg import LieAlgebra
    from modlie.report import CheckEntry, Report

_MatsOption = Annotated[
    Path,
    typer.Option("--mats", "-m", help="Matrix-list file: one matrix per basis label"),
]


def _print_properties(report: Report, *, as_json: bool) -> None:
    """Print one property table per entry (or the JSON report) and exit with its code."""
    if as_json:
        typer.echo(report.to_json(), nl=False)
        raise typer.Exit(report.exit_code)

    # Lazy import: Rich table rendering is not needed while building `modlie --help`.
    from rich.table import Table  # noqa: PLC0415

    for entry in report.entries:
        table = Table(title=f"{entry.scenario} {format_status(entry.status)}", header_style="bold cyan")
        table.add_column("Property", style="magenta")
        table.add_column("Value")
        for key, value in entry.data.items():
            table.add_row(key, format_value(value))
        console.print(table)
    raise typer.Exit(report.exit_code)


def _digest_of(parsed: AlgebraFile, *extra: str) -> str:
    from modlie.fileformat import emit_algebra_file  # noqa: PLC0415
    from modlie.report import digest  # noqa: PLC0415

    return digest(emit_algebra_file(parsed.algebra, parsed.name), *extra)


def _cap_skip(name: str, count: int, cap: int) -> CheckEntry:
    from modlie.report import CAP_EXCEEDED, CheckEntry  # noqa: PLC0415

    return CheckEntry(scenario=name, status="skip", data={"error": CAP_EXCEEDED, "count": count, "cap": cap})


# --- analyze ---


def _structure_entry(algebra: LieAlgebra) -> CheckEntry:
    from modlie.liealg import (  # noqa: PLC0415
        center,
        derived_series,
        is_abelian,
        is_nilpotent,
        is_solvable,
        lower_central_series,
    )
    from modlie.report import CheckEntry  # noqa: PLC0415

    data = {
        "field": algebra.spec.label,
        "dim": algebra.dim,
        "derived_series": [s.dim for s in derived_series(algebra)],
        "lower_central_series": [s.dim for s in lower_central_series(algebra)],
        "abelian": is_abelian(algebra),
        "solvable": is_solvable(algebra),
        "nilpotent": is_nilpotent(algebra),
        "center": [algebra.format_vector(v) for v in center(algebra).vectors],
    }
    return CheckEntry(scenario="structure", status="pass", data=data)


def _killing_entry(algebra: LieAlgebra) -> CheckEntry:
    from modlie.killing import (  # noqa: PLC0415
        associativity_check,
        is_nondegenerate,
        killing_form,
        killing_radical,
    )
    from modlie.report import CheckEntry  # noqa: PLC0415

    form = killing_form(algebra)
    associative = associativity_check(form)
    data = {
        "gram": form.gram.to_lists(),
        "nondegenerate": is_nondegenerate(form),
        "kernel": [algebra.format_vector(v) for v in killing_radical(form).vectors],
        "associative": associative,
    }
    return CheckEntry(scenario="killing", status="pass" if associative else "fail", data=data)


def _ideals_entry(algebra: LieAlgebra, cap: int) -> CheckEntry:
    from modlie.errors import CapExceededError  # noqa: PLC0415
    from modlie.liealg import ideals, is_abelian, radical  # noqa: PLC0415
    from modlie.report import CheckEntry  # noqa: PLC0415

    try:
        rad = radical(algebra, cap=cap)
        found = ideals(algebra, cap=cap) if algebra.spec.is_prime_field else None
    except CapExceededError as e:
        return _cap_skip("ideals", e.count, e.cap)
    data = {
        "ideals": None if found is None else [[algebra.format_vector(v) for v in s.vectors] for s in found],
        "radical": [algebra.format_vector(v) for v in rad.vectors],
        "semisimple": rad.is_zero,
        "simple": None if found is None else (not is_abelian(algebra) and len(found) == 2),  # noqa: PLR2004
    }
    return CheckEntry(scenario="ideals", status="pass", data=data)


@app.command(rich_help_panel="Analysis")
def check(source: SourceArg) -> None:
    """Parse an algebra file and validate antisymmetry and the Jacobi identity."""
    parsed = load_algebra_or_exit(source)
    algebra = parsed.algebra
    print_success(f"[cyan]{parsed.name}[/]: dimension {algebra.dim} over {algebra.spec.label}, Jacobi identity holds")


@app.command(rich_help_panel="Analysis")
def analyze(
    ctx: typer.Context,
    source: SourceArg,
    json_output: JsonOption = False,
    cap: CapOption = None,
) -> None:
    """Derived and lower central series, center, ideals, radical and the Killing form."""
    from modlie.report import Report  # noqa: PLC0415

    settings = load_settings_or_exit(ctx, cap=cap)
    parsed = load_algebra_or_exit(source)
    algebra = parsed.algebra
    with exit_on_error():
        entries = [
            _structure_entry(algebra),
            _killing_entry(algebra),
            _ideals_entry(algebra, settings.enumeration_cap),
        ]
    _print_properties(Report(input_digest=_digest_of(parsed), entries=entries), as_json=json_output)


# --- pmap ---


def _pmap_entry(algebra: LieAlgebra, settings: Settings) -> CheckEntry:
    from modlie.report import CheckEntry  # noqa: PLC0415
    from modlie.restricted import (  # noqa: PLC0415
        find_p_mapping,
        p_mapping_obstruction,
        p_mapping_solution_space,
        p_mapping_to_table,
        verify_p_mapping,
    )

    pm = find_p_mapping(algebra)
    if pm is None:
        obstruction = p_mapping_obstruction(algebra)
        data: dict[str, Any] = {
            "restricted": False,
            "certificate": obstruction.label if obstruction else None,
            "ad_power": obstruction.unmatched.to_lists() if obstruction else None,
        }
        return CheckEntry(scenario="p-mapping", status="fail", data=data)
    result = verify_p_mapping(pm, samples=settings.samples.axiom3_pairs, seed=settings.seed)
    space = p_mapping_solution_space(algebra)
    data = {
        "restricted": True,
        "images": p_mapping_to_table(pm),
        "axioms_hold": result.passed,
        "violated_axiom": result.axiom,
        "witness": result.witness or None,
        "center_dim": space.center_dim,
        "unique": space.unique,
        "killing_nondegenerate": space.killing_nondegenerate,
    }
    return CheckEntry(scenario="p-mapping", status="pass" if result.passed else "fail", data=data)


@app.command(rich_help_panel="Analysis")
def pmap(
    ctx: typer.Context,
    source: SourceArg,
    json_output: JsonOption = False,
    seed: SeedOption = None,
) -> None:
    """Find a p-mapping, verify its axioms and report how unique it is."""
    from modlie.report import Report  # noqa: PLC0415

    settings = load_settings_or_exit(ctx, seed=seed)
    parsed = load_algebra_or_exit(source)
    with exit_on_error():
        entry = _pmap_entry(parsed.algebra, settings)
    if not json_output and entry.data.get("certificate"):
        print_error(f"No p-mapping: (ad {entry.data['certificate']})^p is not ad of any element")
    _print_properties(Report(input_digest=_digest_of(parsed), entries=[entry]), as_json=json_output)


# --- rep ---


def _rep_entries(algebra: LieAlgebra, mats_text: str, cap: int) -> list[CheckEntry]:
    from modlie.errors import CapExceededError, HomomorphismViolationError  # noqa: PLC0415
    from modlie.fileformat import load_matrix_list  # noqa: PLC0415
    from modlie.report import CheckEntry  # noqa: PLC0415
    from modlie.representation import (  # noqa: PLC0415
        check_representation,
        invariant_subspaces,
        irreducible_submodules,
        is_completely_reducible,
        is_semisimple_module,
    )

    mats, module_dim = load_matrix_list(mats_text, algebra)
    try:
        rep = check_representation(algebra, mats, module_dim)
    except HomomorphismViolationError as e:
        data = {"pair": list(e.labels), "difference": e.difference.to_lists()}
        return [CheckEntry(scenario="homomorphism", status="fail", data=data)]
    entries = [CheckEntry(scenario="homomorphism", status="pass", data={"module_dim": module_dim})]
    if not algebra.spec.is_prime_field:
        note = {"error": "UnsupportedField", "field": algebra.spec.label}
        entries.append(CheckEntry(scenario="invariant-subspaces", status="skip", data=note))
        return entries
    try:
        invariant = invariant_subspaces(rep, cap=cap)
        irreducible = irreducible_submodules(rep, cap=cap)
        reducible = is_completely_reducible(rep, cap=cap)
        semisimple = is_semisimple_module(rep, cap=cap)
    except CapExceededError as e:
        entries.append(_cap_skip("invariant-subspaces", e.count, e.cap))
        return entries
    entries.append(
        CheckEntry(
            scenario="invariant-subspaces",
            status="pass",
            data={
                "count": len(invariant),
                "subspaces": [s.to_lists() for s in invariant],
                "irreducible_count": len(irreducible),
            },
        )
    )
    entries.append(
        CheckEntry(
            scenario="complete-reducibility",
            status="pass" if reducible == semisimple else "fail",
            data={"completely_reducible": reducible, "semisimple_module": semisimple},
        )
    )
    return entries


@app.command(rich_help_panel="Analysis")
def rep(
    ctx: typer.Context,
    source: SourceArg,
    mats: _MatsOption,
    json_output: JsonOption = False,
    cap: CapOption = None,
) -> None:
    """Validate a representation, list its invariant subspaces and test complete reducibility."""
    from modlie.report import Report  # noqa: PLC0415

    settings = load_settings_or_exit(ctx, cap=cap)
    parsed = load_algebra_or_exit(source)
    mats_text = read_source(str(mats))
    with exit_on_error():
        entries = _rep_entries(parsed.algebra, mats_text, settings.enumeration_cap)
    report = Report(input_digest=_digest_of(parsed, mats_text), entries=entries)
    _print_properties(report, as_json=json_output)
