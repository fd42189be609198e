"""The ``verify-paper`` scenario suite.

Each scenario computes its data, evaluates named expectations that hold by theory,
and compares a few computed values (the ``derived`` keys) with the oracle store.
The store is YAML keyed by scenario id; ``--regen-oracles`` rewrites it from a run.
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from dataclasses import dataclass
from functools import partial
from typing import TYPE_CHECKING, Any, NamedTuple

import yaml

from .catalog import builtin, builtin_with_embedding, lie_counterexample_matrices
from .errors import CapExceededError
from .field import FieldSpec
from .jordan import (
    as_polynomial_in,
    chevalley_decompose,
    companion_matrix,
    is_diagonalisable_over_base,
    is_nilpotent_matrix,
    is_semisimple_matrix,
)
from .killing import (
    cartan_semisimplicity,
    cartan_statements,
    killing_form,
    killing_radical,
)
from .linalg import (
    Matrix,
    Subspace,
    basis_vector,
    eigenspace,
    eigenvalues_in_field,
    is_zero_vector,
    min_poly,
    subspace_count,
)
from .liealg import ad, derived_series, is_solvable, radical
from .paths import oracles_path
from .poly import Polynomial, is_squarefree
from .report import CAP_EXCEEDED, CheckEntry, Report, digest
from .representation import (
    adjoint_rep,
    common_eigenvector,
    find_complement,
    invariant_subspaces,
    is_completely_reducible,
    is_semisimple_module,
    ladder_check,
    sl2_sym_power,
    triangularize,
    weight_decomposition,
)
from .restricted import (
    basis_image_candidates,
    evaluate_p_mapping,
    find_p_mapping,
    jacobson_si,
    p_mapping_obstruction,
    p_mapping_solution_space,
    p_mapping_to_table,
    pth_power_closure_check,
    pth_power_mapping,
    verify_p_mapping,
)

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence
    from pathlib import Path

    from .config import Settings

logger = logging.getLogger(__name__)

Oracles = dict[str, dict[str, Any]]

_PACKAGED_ORACLES = "oracles.yaml"


class Outcome(NamedTuple):
    """What a scenario computed."""

    checks: dict[str, bool]
    data: dict[str, Any]
    derived: tuple[str, ...] = ()


@dataclass(frozen=True)
class Scenario:
    """A named, cited check."""

    id: str
    citation: str
    run: Callable[[Settings], Outcome]

    @property
    def family(self) -> str:
        """Id without the parameter suffix (``LIE-5.1(3)`` -> ``LIE-5.1``)."""
        return self.id.split("(", 1)[0]


def _fmt(spec: FieldSpec, values: Iterable[Any]) -> list[str]:
    return [spec.format(v) for v in values]


def _random_matrix(rng: random.Random, spec: FieldSpec, size: int) -> Matrix:
    if spec.is_prime_field:
        rows = [[rng.randrange(spec.characteristic) for _ in range(size)] for _ in range(size)]
    else:
        rows = [[rng.randint(-3, 3) for _ in range(size)] for _ in range(size)]
    return Matrix.from_rows(spec, rows)


# --- Lie's theorem in characteristic p ---


def _lie_counterexample(p: int, settings: Settings) -> Outcome:  # noqa: ARG001
    spec = FieldSpec.prime(p)
    x, y = lie_counterexample_matrices(spec)
    algebra = builtin("lie51", spec)
    dims = [s.dim for s in derived_series(algebra)]
    ones = Subspace.span(spec, p, [(spec.one,) * p])
    x_eigenvalues = eigenvalues_in_field(x)
    lines = all(
        eigenspace(y, spec.from_int(i)) == Subspace.span(spec, p, [basis_vector(spec, p, i)])
        for i in range(p)
    )
    checks = {
        "bracket_is_x": x.commutator(y) == x,
        "solvable": is_solvable(algebra),
        "derived_dims": dims == [2, 1, 0],
        "x_eigenvalues": x_eigenvalues == [spec.one],
        "x_eigenspace_is_all_ones": eigenspace(x, spec.one) == ones,
        "y_eigenspaces_are_lines": lines,
        "no_common_eigenvector": common_eigenvector([x, y]) is None,
        "not_triangularizable": triangularize([x, y]) is None,
    }
    data = {
        "p": p,
        "x": x.to_lists(),
        "y": y.to_lists(),
        "derived_dims": dims,
        "x_eigenvalues": _fmt(spec, x_eigenvalues),
        "y_eigenvalues": _fmt(spec, eigenvalues_in_field(y)),
    }
    return Outcome(checks, data)


# --- Cartan's criteria ---


def _cartan_fsl2(settings: Settings) -> Outcome:  # noqa: ARG001
    spec = FieldSpec.prime(2)
    algebra = builtin("fsl2", spec)
    traces = {
        label: spec.format((m @ m).trace()) for label, m in zip(algebra.labels, algebra.ad_basis, strict=True)
    }
    stmts = cartan_statements(algebra, adjoint_rep(algebra))
    checks = {
        "square_traces_vanish": all(t == "0" for t in traces.values()),
        "stmt2": stmts.stmt2,
        "not_solvable": not stmts.solvable,
        "criterion_fails": not stmts.consistent,
    }
    data = {
        "traces": traces,
        "ad": {label: m.to_lists() for label, m in zip(algebra.labels, algebra.ad_basis, strict=True)},
        "stmt1": stmts.stmt1,
        "stmt2": stmts.stmt2,
        "solvable": stmts.solvable,
        "consistent": stmts.consistent,
    }
    return Outcome(checks, data, ("stmt1",))


def _ccs(settings: Settings) -> Outcome:
    cap = settings.enumeration_cap
    rationals = FieldSpec.rationals()
    fsl2 = builtin("fsl2", FieldSpec.prime(2))
    sl2, aff2 = builtin("sl2", rationals), builtin("aff2", rationals)
    fsl2_result = cartan_semisimplicity(fsl2, cap=cap)
    sl2_result = cartan_semisimplicity(sl2, cap=cap)
    aff2_result = cartan_semisimplicity(aff2, cap=cap)
    checks = {
        "sl2_equivalent": sl2_result.equivalent and sl2_result.semisimple,
        "sl2_radical_zero": radical(sl2, cap=cap).is_zero,
        "aff2_equivalent": aff2_result.equivalent and not aff2_result.semisimple,
        "aff2_radical_full": radical(aff2, cap=cap).dim == aff2.dim,
        "fsl2_equivalence_fails": not fsl2_result.equivalent,
        "fsl2_gram_kernel_full": killing_radical(killing_form(fsl2)).dim == fsl2.dim,
    }
    data = {
        "fsl2_gram": killing_form(fsl2).gram.to_lists(),
        "fsl2_semisimple": fsl2_result.semisimple,
        "fsl2_nondegenerate": fsl2_result.nondegenerate,
        "sl2_gram": killing_form(sl2).gram.to_lists(),
        "aff2_gram": killing_form(aff2).gram.to_lists(),
    }
    return Outcome(checks, data, ("aff2_gram", "fsl2_gram", "fsl2_nondegenerate", "fsl2_semisimple", "sl2_gram"))


# --- Jordan-Chevalley ---


def _jordan(settings: Settings) -> Outcome:
    f2 = FieldSpec.prime(2)
    witness = companion_matrix(Polynomial.from_ints(f2, [1, 1, 1]))
    fields = [f2, FieldSpec.prime(3), FieldSpec.prime(5), FieldSpec.rationals()]
    rng = random.Random(settings.seed)
    violations = 0
    implication = True
    for k in range(settings.samples.jordan):
        spec = fields[k % len(fields)]
        a = _random_matrix(rng, spec, rng.randint(1, 5))
        pair = chevalley_decompose(a)
        ok = (
            pair.s + pair.n == a
            and pair.s @ pair.n == pair.n @ pair.s
            and is_squarefree(min_poly(pair.s))
            and is_nilpotent_matrix(pair.n)
            and as_polynomial_in(a, pair.s) is not None
        )
        violations += not ok
        if is_diagonalisable_over_base(a) and not is_semisimple_matrix(a):
            implication = False
    checks = {
        "witness_semisimple": is_semisimple_matrix(witness),
        "witness_not_diagonalisable": not is_diagonalisable_over_base(witness),
        "witness_is_own_semisimple_part": chevalley_decompose(witness).n.is_zero,
        "sample_invariants": violations == 0,
        "diagonalisable_implies_semisimple": implication,
    }
    data = {
        "witness": witness.to_lists(),
        "witness_min_poly": min_poly(witness).format(),
        "samples": settings.samples.jordan,
        "violations": violations,
    }
    return Outcome(checks, data, ("witness_min_poly",))


# --- sl2 weights ---


def _sl2_weights(settings: Settings) -> Outcome:  # noqa: ARG001
    checks: dict[str, bool] = {}
    weights: dict[str, list[str]] = {}
    for n in range(1, 7):
        rep = sl2_sym_power(n)
        h = rep.algebra.vector({"h": 1})
        decomposition = weight_decomposition(rep, h)
        expected = sorted(rep.spec.from_int(n - 2 * k) for k in range(n + 1))
        checks[f"weights_{n}"] = list(decomposition.weights) == expected and all(
            d == 1 for d in decomposition.dims
        )
        checks[f"ladder_{n}"] = ladder_check(n)
        weights[str(n)] = _fmt(rep.spec, decomposition.weights)
    f3 = FieldSpec.prime(3)
    modular = sl2_sym_power(3, f3)
    collapsed = weight_decomposition(modular, modular.algebra.vector({"h": 1}))
    data = {
        "weights": weights,
        "sym3_f3": {"weights": _fmt(f3, collapsed.weights), "dims": list(collapsed.dims)},
    }
    return Outcome(checks, data, ("sym3_f3",))


# --- Complete reducibility in characteristic p ---


def _weyl(settings: Settings) -> Outcome:
    cap = settings.enumeration_cap
    spec = FieldSpec.prime(3)
    rep = sl2_sym_power(3, spec)
    x3, y3 = basis_vector(spec, 4, 0), basis_vector(spec, 4, 3)
    u = Subspace.span(spec, 4, [x3, y3])
    invariant = invariant_subspaces(rep, cap=cap)
    complement = find_complement(rep, u, cap=cap)
    checks = {
        "annihilated": all(is_zero_vector(m.apply(v)) for m in rep.mats for v in (x3, y3)),
        "u_invariant": u in invariant,
        "no_complement": complement is None,
        "not_completely_reducible": not is_completely_reducible(rep, cap=cap),
        "oracles_agree": not is_semisimple_module(rep, cap=cap),
    }
    data = {
        "subspaces_scanned": subspace_count(3, 4),
        "invariant_count": len(invariant),
        "u": u.to_lists(),
    }
    return Outcome(checks, data, ("invariant_count", "subspaces_scanned"))


# --- Restricted structures ---


def _functorial(pm: Any, rng: random.Random, samples: int) -> bool:
    algebra = pm.algebra
    spec, p = algebra.spec, algebra.spec.characteristic
    for _ in range(samples):
        v = tuple(spec.from_int(rng.randrange(p)) for _ in range(algebra.dim))
        if ad(algebra, evaluate_p_mapping(pm, v)) != ad(algebra, v).power(p):
            return False
    return True


def _jacobson_sum(p: int, rng: random.Random, samples: int) -> bool:
    spec = FieldSpec.prime(p)
    algebra, embedding = builtin_with_embedding("gl", spec, 2)
    if embedding is None:
        return False
    for _ in range(samples):
        a, b = _random_matrix(rng, spec, 2), _random_matrix(rng, spec, 2)
        ca, cb = embedding.coordinates(a), embedding.coordinates(b)
        if ca is None or cb is None:
            return False
        total = jacobson_si(algebra, ca, cb).total(spec)
        if (a + b).power(p) - a.power(p) - b.power(p) != embedding.to_matrix(total):
            return False
    return True


def _pmap(settings: Settings) -> Outcome:
    cap, samples = settings.enumeration_cap, settings.samples
    rng = random.Random(settings.seed)
    checks: dict[str, bool] = {}
    tables: dict[str, dict[str, str]] = {}
    expected = {
        ("sl2", 3): {"e": "0", "f": "0", "h": "h"},
        ("sl2", 5): {"e": "0", "f": "0", "h": "h"},
        ("heisenberg", 2): {"x": "0", "y": "0", "z": "0"},
        ("heisenberg", 3): {"x": "0", "y": "0", "z": "0"},
    }
    for (name, p), table in expected.items():
        pm = find_p_mapping(builtin(name, FieldSpec.prime(p)))
        key = f"{name}_F{p}"
        checks[f"{key}_images"] = pm is not None and p_mapping_to_table(pm) == table
        if pm is not None:
            tables[key] = p_mapping_to_table(pm)
            checks[f"{key}_axioms"] = verify_p_mapping(pm, samples=samples.axiom3_pairs, seed=settings.seed).passed
            checks[f"{key}_functorial"] = _functorial(pm, rng, samples.functoriality)
    for p in (2, 3, 5):
        spec = FieldSpec.prime(p)
        pm = find_p_mapping(builtin("aff2", spec))
        law = pm is not None and all(
            evaluate_p_mapping(pm, (alpha, beta))
            == (spec.power(alpha, p), spec.mul(spec.power(alpha, p - 1), beta))
            for alpha, beta in itertools.product(spec.elements(), repeat=2)
        )
        checks[f"aff2_F{p}_law"] = law
        checks[f"jacobson_sum_F{p}"] = _jacobson_sum(p, rng, samples.jacobson_pairs)
    fsl2 = builtin("fsl2", FieldSpec.prime(2))
    obstruction = p_mapping_obstruction(fsl2)
    candidates = basis_image_candidates(fsl2, fsl2.index("e"), cap=cap)
    checks["fsl2_not_restrictable"] = find_p_mapping(fsl2) is None
    checks["fsl2_certificate_at_e"] = obstruction is not None and obstruction.label == "e"
    checks["fsl2_exhaustive_scan_empty"] = candidates == []
    f3 = FieldSpec.prime(3)
    gl_algebra, gl_embedding = builtin_with_embedding("gl", f3, 2)
    gl_map = pth_power_mapping(gl_algebra, gl_embedding) if gl_embedding else None
    checks["gl_pth_power_is_p_mapping"] = gl_map is not None and verify_p_mapping(
        gl_map, samples=samples.axiom3_pairs, seed=settings.seed
    ).passed
    f2 = FieldSpec.prime(2)
    binary = [Matrix.from_rows(f2, [[a, b], [c, d]]) for a, b, c, d in itertools.product(range(2), repeat=4)]
    traceless = [m for m in binary if m.trace() == 0]
    checks["sl_closure_F2_exhaustive"] = len(traceless) == 8 and pth_power_closure_check(traceless, "sl")  # noqa: PLR2004
    checks["gl_closure"] = pth_power_closure_check(gl_embedding.matrices if gl_embedding else (), "gl")
    spaces = {}
    for name in ("sl2", "heisenberg", "aff2"):
        space = p_mapping_solution_space(builtin(name, f3))
        spaces[name] = {"center_dim": space.center_dim, "unique": space.unique}
        checks[f"{name}_uniqueness_consistent"] = space.unique or not space.killing_nondegenerate
    data = {
        "tables": tables,
        "fsl2_obstruction": obstruction.label if obstruction else None,
        "fsl2_scanned": 2**fsl2.dim,
        "solution_spaces": spaces,
    }
    return Outcome(checks, data, ("solution_spaces",))


SCENARIOS: tuple[Scenario, ...] = (
    *(
        Scenario(
            f"LIE-5.1({p})",
            "Lie's theorem fails in characteristic p: S = <x, y> is solvable with no common eigenvector",
            partial(_lie_counterexample, p),
        )
        for p in (2, 3, 5)
    ),
    Scenario(
        "CARTAN-5.2",
        "Cartan's solvability criterion fails for fsl2 in characteristic 2",
        _cartan_fsl2,
    ),
    Scenario(
        "CCS-5.2",
        "Semisimplicity versus non-degeneracy of the Killing form",
        _ccs,
    ),
    Scenario(
        "JORDAN-5.3",
        "Jordan-Chevalley decomposition into semisimple and nilpotent parts",
        _jordan,
    ),
    Scenario(
        "REP-5.4",
        "Weights n, n-2, ..., -n of Sym^n V for sl2 in characteristic 0",
        _sl2_weights,
    ),
    Scenario(
        "WEYL-5.5",
        "Sym^3 V over F_3 has an invariant subspace without invariant complement",
        _weyl,
    ),
    Scenario(
        "PMAP-6",
        "Restricted structures on sl2, the Heisenberg algebra, aff2 and gl; fsl2 has no p-mapping",
        _pmap,
    ),
)


def scenario_ids() -> list[str]:
    """All scenario ids in report order."""
    return [s.id for s in SCENARIOS]


def select_scenarios(ids: Sequence[str] | None) -> list[Scenario]:
    """Scenarios matching exact ids or families (``LIE-5.1`` selects every p)."""
    if not ids:
        return list(SCENARIOS)
    unknown = [i for i in ids if not any(i in (s.id, s.family) for s in SCENARIOS)]
    if unknown:
        msg = f"unknown scenario {', '.join(unknown)} (choose from {', '.join(scenario_ids())})"
        raise ValueError(msg)
    return [s for s in SCENARIOS if s.id in ids or s.family in ids]


# --- Oracle store ---


def oracle_store_path(settings: Settings) -> Path:
    """Where --regen-oracles writes."""
    return oracles_path(settings.oracles_path)


def load_oracles(settings: Settings) -> Oracles:
    """User oracle store if present, otherwise the packaged one."""
    path = oracle_store_path(settings)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
    else:
        # Lazy import: package resource lookup is only needed when no user store exists.
        from importlib import resources  # noqa: PLC0415

        text = (resources.files("modlie") / _PACKAGED_ORACLES).read_text(encoding="utf-8")
    loaded = yaml.safe_load(text) or {}
    return {str(k): dict(v or {}) for k, v in loaded.items()}


def save_oracles(path: Path, oracles: Oracles) -> None:
    """Write the oracle store as sorted YAML."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(yaml.safe_dump(oracles, sort_keys=True), encoding="utf-8")


# --- Running ---


def _entry(scenario: Scenario, outcome: Outcome, oracles: Oracles | None) -> CheckEntry:
    data = dict(outcome.data)
    data["checks"] = outcome.checks
    failed = sorted(name for name, ok in outcome.checks.items() if not ok)
    if failed:
        data["failed"] = failed
        return CheckEntry(scenario=scenario.id, status="fail", data=data, citation=scenario.citation)
    if not outcome.derived or oracles is None:
        return CheckEntry(scenario=scenario.id, status="pass", data=data, citation=scenario.citation)
    stored = oracles.get(scenario.id)
    if stored is None or any(key not in stored for key in outcome.derived):
        data["oracle"] = "missing"
        return CheckEntry(scenario=scenario.id, status="skip", data=data, citation=scenario.citation)
    mismatched = sorted(key for key in outcome.derived if stored[key] != outcome.data[key])
    if mismatched:
        data["oracle_mismatch"] = mismatched
        return CheckEntry(scenario=scenario.id, status="fail", data=data, citation=scenario.citation)
    return CheckEntry(scenario=scenario.id, status="pass", data=data, citation=scenario.citation)


def run_scenario(scenario: Scenario, settings: Settings, oracles: Oracles | None) -> tuple[CheckEntry, Outcome | None]:
    """Run one scenario; a cap overrun becomes a skip entry."""
    start = time.perf_counter()
    try:
        outcome = scenario.run(settings)
    except CapExceededError as exc:
        data = {"error": CAP_EXCEEDED, "count": exc.count, "cap": exc.cap}
        return CheckEntry(scenario=scenario.id, status="skip", data=data, citation=scenario.citation), None
    logger.debug("scenario %s took %.3fs", scenario.id, time.perf_counter() - start)
    return _entry(scenario, outcome, oracles), outcome


def run_scenarios(
    settings: Settings,
    ids: Sequence[str] | None = None,
    *,
    oracles: Oracles | None = None,
    on_done: Callable[[CheckEntry], None] | None = None,
) -> tuple[Report, Oracles]:
    """Run the selected scenarios in id order.

    Returns the report and the freshly computed oracle values for every scenario
    that produced derived data.
    """
    selected = select_scenarios(ids)
    entries = []
    computed: Oracles = {}
    for scenario in selected:
        entry, outcome = run_scenario(scenario, settings, oracles)
        entries.append(entry)
        if outcome is not None and outcome.derived:
            computed[scenario.id] = {key: outcome.data[key] for key in outcome.derived}
        if on_done is not None:
            on_done(entry)
    report = Report(input_digest=suite_digest(settings, [s.id for s in selected]), entries=entries)
    return report, computed


def suite_digest(settings: Settings, ids: Sequence[str]) -> str:
    """Digest of the scenario ids and the settings that influence results."""
    relevant = settings.model_dump_json(include={"enumeration_cap", "seed", "samples"})
    return digest(*ids, relevant)
