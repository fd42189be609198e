"""Tests for the verify-paper scenario suite."""

from pathlib import Path

import pytest

from modlie.config import Settings
from modlie.errors import EXIT_CAP, EXIT_FAIL, EXIT_PASS
from modlie.scenarios import (
    SCENARIOS,
    load_oracles,
    oracle_store_path,
    run_scenarios,
    save_oracles,
    scenario_ids,
    select_scenarios,
    suite_digest,
)


@pytest.fixture
def settings(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Settings:
    """Settings whose user oracle store does not exist yet."""
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path / "xdg"))
    return Settings()


class TestSelection:
    """Tests for scenario ids and selection."""

    def test_ids_in_report_order(self) -> None:
        assert scenario_ids() == [
            "LIE-5.1(2)",
            "LIE-5.1(3)",
            "LIE-5.1(5)",
            "CARTAN-5.2",
            "CCS-5.2",
            "JORDAN-5.3",
            "REP-5.4",
            "WEYL-5.5",
            "PMAP-6",
        ]

    def test_every_scenario_is_cited(self) -> None:
        assert all(s.citation for s in SCENARIOS)

    def test_family_selects_every_parameter(self) -> None:
        assert [s.id for s in select_scenarios(["LIE-5.1"])] == ["LIE-5.1(2)", "LIE-5.1(3)", "LIE-5.1(5)"]
        assert [s.id for s in select_scenarios(["LIE-5.1(3)"])] == ["LIE-5.1(3)"]

    def test_selection_keeps_report_order(self) -> None:
        assert [s.id for s in select_scenarios(["PMAP-6", "CCS-5.2"])] == ["CCS-5.2", "PMAP-6"]

    def test_empty_selects_all(self) -> None:
        assert len(select_scenarios(None)) == len(SCENARIOS)

    def test_unknown_id(self) -> None:
        with pytest.raises(ValueError, match="unknown scenario LIE-9"):
            select_scenarios(["LIE-9"])


class TestOracles:
    """Tests for the oracle store."""

    def test_packaged_store_used_by_default(self, settings: Settings) -> None:
        oracles = load_oracles(settings)
        assert oracles["WEYL-5.5"] == {"invariant_count": 7, "subspaces_scanned": 212}
        assert oracles["JORDAN-5.3"]["witness_min_poly"] == "x^2 + x + 1"

    def test_user_store_wins(self, tmp_path: Path) -> None:
        store = tmp_path / "oracles.yaml"
        settings = Settings(oracles_path=store)
        assert oracle_store_path(settings) == store
        save_oracles(store, {"WEYL-5.5": {"invariant_count": 8, "subspaces_scanned": 212}})
        assert load_oracles(settings) == {"WEYL-5.5": {"invariant_count": 8, "subspaces_scanned": 212}}


class TestRun:
    """Tests for run_scenarios."""

    def test_weyl_passes(self, settings: Settings) -> None:
        report, computed = run_scenarios(settings, ["WEYL-5.5"], oracles=load_oracles(settings))
        [entry] = report.entries
        assert entry.status == "pass"
        assert entry.data["invariant_count"] == 7
        assert all(entry.data["checks"].values())
        assert report.exit_code == EXIT_PASS
        assert computed == {"WEYL-5.5": {"invariant_count": 7, "subspaces_scanned": 212}}

    def test_cap_turns_into_skip(self, settings: Settings) -> None:
        report, computed = run_scenarios(settings.with_overrides(cap=10), ["WEYL-5.5"], oracles=load_oracles(settings))
        [entry] = report.entries
        assert entry.status == "skip"
        assert entry.data == {"error": "CapExceeded", "count": 212, "cap": 10}
        assert report.exit_code == EXIT_CAP
        assert computed == {}

    def test_missing_oracle_skips(self, settings: Settings) -> None:
        report, _ = run_scenarios(settings, ["WEYL-5.5"], oracles={})
        [entry] = report.entries
        assert entry.status == "skip"
        assert entry.data["oracle"] == "missing"
        assert report.exit_code == EXIT_PASS

    def test_oracle_mismatch_fails(self, settings: Settings) -> None:
        stale = {"WEYL-5.5": {"invariant_count": 8, "subspaces_scanned": 212}}
        report, _ = run_scenarios(settings, ["WEYL-5.5"], oracles=stale)
        [entry] = report.entries
        assert entry.status == "fail"
        assert entry.data["oracle_mismatch"] == ["invariant_count"]
        assert report.exit_code == EXIT_FAIL

    def test_lie_family(self, settings: Settings) -> None:
        report, computed = run_scenarios(settings, ["LIE-5.1"], oracles=load_oracles(settings))
        assert [e.status for e in report.entries] == ["pass", "pass", "pass"]
        assert [e.data["derived_dims"] for e in report.entries] == [[2, 1, 0]] * 3
        assert computed == {}

    def test_cartan_fsl2(self, settings: Settings) -> None:
        report, _ = run_scenarios(settings, ["CARTAN-5.2"], oracles=load_oracles(settings))
        [entry] = report.entries
        assert entry.status == "pass"
        assert entry.data["stmt1"] is True
        assert entry.data["solvable"] is False

    def test_progress_callback(self, settings: Settings) -> None:
        seen: list[str] = []
        run_scenarios(settings, ["REP-5.4", "WEYL-5.5"], on_done=lambda e: seen.append(e.scenario))
        assert seen == ["REP-5.4", "WEYL-5.5"]

    def test_json_is_deterministic(self, settings: Settings) -> None:
        first, _ = run_scenarios(settings, ["CCS-5.2"], oracles=load_oracles(settings))
        second, _ = run_scenarios(settings, ["CCS-5.2"], oracles=load_oracles(settings))
        assert first.to_json() == second.to_json()

    @pytest.mark.slow
    def test_full_suite_matches_packaged_oracles(self, settings: Settings) -> None:
        oracles = load_oracles(settings)
        report, computed = run_scenarios(settings, oracles=oracles)
        assert [e.status for e in report.entries] == ["pass"] * len(SCENARIOS)
        assert report.exit_code == EXIT_PASS
        assert computed == oracles


def test_digest_tracks_inputs() -> None:
    base = Settings()
    ids = ["WEYL-5.5"]
    assert suite_digest(base, ids) == suite_digest(Settings(), ids)
    assert suite_digest(base, ids) != suite_digest(base.with_overrides(seed=1), ids)
    assert suite_digest(base, ids) != suite_digest(base, ["PMAP-6"])
    assert len(suite_digest(base, ids)) == 64
