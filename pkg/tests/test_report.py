"""Tests for report module."""

import json

from modlie import __version__
from modlie.report import CAP_EXCEEDED, CheckEntry, Report, digest


def _cap_skip(name: str) -> CheckEntry:
    return CheckEntry(scenario=name, status="skip", data={"error": CAP_EXCEEDED, "count": 212, "cap": 10})


class TestExitCode:
    """Tests for Report.exit_code precedence."""

    def test_all_pass(self) -> None:
        report = Report(input_digest="x", entries=[CheckEntry(scenario="a", status="pass")])
        assert report.passed
        assert report.exit_code == 0

    def test_empty_report_passes(self) -> None:
        assert Report(input_digest="x").exit_code == 0

    def test_cap_skip(self) -> None:
        report = Report(input_digest="x", entries=[CheckEntry(scenario="a", status="pass"), _cap_skip("b")])
        assert report.passed
        assert report.exit_code == 3

    def test_fail_beats_cap(self) -> None:
        report = Report(input_digest="x", entries=[_cap_skip("a"), CheckEntry(scenario="b", status="fail")])
        assert not report.passed
        assert report.exit_code == 1

    def test_other_skips_do_not_change_exit(self) -> None:
        entry = CheckEntry(scenario="a", status="skip", data={"oracle": "missing"})
        assert not entry.cap_exceeded
        assert Report(input_digest="x", entries=[entry]).exit_code == 0


class TestJson:
    """Tests for Report.to_json."""

    def test_sorted_and_stable(self) -> None:
        entry = CheckEntry(scenario="a", status="pass", data={"z": 1, "a": [1, 2]}, citation="c")
        report = Report(input_digest=digest("a"), entries=[entry])
        text = report.to_json()
        assert text == report.to_json()
        assert text.endswith("\n")
        parsed = json.loads(text)
        assert list(parsed) == sorted(parsed)
        assert list(parsed["entries"][0]["data"]) == ["a", "z"]
        assert parsed["tool_version"] == __version__


def test_digest() -> None:
    assert digest("a", "b") == digest("a", "b")
    assert digest("a", "b") != digest("ab")
    assert len(digest()) == 64
