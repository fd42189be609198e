"""Tests for console helpers."""

import pytest

from modlie.console import _LazyConsole, format_entry_details, format_flag, format_status, format_value


def test_lazy_console_supports_context_manager() -> None:
    """Rich Progress enters the provided console as a context manager."""
    console = _LazyConsole()

    with console as rich_console:
        assert rich_console is not None


def test_console_built_on_first_print(capsys: pytest.CaptureFixture[str]) -> None:
    console = _LazyConsole(stderr=True)
    assert not console.is_built
    console.print("e -> 0")
    assert console.is_built
    assert "e -> 0" in capsys.readouterr().err


def test_status_markup() -> None:
    assert format_status("pass") == "[green]pass[/]"
    assert format_status("skip") == "[yellow]skip[/]"
    assert format_status("unknown") == "[dim]unknown[/]"
    assert format_flag(False) == "[red]no[/]"


def test_format_value() -> None:
    assert format_value(True) == "[green]yes[/]"
    assert format_value(None) == "[dim]n/a[/]"
    assert format_value([["0", "1"], ["1", "0"]]) == "0 1\n1 0"
    assert format_value({"e": "0", "h": "h"}) == "e -> 0\nh -> h"
    assert format_value([3, 3]) == "[3, 3]"


def test_entry_details() -> None:
    assert format_entry_details({"failed": ["a", "b"]}) == "failed: a, b"
    assert format_entry_details({"oracle_mismatch": ["dims"]}) == "oracle mismatch: dims"
    assert format_entry_details({"error": "CapExceeded", "count": 212, "cap": 10}) == "CapExceeded (212 > 10)"
    assert format_entry_details({"oracle": "missing"}) == "no stored oracle"
    assert format_entry_details({"dims": [1]}) == ""
