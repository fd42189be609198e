"""Rich consoles, message helpers and the markup used to render reports."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from rich.console import Console


# No highlighting: matrix entries print uncolored.
_CONSOLE_OPTIONS: dict[str, Any] = {"highlight": False, "soft_wrap": False}


class _LazyConsole:
    """Stand-in for a Rich console that is only built when something is printed."""

    def __init__(self, **options: Any) -> None:
        self._options = {**_CONSOLE_OPTIONS, **options}
        self._console: Console | None = None

    @property
    def is_built(self) -> bool:
        return self._console is not None

    def _get(self) -> Console:
        if self._console is None:
            # Lazy import: Rich console setup is not needed while building `modlie --help`.
            from rich.console import Console  # noqa: PLC0415

            self._console = Console(**self._options)
        return self._console

    def print(self, *args: Any, **kwargs: Any) -> None:
        self._get().print(*args, **kwargs)

    def __enter__(self) -> Console:
        """Rich Progress enters the console it is given."""
        return self._get().__enter__()

    def __exit__(self, *args: object) -> Any:
        return self._get().__exit__(*args)

    def __getattr__(self, name: str) -> Any:
        return getattr(self._get(), name)


console: Any = _LazyConsole()
err_console: Any = _LazyConsole(stderr=True)


# --- Report markup ---

STATUS_STYLES = {"pass": "green", "fail": "red", "skip": "yellow"}


def format_status(status: str) -> str:
    """Render a pass/fail/skip status with its color."""
    style = STATUS_STYLES.get(status, "dim")
    return f"[{style}]{status}[/]"


def format_flag(value: bool) -> str:
    """Render a boolean property as a colored yes/no."""
    return "[green]yes[/]" if value else "[red]no[/]"


def format_value(value: Any) -> str:
    """Render one report value: flags, matrices as rows, basis-image tables as ``x -> rhs``."""
    if isinstance(value, bool):
        return format_flag(value)
    if value is None:
        return "[dim]n/a[/]"
    if isinstance(value, list) and value and isinstance(value[0], list):
        return "\n".join(" ".join(map(str, row)) for row in value)
    if isinstance(value, dict):
        return "\n".join(f"{k} -> {v}" for k, v in value.items())
    return str(value)


def format_entry_details(data: dict[str, Any]) -> str:
    """One-line reason shown next to a scenario status."""
    if "failed" in data:
        return "failed: " + ", ".join(data["failed"])
    if "oracle_mismatch" in data:
        return "oracle mismatch: " + ", ".join(data["oracle_mismatch"])
    if "error" in data:
        return f"{data['error']} ({data.get('count')} > {data.get('cap')})"
    if data.get("oracle") == "missing":
        return "no stored oracle"
    return ""


# --- Message templates ---

MSG_UNKNOWN_BUILTIN = "Unknown catalog algebra [cyan]{name}[/]"
MSG_CONFIG_NOT_FOUND = "Config file not found"
MSG_CAP_EXCEEDED = "Subspace enumeration exceeds the cap ({count} > {cap})"


def print_error(msg: str) -> None:
    """✗ message on stderr."""
    err_console.print(f"[red]✗[/] {msg}")


def print_success(msg: str) -> None:
    """✓ message on stdout."""
    console.print(f"[green]✓[/] {msg}")


def print_warning(msg: str) -> None:
    """! message on stderr."""
    err_console.print(f"[yellow]![/] {msg}")


def print_hint(msg: str) -> None:
    """Dim "Hint:" line on stdout."""
    console.print(f"[dim]Hint: {msg}[/]")
