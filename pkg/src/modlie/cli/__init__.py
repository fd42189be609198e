"""CLI interface using Typer."""

from __future__ import annotations

# Import command modules to trigger registration via @app.command() decorators
from modlie.cli import (
    analysis,  # noqa: F401
    catalog,  # noqa: F401
    config,  # noqa: F401
    verify,  # noqa: F401
)

# Import the shared app instance
from modlie.cli.app import app

__all__ = ["app"]


if __name__ == "__main__":
    app()
