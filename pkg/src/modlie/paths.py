"""Where modlie looks for its config file and oracle store. Imports nothing heavy."""

from __future__ import annotations

import os
from pathlib import Path

CONFIG_ENV = "MODLIE_CONFIG"
CONFIG_FILENAME = "modlie.yaml"
ORACLES_FILENAME = "oracles.yaml"


def xdg_config_home() -> Path:
    """$XDG_CONFIG_HOME, defaulting to ~/.config."""
    return Path(os.environ.get("XDG_CONFIG_HOME", Path.home() / ".config"))


def config_dir() -> Path:
    return xdg_config_home() / "modlie"


def default_config_path() -> Path:
    """Target of ``modlie config init`` without --path."""
    return config_dir() / CONFIG_FILENAME


def default_oracles_path() -> Path:
    """User oracle store written by ``verify-paper --regen-oracles``."""
    return config_dir() / ORACLES_FILENAME


def oracles_path(configured: Path | None) -> Path:
    """The oracle store a run reads and regenerates: the configured one, else the user store."""
    return configured.expanduser() if configured is not None else default_oracles_path()


def config_search_paths() -> list[Path]:
    """Candidates in lookup order; $MODLIE_CONFIG comes first when it is set."""
    candidates = [Path(CONFIG_FILENAME), default_config_path()]
    if env_path := os.environ.get(CONFIG_ENV):
        candidates.insert(0, Path(env_path))
    return candidates


def find_config_path() -> Path | None:
    """First existing file among config_search_paths(); an explicit --config bypasses this."""
    return next((p for p in config_search_paths() if p.is_file()), None)
