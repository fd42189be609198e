"""Configuration loading and Pydantic models."""

from __future__ import annotations

from pathlib import Path

import yaml
from pydantic import BaseModel, Field

from .linalg import DEFAULT_ENUMERATION_CAP
from .paths import find_config_path


class SampleSizes(BaseModel, extra="forbid"):
    """How many random cases each sampled check draws."""

    jordan: int = Field(default=300, ge=1)
    axiom3_pairs: int = Field(default=100, ge=1)
    jacobson_pairs: int = Field(default=100, ge=1)
    functoriality: int = Field(default=100, ge=1)


class Settings(BaseModel, extra="forbid"):
    """Main configuration."""

    enumeration_cap: int = Field(default=DEFAULT_ENUMERATION_CAP, ge=1)
    seed: int = 20240601
    samples: SampleSizes = Field(default_factory=SampleSizes)
    oracles_path: Path | None = None  # Oracle store read first and written by --regen-oracles
    config_path: Path | None = None  # Set by load_config()

    def with_overrides(self, *, cap: int | None = None, seed: int | None = None) -> Settings:
        """Copy with per-command overrides applied."""
        update: dict[str, int] = {}
        if cap is not None:
            update["enumeration_cap"] = cap
        if seed is not None:
            update["seed"] = seed
        return self.model_copy(update=update)


def load_config(path: Path | None = None) -> Settings:
    """Load settings from YAML; defaults when no file is found.

    Search order:
    1. Explicit path if provided via --config
    2. MODLIE_CONFIG environment variable
    3. ./modlie.yaml
    4. $XDG_CONFIG_HOME/modlie/modlie.yaml (defaults to ~/.config)
    """
    if path is not None and not path.exists():
        msg = f"Config file not found: {path}"
        raise FileNotFoundError(msg)
    config_path = path or find_config_path()
    if config_path is None:
        return Settings()
    if config_path.is_dir():
        msg = f"Config path is a directory, not a file: {config_path}"
        raise FileNotFoundError(msg)

    with config_path.open() as f:
        raw = yaml.safe_load(f) or {}
    if not isinstance(raw, dict):
        msg = f"Config file must contain a mapping, got {type(raw).__name__}"
        raise TypeError(msg)
    raw["config_path"] = config_path.resolve()
    return Settings(**raw)
