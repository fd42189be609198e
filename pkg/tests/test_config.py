"""Tests for config module."""

from pathlib import Path

import pytest
import yaml
from pydantic import ValidationError

from modlie.config import SampleSizes, Settings, load_config
from modlie.linalg import DEFAULT_ENUMERATION_CAP


class TestSettings:
    """Tests for the Settings model."""

    def test_defaults(self) -> None:
        settings = Settings()
        assert settings.enumeration_cap == DEFAULT_ENUMERATION_CAP
        assert settings.seed == 20240601
        assert settings.samples == SampleSizes(jordan=300, axiom3_pairs=100, jacobson_pairs=100, functoriality=100)
        assert settings.oracles_path is None

    def test_rejects_unknown_keys(self) -> None:
        with pytest.raises(ValidationError):
            Settings(enumeration_limit=5)  # type: ignore[call-arg]

    def test_rejects_non_positive_cap(self) -> None:
        with pytest.raises(ValidationError):
            Settings(enumeration_cap=0)

    def test_overrides(self) -> None:
        base = Settings()
        changed = base.with_overrides(cap=10, seed=7)
        assert (changed.enumeration_cap, changed.seed) == (10, 7)
        assert base.enumeration_cap == DEFAULT_ENUMERATION_CAP
        assert base.with_overrides() == base


class TestLoadConfig:
    """Tests for load_config."""

    def test_explicit_file(self, tmp_path: Path) -> None:
        config_file = tmp_path / "modlie.yaml"
        config_file.write_text(yaml.dump({"enumeration_cap": 500, "samples": {"jordan": 12}}))
        settings = load_config(config_file)
        assert settings.enumeration_cap == 500
        assert settings.samples.jordan == 12
        assert settings.samples.axiom3_pairs == 100
        assert settings.config_path == config_file.resolve()

    def test_empty_file_gives_defaults(self, tmp_path: Path) -> None:
        config_file = tmp_path / "modlie.yaml"
        config_file.write_text("")
        assert load_config(config_file).enumeration_cap == DEFAULT_ENUMERATION_CAP

    def test_missing_explicit_file(self, tmp_path: Path) -> None:
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / "nope.yaml")

    def test_directory_rejected(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.chdir(tmp_path)
        (tmp_path / "modlie.yaml").mkdir()
        monkeypatch.delenv("MODLIE_CONFIG", raising=False)
        monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path / "xdg"))
        # a directory named modlie.yaml is skipped by the search
        assert load_config().config_path is None
        with pytest.raises(FileNotFoundError, match="directory"):
            load_config(tmp_path / "modlie.yaml")

    def test_non_mapping_rejected(self, tmp_path: Path) -> None:
        config_file = tmp_path / "modlie.yaml"
        config_file.write_text("- 1\n- 2\n")
        with pytest.raises(TypeError, match="mapping"):
            load_config(config_file)

    def test_env_var(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        config_file = tmp_path / "env.yaml"
        config_file.write_text("seed: 3\n")
        monkeypatch.setenv("MODLIE_CONFIG", str(config_file))
        assert load_config().seed == 3

    def test_no_file_found(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.chdir(tmp_path)
        monkeypatch.delenv("MODLIE_CONFIG", raising=False)
        monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path / "xdg"))
        assert load_config() == Settings()
