# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Unit tests for global epicontrol configuration.
"""

import json
from pathlib import Path

from epicontrol.core.config import ECConfig, get_config, reload_config


class TestConfigDefaults:
    """Tests for default configuration values."""

    def test_default_logging_config(self) -> None:
        """Debug logging is off by default."""
        config = ECConfig()
        assert config.logging.debug is False
        assert config.logging.log_retention_count == 20

    def test_default_runner_config(self) -> None:
        """Seeds run serially by default."""
        assert ECConfig().runner.max_workers == 1

    def test_default_output_config(self) -> None:
        assert ECConfig().output.directory == "results"


class TestConfigLoading:
    """Tests for loading configuration from file."""

    def test_load_missing_file_returns_defaults(self, tmp_path: Path) -> None:
        """Loading from non-existent file returns defaults."""
        config = ECConfig.load(tmp_path / "nonexistent.json")
        assert config.runner.max_workers == 1
        assert config.output.directory == "results"

    def test_load_empty_file_returns_defaults(self, tmp_path: Path) -> None:
        """Loading from empty JSON object returns defaults."""
        config_path = tmp_path / "config.json"
        config_path.write_text("{}")

        config = ECConfig.load(config_path)
        assert config.logging.debug is False
        assert config.runner.max_workers == 1

    def test_load_partial_config(self, tmp_path: Path) -> None:
        """Partial config merges with defaults."""
        config_path = tmp_path / "config.json"
        config_path.write_text(json.dumps({"runner": {"max_workers": 4}}))

        config = ECConfig.load(config_path)
        assert config.runner.max_workers == 4
        assert config.output.directory == "results"
        assert config.logging.log_retention_count == 20

    def test_load_full_config(self, tmp_path: Path) -> None:
        """Full config overrides all defaults."""
        config_path = tmp_path / "config.json"
        config_path.write_text(
            json.dumps(
                {
                    "logging": {"debug": True, "log_retention_count": 5},
                    "runner": {"max_workers": 8},
                    "output": {"directory": "/tmp/curves"},
                }
            )
        )

        config = ECConfig.load(config_path)
        assert config.logging.debug is True
        assert config.logging.log_retention_count == 5
        assert config.runner.max_workers == 8
        assert config.output.directory == "/tmp/curves"

    def test_worker_count_floors_at_one(self, tmp_path: Path) -> None:
        config_path = tmp_path / "config.json"
        config_path.write_text(json.dumps({"runner": {"max_workers": 0}}))
        assert ECConfig.load(config_path).runner.max_workers == 1

    def test_load_invalid_json_returns_defaults(self, tmp_path: Path) -> None:
        """Invalid JSON falls back to defaults."""
        config_path = tmp_path / "config.json"
        config_path.write_text("not valid json {{{")

        config = ECConfig.load(config_path)
        assert config.runner.max_workers == 1


class TestConfigSaving:
    """Tests for saving configuration to file."""

    def test_save_and_reload(self, tmp_path: Path) -> None:
        """Saved config loads back unchanged."""
        config_path = tmp_path / "nested" / "config.json"
        config = ECConfig()
        config.runner.max_workers = 3
        config.output.directory = "out"
        config.save(config_path)

        loaded = ECConfig.load(config_path)
        assert loaded.to_dict() == config.to_dict()

    def test_to_dict_shape(self) -> None:
        assert set(ECConfig().to_dict()) == {"logging", "runner", "output"}


class TestGlobalConfig:
    """Tests for the global config accessor."""

    def test_get_config_is_cached(self) -> None:
        assert get_config() is get_config()

    def test_reload_replaces_instance(self) -> None:
        first = get_config()
        assert reload_config() is not first
