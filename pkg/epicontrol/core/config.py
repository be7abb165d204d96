# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Global configuration for epicontrol.

Loads settings from ~/.epicontrol/config.json if it exists.
All settings have sensible defaults. Per-experiment settings live in
experiment config files (see epicontrol.harness.config), not here.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional


@dataclass
class LoggingConfig:
    """Configuration for debug logging."""

    debug: bool = False  # Enable debug logging to ~/.epicontrol/logs/
    log_retention_count: int = 20  # Keep last N daily logs


@dataclass
class RunnerConfig:
    """Configuration for experiment execution."""

    max_workers: int = 1  # Seeds run in a process pool when > 1


@dataclass
class OutputConfig:
    """Configuration for result files."""

    directory: str = "results"  # Default --out directory


@dataclass
class ECConfig:
    """
    Global epicontrol configuration.

    Loaded from ~/.epicontrol/config.json if it exists.
    All fields have sensible defaults.
    """

    logging: LoggingConfig = field(default_factory=LoggingConfig)
    runner: RunnerConfig = field(default_factory=RunnerConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    @classmethod
    def get_config_path(cls) -> Path:
        """Get the path to the config file."""
        return Path.home() / ".epicontrol" / "config.json"

    @classmethod
    def load(cls, config_path: Optional[Path] = None) -> "ECConfig":
        """
        Load configuration from file.

        Args:
            config_path: Path to config file (defaults to ~/.epicontrol/config.json)

        Returns:
            ECConfig with values from file merged with defaults
        """
        path = config_path or cls.get_config_path()

        if not path.exists():
            return cls()

        try:
            with open(path) as f:
                data = json.load(f)
        except (json.JSONDecodeError, IOError):
            # Invalid or unreadable file - use defaults
            return cls()

        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: dict) -> "ECConfig":
        """Create config from dictionary, merging with defaults."""
        config = cls()

        if "logging" in data:
            logging_data = data["logging"]
            if "debug" in logging_data:
                config.logging.debug = bool(logging_data["debug"])
            if "log_retention_count" in logging_data:
                config.logging.log_retention_count = int(logging_data["log_retention_count"])

        if "runner" in data:
            runner_data = data["runner"]
            if "max_workers" in runner_data:
                config.runner.max_workers = max(1, int(runner_data["max_workers"]))

        if "output" in data:
            output_data = data["output"]
            if "directory" in output_data:
                config.output.directory = str(output_data["directory"])

        return config

    def to_dict(self) -> dict:
        """Convert config to dictionary for serialization."""
        return {
            "logging": {
                "debug": self.logging.debug,
                "log_retention_count": self.logging.log_retention_count,
            },
            "runner": {
                "max_workers": self.runner.max_workers,
            },
            "output": {
                "directory": self.output.directory,
            },
        }

    def save(self, config_path: Optional[Path] = None) -> None:
        """
        Save configuration to file.

        Args:
            config_path: Path to save to (defaults to ~/.epicontrol/config.json)
        """
        path = config_path or self.get_config_path()
        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, "w") as f:
            json.dump(self.to_dict(), f, indent=2)


# Global config instance - loaded lazily
_global_config: Optional[ECConfig] = None


def get_config() -> ECConfig:
    """
    Get the global epicontrol configuration.

    Loads from ~/.epicontrol/config.json on first call.
    """
    global _global_config
    if _global_config is None:
        _global_config = ECConfig.load()
    return _global_config


def reload_config() -> ECConfig:
    """
    Reload configuration from disk.

    Useful after config file changes.
    """
    global _global_config
    _global_config = ECConfig.load()
    return _global_config
