# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Experiment configuration.

Experiments are described by line-oriented key=value text:

    # fixed-start foraging, identity embedding
    task=forage
    embedding=identity
    episodes=200
    seeds=0,1,2
    sweep_k=1,5,11,50

Blank lines and lines starting with '#' are ignored. Omitted agent
settings take their task-family defaults (see AgentConfig.for_start_mode).
"""

from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from epicontrol.agents.config import AgentConfig, QLearningConfig
from epicontrol.core.errors import ConfigParseError
from epicontrol.core.types import EmbeddingKind, ObservationMode, StartMode, TaskTag

LIST_KEYS = {"seeds", "sweep_k"}


class ExperimentConfig(BaseModel):
    """A validated experiment description."""

    task: TaskTag
    embedding: EmbeddingKind = EmbeddingKind.IDENTITY
    start_mode: StartMode = StartMode.FIXED
    observation: ObservationMode = ObservationMode.PLANES
    env_file: Optional[str] = None

    # Agent (None = task-family default, filled in after validation)
    epsilon: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    gamma: Optional[float] = Field(default=None, gt=0.0, le=1.0)
    k: Optional[int] = Field(default=None, ge=1)
    capacity: Optional[int] = Field(default=None, ge=1)

    episodes: int = Field(default=200, ge=1)
    seeds: list[int] = Field(default_factory=lambda: [0], min_length=1)
    out: Optional[str] = None
    sweep_k: list[int] = Field(default_factory=list)

    # Embeddings
    projection_dim: int = Field(default=64, ge=1)
    vae_frames: int = Field(default=2000, ge=1)
    vae_steps: int = Field(default=500, ge=0)
    vae_batch: int = Field(default=100, ge=1)
    vae_lr: float = Field(default=1e-3, gt=0.0)
    vae_hidden: int = Field(default=64, ge=1)
    vae_latent: int = Field(default=32, ge=1)

    # Tabular baseline
    baseline: bool = False
    baseline_alpha: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    baseline_epsilon: float = Field(default=0.1, ge=0.0, le=1.0)

    save_store: bool = False

    @field_validator("seeds")
    @classmethod
    def _seeds_non_negative(cls, seeds: list[int]) -> list[int]:
        if any(s < 0 for s in seeds):
            raise ValueError("seeds must be non-negative")
        if len(set(seeds)) != len(seeds):
            raise ValueError("seeds must be distinct")
        return seeds

    @field_validator("sweep_k")
    @classmethod
    def _sweep_distinct_positive(cls, values: list[int]) -> list[int]:
        if any(v < 1 for v in values):
            raise ValueError("sweep values must be positive")
        if len(set(values)) != len(values):
            raise ValueError("sweep values must be distinct")
        return values

    @model_validator(mode="after")
    def _fill_family_defaults(self) -> "ExperimentConfig":
        defaults = AgentConfig.for_start_mode(self.start_mode)
        for name in ("epsilon", "gamma", "k", "capacity"):
            if getattr(self, name) is None:
                setattr(self, name, getattr(defaults, name))
        return self

    @property
    def is_sweep(self) -> bool:
        return bool(self.sweep_k)

    def agent_config(self, k: Optional[int] = None) -> AgentConfig:
        """Agent settings, optionally with k replaced (sweeps)."""
        assert self.epsilon is not None and self.gamma is not None
        assert self.k is not None and self.capacity is not None
        return AgentConfig(
            epsilon=self.epsilon,
            gamma=self.gamma,
            k=k if k is not None else self.k,
            capacity=self.capacity,
        )

    def baseline_config(self, alpha: Optional[float] = None) -> QLearningConfig:
        """Baseline settings; alpha falls back to baseline_alpha, then 0.1."""
        if alpha is None:
            alpha = self.baseline_alpha if self.baseline_alpha is not None else 0.1
        return QLearningConfig(
            alpha=alpha,
            gamma=self.gamma if self.gamma is not None else 0.99,
            epsilon=self.baseline_epsilon,
        )

    def with_overrides(self, **updates: Any) -> "ExperimentConfig":
        """Re-validated copy with the non-None updates applied."""
        data = self.model_dump()
        data.update({key: value for key, value in updates.items() if value is not None})
        try:
            return ExperimentConfig.model_validate(data)
        except ValidationError as e:
            err = e.errors()[0]
            raise ConfigParseError(None, str(err["loc"][0]) if err["loc"] else "?", err["msg"]) from e


def parse_config(text: str) -> ExperimentConfig:
    """
    Parse and validate key=value experiment text.

    Raises:
        ConfigParseError: On a malformed line, unknown or duplicate key,
            missing required key or out-of-range value
    """
    data: dict[str, Any] = {}
    lines: dict[str, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigParseError(number, line, "expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in ExperimentConfig.model_fields:
            raise ConfigParseError(number, key, "unknown key")
        if key in data:
            raise ConfigParseError(number, key, f"duplicate key (first set on line {lines[key]})")
        lines[key] = number
        data[key] = [v.strip() for v in value.split(",") if v.strip()] if key in LIST_KEYS else value

    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        err = e.errors()[0]
        key = str(err["loc"][0]) if err["loc"] else "?"
        reason = "missing required key" if err["type"] == "missing" else err["msg"]
        raise ConfigParseError(lines.get(key), key, reason) from e


def load_config(path: Path) -> ExperimentConfig:
    """Read and parse an experiment config file."""
    return parse_config(path.read_text(encoding="utf-8"))
