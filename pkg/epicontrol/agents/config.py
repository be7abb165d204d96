# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""Agent hyperparameters."""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from epicontrol.core.types import StartMode


class AgentConfig(BaseModel):
    """
    Episodic controller settings.

    Defaults are the fixed-start family (k=11, gamma=1, capacity 100,000);
    use for_start_mode() for the randomized-start family.
    """

    model_config = ConfigDict(frozen=True)

    epsilon: float = Field(default=0.005, ge=0.0, le=1.0)
    gamma: float = Field(default=1.0, gt=0.0, le=1.0)
    k: int = Field(default=11, ge=1)
    capacity: int = Field(default=100_000, ge=1)
    n_actions: int = Field(default=4, ge=1)

    @classmethod
    def for_start_mode(cls, mode: StartMode, **overrides: Any) -> "AgentConfig":
        """Task-family defaults, with explicit overrides applied on top."""
        family: dict[str, Any] = {}
        if mode is StartMode.RANDOMIZED:
            family = {"k": 50, "gamma": 0.99, "capacity": 10_000}
        family.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**family)


class QLearningConfig(BaseModel):
    """Tabular Q-learning baseline settings (its own exploration rate)."""

    model_config = ConfigDict(frozen=True)

    alpha: float = Field(default=0.1, ge=0.0, le=1.0)
    gamma: float = Field(default=0.99, gt=0.0, le=1.0)
    epsilon: float = Field(default=0.1, ge=0.0, le=1.0)
    n_actions: int = Field(default=4, ge=1)
