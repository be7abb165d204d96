# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Abstract protocol for episodic environments.

Agents and the harness only talk to this interface, so any conforming
environment (the grid worlds, or a scripted double in tests) can be run.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Hashable

from epicontrol.embeddings.frame import ObservationFrame


@dataclass(frozen=True)
class StepOutcome:
    """Result of one environment step."""

    observation: ObservationFrame
    reward: float
    done: bool


class Environment(ABC):
    """
    Abstract base class for episodic environments with discrete actions.

    Instances are single-threaded; run independent instances for
    concurrent seeds.
    """

    @property
    @abstractmethod
    def n_actions(self) -> int:
        """Number of discrete actions, indexed from 0."""
        ...

    @property
    @abstractmethod
    def observation_dim(self) -> int:
        """Length of every observation's pixel vector."""
        ...

    @abstractmethod
    def reset(self, seed: int) -> ObservationFrame:
        """Start a new episode and return its first observation."""
        ...

    @abstractmethod
    def step(self, action: int) -> StepOutcome:
        """
        Apply one action.

        Raises:
            EpisodeFinishedError: If the episode is already done
        """
        ...

    @abstractmethod
    def state_key(self) -> Hashable:
        """Exact, hashable identity of the current state."""
        ...
