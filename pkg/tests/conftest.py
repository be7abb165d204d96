# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Pytest fixtures for epicontrol tests.
"""

from pathlib import Path
from typing import Hashable

import numpy as np
import pytest

from epicontrol.core.config import ECConfig, reload_config
from epicontrol.core.errors import EpisodeFinishedError
from epicontrol.core.types import ItemKind, TaskTag
from epicontrol.embeddings.frame import ObservationFrame
from epicontrol.envs.protocol import Environment, StepOutcome
from epicontrol.envs.spec import GridWorldSpec, Item
from epicontrol.memory.store import EpisodicValueStore


@pytest.fixture(autouse=True)
def reset_config(monkeypatch, tmp_path: Path):
    """Reset config to defaults before each test.

    This prevents config changes from one test affecting others.
    """
    config_path = tmp_path / "nonexistent_config.json"
    monkeypatch.setattr(ECConfig, "get_config_path", lambda: config_path)
    reload_config()
    yield
    reload_config()


@pytest.fixture
def store() -> EpisodicValueStore:
    """Empty 4-action store over 2-D keys."""
    return EpisodicValueStore(n_actions=4, dim=2, capacity=10)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(1234))


def small_forage_spec(**overrides) -> GridWorldSpec:
    """3x3 room, agent in the middle-left, one apple to its right."""
    fields = dict(
        task=TaskTag.FORAGE,
        width=3,
        height=3,
        start=(0, 1),
        items=(Item(kind=ItemKind.APPLE, x=1, y=1),),
        t_max=10,
    )
    fields.update(overrides)
    return GridWorldSpec(**fields)


class ChainEnv(Environment):
    """
    Deterministic chain of `length` cells on a 1-pixel-per-cell strip.

    Action 1 moves right, action 0 moves left (floored at 0). Reaching the
    last cell pays `reward` and ends the episode; so does running out of
    `t_max` steps.
    """

    def __init__(self, length: int = 2, reward: float = 1.0, t_max: int = 50):
        self.length = length
        self.reward = reward
        self.t_max = t_max
        self.position = 0
        self.t = 0
        self.done = False

    @property
    def n_actions(self) -> int:
        return 2

    @property
    def observation_dim(self) -> int:
        return self.length

    def _frame(self) -> ObservationFrame:
        pixels = np.zeros(self.length)
        pixels[self.position] = 1.0
        return ObservationFrame(pixels=pixels, height=1, width=self.length)

    def reset(self, seed: int) -> ObservationFrame:
        self.position, self.t, self.done = 0, 0, False
        return self._frame()

    def step(self, action: int) -> StepOutcome:
        if self.done:
            raise EpisodeFinishedError(self.t)
        self.position = min(self.position + 1, self.length - 1) if action == 1 else max(self.position - 1, 0)
        self.t += 1
        at_goal = self.position == self.length - 1
        self.done = at_goal or self.t >= self.t_max
        return StepOutcome(observation=self._frame(), reward=self.reward if at_goal else 0.0, done=self.done)

    def state_key(self) -> Hashable:
        return self.position


class ZeroRewardEnv(ChainEnv):
    """Chain that never pays out."""

    def __init__(self, length: int = 3, t_max: int = 5):
        super().__init__(length=length, reward=0.0, t_max=t_max)
