# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Tabular Q-learning baseline keyed on exact environment states.

One-step update Q(s,a) <- Q(s,a) + alpha*(r + gamma*max_a' Q(s',a') - Q(s,a)),
with no bootstrap on the step that ends the episode.
"""

from dataclasses import dataclass, field
from typing import Callable, Hashable, Optional, Sequence

import numpy as np

from epicontrol.agents.config import QLearningConfig
from epicontrol.core.errors import RejectedInputError
from epicontrol.core.seeding import BASELINE_STREAM, episode_seed, stream_seed
from epicontrol.envs.protocol import Environment
from epicontrol.logging import get_logger

log = get_logger("agents")

ALPHA_GRID = (0.05, 0.1, 0.3)


@dataclass
class LearningCurve:
    """Per-episode totals of a baseline run, plus the learned table."""

    rewards: list[float] = field(default_factory=list)
    steps: list[int] = field(default_factory=list)
    q_table: dict[Hashable, np.ndarray] = field(default_factory=dict, repr=False)

    def mean_reward(self) -> float:
        return float(np.mean(self.rewards)) if self.rewards else float("nan")


def q_learning_baseline(
    env: Environment,
    config: QLearningConfig,
    episodes: int,
    seed: int,
    q_table: Optional[dict[Hashable, np.ndarray]] = None,
) -> LearningCurve:
    """
    Train for `episodes` episodes and return the per-episode reward curve.

    Episode e resets the environment from episode_seed(seed, e);
    exploration draws come from their own stream.
    """
    if episodes < 1:
        raise RejectedInputError("episodes", f"must be positive, got {episodes}")
    if env.n_actions != config.n_actions:
        raise RejectedInputError("n_actions", f"config has {config.n_actions}, environment has {env.n_actions}")

    table: dict[Hashable, np.ndarray] = {} if q_table is None else q_table
    rng = np.random.Generator(np.random.PCG64(stream_seed(seed, BASELINE_STREAM)))
    curve = LearningCurve(q_table=table)

    def values(key: Hashable) -> np.ndarray:
        if key not in table:
            table[key] = np.zeros(config.n_actions)
        return table[key]

    for episode in range(episodes):
        env.reset(episode_seed(seed, episode))
        key = env.state_key()
        total, steps, done = 0.0, 0, False
        while not done:
            q = values(key)
            if rng.random() < config.epsilon:
                action = int(rng.integers(config.n_actions))
            else:
                action = int(np.argmax(q))

            outcome = env.step(action)
            next_key = env.state_key()
            target = outcome.reward
            if not outcome.done:
                target += config.gamma * float(np.max(values(next_key)))
            q[action] += config.alpha * (target - q[action])

            total += outcome.reward
            steps += 1
            key, done = next_key, outcome.done

        curve.rewards.append(total)
        curve.steps.append(steps)

    log.debug(f"Q-learning alpha={config.alpha}: mean reward {curve.mean_reward():.3f} over {episodes} episodes")
    return curve


def tune_alpha(
    env_factory: Callable[[], Environment],
    config: QLearningConfig,
    episodes: int,
    seed: int,
    alphas: Sequence[float] = ALPHA_GRID,
) -> tuple[float, LearningCurve]:
    """
    Pick the learning rate with the best mean episode reward.

    Ties go to the earlier alpha in `alphas`.
    """
    if not alphas:
        raise RejectedInputError("alphas", "need at least one learning rate")

    best: Optional[tuple[float, LearningCurve]] = None
    for alpha in alphas:
        curve = q_learning_baseline(env_factory(), config.model_copy(update={"alpha": alpha}), episodes, seed)
        if best is None or curve.mean_reward() > best[1].mean_reward():
            best = (alpha, curve)

    assert best is not None
    log.debug(f"Tuned baseline alpha={best[0]}")
    return best
