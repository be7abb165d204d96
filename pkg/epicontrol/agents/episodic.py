# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
The episodic controller.

Each episode runs in two phases: act greedily (with epsilon exploration)
on the store's current estimates while recording (state, action, reward),
then replay the trace backwards writing each step's return into the store.
No writes happen mid-episode.
"""

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from epicontrol.agents.config import AgentConfig
from epicontrol.core.errors import RejectedInputError
from epicontrol.core.types import Embedding
from epicontrol.embeddings.functions import EmbeddingFunction
from epicontrol.envs.protocol import Environment
from epicontrol.memory.store import EpisodicValueStore

# R[t] for each step of a trace
ReturnsVector = np.ndarray


@dataclass
class EpisodeTrace:
    """Ordered (state, action, reward) records of one episode."""

    states: list[Embedding] = field(default_factory=list)
    actions: list[int] = field(default_factory=list)
    rewards: list[float] = field(default_factory=list)

    def append(self, state: Embedding, action: int, reward: float) -> None:
        if not math.isfinite(reward):
            raise RejectedInputError("reward", f"must be finite, got {reward}")
        self.states.append(state)
        self.actions.append(action)
        self.rewards.append(reward)

    def __len__(self) -> int:
        return len(self.actions)


@dataclass
class EpisodeResult:
    """Summary of one finished episode. The store is updated in place."""

    total_reward: float
    steps: int
    trace: EpisodeTrace


def act(store: EpisodicValueStore, s: Embedding, config: AgentConfig, rng: np.random.Generator) -> int:
    """
    Epsilon-greedy action over the store's estimates.

    Exploring steps pick uniformly and make no queries. Otherwise every
    action is estimated, a buffer with no entries counting as 0, and ties
    go to the lowest action index.
    """
    if rng.random() < config.epsilon:
        return int(rng.integers(config.n_actions))

    values = np.zeros(config.n_actions)
    for a in range(config.n_actions):
        estimate = store.estimate(s, a, config.k)
        if estimate is not None:
            values[a] = estimate
    return int(np.argmax(values))


def compute_returns(rewards: Sequence[float], gamma: float) -> ReturnsVector:
    """
    Discounted returns by backward recursion: R[t] = r[t] + gamma * R[t+1].

    Raises:
        RejectedInputError: If rewards is empty or gamma is outside (0, 1]
    """
    if len(rewards) == 0:
        raise RejectedInputError("rewards", "need at least one reward")
    if not 0.0 < gamma <= 1.0:
        raise RejectedInputError("gamma", f"must be in (0, 1], got {gamma}")

    returns = np.zeros(len(rewards))
    running = 0.0
    for t in range(len(rewards) - 1, -1, -1):
        running = float(rewards[t]) + gamma * running
        returns[t] = running
    return returns


def end_episode(store: EpisodicValueStore, trace: EpisodeTrace, gamma: float) -> None:
    """Write every step's return into the store, last step first."""
    if len(trace) == 0:
        raise RejectedInputError("trace", "episode trace is empty")

    returns = compute_returns(trace.rewards, gamma)
    for t in range(len(trace) - 1, -1, -1):
        store.update(trace.states[t], trace.actions[t], float(returns[t]))


def run_episode(
    env: Environment,
    store: EpisodicValueStore,
    embedding: EmbeddingFunction,
    config: AgentConfig,
    seed: int,
) -> EpisodeResult:
    """
    Play one episode and replay it into the store.

    The environment and the exploration draws use independent streams
    spawned from `seed`.
    """
    env_seed, rng = _split_seed(seed)
    trace = _rollout(env, store, embedding, config, env_seed, rng)
    end_episode(store, trace, config.gamma)
    return EpisodeResult(total_reward=float(sum(trace.rewards)), steps=len(trace), trace=trace)


def evaluate_greedy(
    env: Environment,
    store: EpisodicValueStore,
    embedding: EmbeddingFunction,
    config: AgentConfig,
    seed: int,
) -> EpisodeResult:
    """One epsilon=0 episode against a frozen store (entries are not written)."""
    env_seed, rng = _split_seed(seed)
    greedy = config.model_copy(update={"epsilon": 0.0})
    trace = _rollout(env, store, embedding, greedy, env_seed, rng)
    return EpisodeResult(total_reward=float(sum(trace.rewards)), steps=len(trace), trace=trace)


def _split_seed(seed: int) -> tuple[int, np.random.Generator]:
    env_stream, explore_stream = np.random.SeedSequence(seed).spawn(2)
    return int(env_stream.generate_state(1)[0]), np.random.Generator(np.random.PCG64(explore_stream))


def _rollout(
    env: Environment,
    store: EpisodicValueStore,
    embedding: EmbeddingFunction,
    config: AgentConfig,
    env_seed: int,
    rng: np.random.Generator,
) -> EpisodeTrace:
    trace = EpisodeTrace()
    frame = env.reset(env_seed)
    done = False
    while not done:
        s = embedding.embed(frame)
        a = act(store, s, config, rng)
        outcome = env.step(a)
        trace.append(s, a, outcome.reward)
        frame = outcome.observation
        done = outcome.done
    return trace
