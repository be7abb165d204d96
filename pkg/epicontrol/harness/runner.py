# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Multi-seed experiment runner.

Each seed runs its own pipeline (embedding setup, optional VAE
pretraining, then the episode budget) with no shared mutable state, so
seeds can run in a process pool. Results are collected in seed order.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from epicontrol.agents.episodic import run_episode
from epicontrol.agents.qlearning import LearningCurve, q_learning_baseline, tune_alpha
from epicontrol.core.config import get_config
from epicontrol.core.errors import RejectedInputError
from epicontrol.core.seeding import (
    CORPUS_STREAM,
    PROJECTION_STREAM,
    VAE_INIT_STREAM,
    VAE_TRAIN_STREAM,
    episode_seed,
    stream_seed,
)
from epicontrol.core.types import EmbeddingKind
from epicontrol.embeddings.functions import EmbeddingFunction
from epicontrol.envs.gridworld import GridWorld
from epicontrol.envs.spec import GridWorldSpec, default_spec, load_spec
from epicontrol.harness.config import ExperimentConfig
from epicontrol.logging import get_logger, log_episode, log_run_start, log_seed_failure, log_warning
from epicontrol.memory.store import EpisodicValueStore
from epicontrol.vae.model import init_model
from epicontrol.vae.training import collect_corpus, train

log = get_logger("harness")


@dataclass(frozen=True)
class RunRow:
    """One finished episode of one seed."""

    episode: int
    steps: int
    frames: int
    total_reward: float
    match_rate: Optional[float]  # None until the first query
    occupancy: tuple[int, ...]


@dataclass(frozen=True)
class SeedFailure:
    seed: int
    episode: int
    error: str


@dataclass
class RunRecord:
    """Everything one seed produced."""

    seed: int
    rows: list[RunRow] = field(default_factory=list)
    failure: Optional[SeedFailure] = None
    baseline: Optional[LearningCurve] = None
    baseline_alpha: Optional[float] = None
    store: Optional[EpisodicValueStore] = None

    def rewards(self) -> list[float]:
        return [row.total_reward for row in self.rows]


@dataclass
class AggregateCurve:
    """Per-episode mean and standard error across seeds."""

    episodes: list[int] = field(default_factory=list)
    mean: list[float] = field(default_factory=list)
    sem: list[float] = field(default_factory=list)  # nan with fewer than 2 seeds
    n_seeds: list[int] = field(default_factory=list)


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    records: list[RunRecord]
    curve: AggregateCurve
    baseline_curve: Optional[AggregateCurve] = None

    @property
    def failures(self) -> list[SeedFailure]:
        return [r.failure for r in self.records if r.failure is not None]


@dataclass
class SweepPoint:
    """Outcome of the full experiment at one k."""

    k: int
    result: ExperimentResult
    final_scores: list[float]
    mean: float
    sem: float


@dataclass
class SweepResult:
    points: list[SweepPoint] = field(default_factory=list)


def aggregate_curves(curves: Sequence[Sequence[float]]) -> AggregateCurve:
    """
    Mean and standard error per episode over the curves that reach it.

    Standard error is the sample standard deviation over sqrt(n); it is
    nan when fewer than two curves contribute.
    """
    aggregate = AggregateCurve()
    length = max((len(c) for c in curves), default=0)
    for index in range(length):
        values = np.array([c[index] for c in curves if len(c) > index], dtype=np.float64)
        aggregate.episodes.append(index + 1)
        aggregate.mean.append(float(np.mean(values)))
        aggregate.sem.append(float(np.std(values, ddof=1) / math.sqrt(len(values))) if len(values) >= 2 else math.nan)
        aggregate.n_seeds.append(len(values))
    return aggregate


def final_score(rewards: Sequence[float]) -> float:
    """Mean total reward over the last 10% of episodes (at least one)."""
    if not rewards:
        raise RejectedInputError("rewards", "no episodes to score")
    window = max(1, math.ceil(0.1 * len(rewards)))
    return float(np.mean(rewards[-window:]))


def resolve_spec(config: ExperimentConfig) -> GridWorldSpec:
    """The grid-world spec a config runs on: its env file, else the task default."""
    if config.env_file:
        spec = load_spec(Path(config.env_file).read_text(encoding="utf-8"))
        if spec.task is not config.task:
            raise RejectedInputError("env_file", f"spec task {spec.task.value} differs from config task {config.task.value}")
        return spec
    return default_spec(config.task, config.start_mode)


def build_embedding(config: ExperimentConfig, spec: GridWorldSpec, seed: int) -> tuple[EmbeddingFunction, int]:
    """
    Construct the seed's embedding.

    Returns:
        (embedding, environment frames consumed by pretraining)
    """
    D = GridWorld(spec, config.observation).observation_dim
    match config.embedding:
        case EmbeddingKind.IDENTITY:
            return EmbeddingFunction.identity(D), 0
        case EmbeddingKind.RANDOM_PROJECTION:
            return EmbeddingFunction.random_projection(D, config.projection_dim, stream_seed(seed, PROJECTION_STREAM)), 0
        case EmbeddingKind.VAE_FEATURES:
            corpus = collect_corpus(spec, config.vae_frames, stream_seed(seed, CORPUS_STREAM), config.observation)
            model = init_model(D, config.vae_hidden, config.vae_latent, stream_seed(seed, VAE_INIT_STREAM))
            history = train(
                model,
                corpus,
                steps=config.vae_steps,
                batch_size=config.vae_batch,
                seed=stream_seed(seed, VAE_TRAIN_STREAM),
                lr=config.vae_lr,
            )
            if history.losses:
                log.debug(f"Seed {seed}: VAE loss {history.losses[0]:.2f} -> {history.losses[-1]:.2f}")
            return EmbeddingFunction.vae_features(model), len(corpus)


def run_seed(config: ExperimentConfig, spec: GridWorldSpec, seed: int, k: Optional[int] = None) -> RunRecord:
    """
    Run one seed's full pipeline.

    Any error aborts the seed and is recorded on the returned record
    rather than raised.
    """
    record = RunRecord(seed=seed)
    agent = config.agent_config(k)
    episode = 0
    try:
        env = GridWorld(spec, config.observation)
        embedding, frames = build_embedding(config, spec, seed)
        store = EpisodicValueStore(env.n_actions, embedding.dim, agent.capacity)

        for episode in range(1, config.episodes + 1):
            result = run_episode(env, store, embedding, agent, episode_seed(seed, episode - 1))
            frames += result.steps
            rate = store.match_rate() if store.query_count else None
            record.rows.append(
                RunRow(
                    episode=episode,
                    steps=result.steps,
                    frames=frames,
                    total_reward=result.total_reward,
                    match_rate=rate,
                    occupancy=tuple(store.occupancy()),
                )
            )
            log_episode(seed, episode, result.total_reward, result.steps, rate)

        if config.save_store:
            record.store = store

        if config.baseline:
            factory = lambda: GridWorld(spec, config.observation)  # noqa: E731
            if config.baseline_alpha is None:
                record.baseline_alpha, record.baseline = tune_alpha(
                    factory, config.baseline_config(), config.episodes, seed
                )
            else:
                record.baseline_alpha = config.baseline_alpha
                record.baseline = q_learning_baseline(factory(), config.baseline_config(), config.episodes, seed)
    except Exception as e:
        log_seed_failure(seed, episode, e)
        record.failure = SeedFailure(seed=seed, episode=episode, error=f"{type(e).__name__}: {e}")

    return record


def _run_seed_task(args: tuple[ExperimentConfig, GridWorldSpec, int, Optional[int]]) -> RunRecord:
    return run_seed(*args)


def run_experiment(config: ExperimentConfig, k: Optional[int] = None, max_workers: Optional[int] = None) -> ExperimentResult:
    """
    Run every seed and aggregate the learning curves.

    Seeds run in a process pool when max_workers (default: the global
    runner.max_workers setting) is above 1.

    Raises:
        SpecValidationError: If the environment spec is malformed
        OSError: If the env file cannot be read
    """
    spec = resolve_spec(config)
    log_run_start(config.task.value, config.embedding.value, config.seeds, config.episodes)

    workers = max_workers if max_workers is not None else get_config().runner.max_workers
    tasks = [(config, spec, seed, k) for seed in config.seeds]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            records = list(pool.map(_run_seed_task, tasks))
    else:
        records = [_run_seed_task(task) for task in tasks]

    failed = [r.seed for r in records if r.failure is not None]
    if failed:
        log_warning(f"{len(failed)} of {len(records)} seeds failed: {failed}")

    curve = aggregate_curves([r.rewards() for r in records])
    baseline_curve = None
    if config.baseline:
        baseline_curve = aggregate_curves([r.baseline.rewards for r in records if r.baseline is not None])

    return ExperimentResult(config=config, records=records, curve=curve, baseline_curve=baseline_curve)


def run_k_sweep(config: ExperimentConfig, max_workers: Optional[int] = None) -> SweepResult:
    """Run the full experiment once per sweep value of k and score each run."""
    if not config.sweep_k:
        raise RejectedInputError("sweep_k", "no sweep values given")

    sweep = SweepResult()
    for k in config.sweep_k:
        result = run_experiment(config, k=k, max_workers=max_workers)
        scores = [final_score(r.rewards()) for r in result.records if r.rows]
        summary = aggregate_curves([[s] for s in scores]) if scores else AggregateCurve()
        sweep.points.append(
            SweepPoint(
                k=k,
                result=result,
                final_scores=scores,
                mean=summary.mean[0] if scores else math.nan,
                sem=summary.sem[0] if scores else math.nan,
            )
        )
        log.info(f"k={k}: final score {sweep.points[-1].mean:.3f} over {len(scores)} seeds")
    return sweep
