# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
VAE pretraining: corpus collection and the minibatch RMSProp loop.
"""

from dataclasses import dataclass, field

import numpy as np

from epicontrol.core.errors import RejectedInputError
from epicontrol.core.types import ObservationMode
from epicontrol.embeddings.frame import ObservationFrame
from epicontrol.envs.gridworld import GridWorld
from epicontrol.envs.spec import GridWorldSpec
from epicontrol.logging import get_logger, log_vae_progress
from epicontrol.vae.model import VaeModel, elbo_batch
from epicontrol.vae.optim import RmsPropState, rmsprop_step

log = get_logger("vae")


@dataclass
class TrainingCorpus:
    """Observations collected under a uniform random policy."""

    frames: list[ObservationFrame]

    def __post_init__(self):
        if not self.frames:
            raise RejectedInputError("frames", "corpus is empty")
        dims = {f.dim for f in self.frames}
        if len(dims) != 1:
            raise RejectedInputError("frames", f"mixed observation dimensions {sorted(dims)}")

    def __len__(self) -> int:
        return len(self.frames)

    @property
    def dim(self) -> int:
        return self.frames[0].dim

    def as_matrix(self) -> np.ndarray:
        return np.stack([f.pixels for f in self.frames])


@dataclass
class TrainingLog:
    """Per-step minibatch losses."""

    losses: list[float] = field(default_factory=list)

    def smoothed(self, window: int = 50) -> np.ndarray:
        """Trailing moving average (window shrinks to the log length)."""
        if not self.losses:
            return np.array([])
        window = max(1, min(window, len(self.losses)))
        return np.convolve(np.asarray(self.losses), np.ones(window) / window, mode="valid")


def collect_corpus(
    spec: GridWorldSpec,
    frame_count: int,
    seed: int,
    observation: ObservationMode = ObservationMode.PLANES,
) -> TrainingCorpus:
    """
    Gather `frame_count` observations with uniformly random actions,
    resetting with a fresh episode seed whenever an episode ends.
    """
    if frame_count < 1:
        raise RejectedInputError("frame_count", f"must be positive, got {frame_count}")

    env = GridWorld(spec, observation)
    rng = np.random.Generator(np.random.PCG64(seed))
    frames = [env.reset(int(rng.integers(2**31)))]
    while len(frames) < frame_count:
        outcome = env.step(int(rng.integers(env.n_actions)))
        frames.append(outcome.observation)
        if outcome.done and len(frames) < frame_count:
            frames.append(env.reset(int(rng.integers(2**31))))

    log.debug(f"Collected {len(frames)} frames from {spec.task.value}")
    return TrainingCorpus(frames=frames)


def train(
    model: VaeModel,
    corpus: TrainingCorpus | np.ndarray,
    steps: int,
    batch_size: int,
    seed: int,
    lr: float = 1e-5,
    rho: float = 0.9,
    eps: float = 1e-8,
    log_every: int = 100,
) -> TrainingLog:
    """
    Minimize the mean negative ELBO with RMSProp.

    Minibatches walk through successive seeded permutations of the corpus;
    the reparameterization noise comes from the same seeded stream. The
    model's parameters are replaced in place.

    Raises:
        NumericalFailureError: If a minibatch loss becomes non-finite
    """
    data = corpus.as_matrix() if isinstance(corpus, TrainingCorpus) else np.asarray(corpus, dtype=np.float64)
    if data.ndim != 2 or data.shape[1] != model.D:
        raise RejectedInputError("corpus", f"expected rows of dimension {model.D}, got shape {data.shape}")
    if len(data) == 0:
        raise RejectedInputError("corpus", "corpus is empty")
    if steps < 0 or batch_size < 1:
        raise RejectedInputError("steps/batch_size", f"need steps >= 0 and batch_size >= 1, got {steps}, {batch_size}")

    rng = np.random.Generator(np.random.PCG64(seed))
    state = RmsPropState.zeros_like(model.params, lr=lr, rho=rho, eps=eps)
    history = TrainingLog()

    order = rng.permutation(len(data))
    cursor = 0
    for step_index in range(steps):
        batch: list[int] = []
        while len(batch) < batch_size:
            if cursor == len(order):
                order = rng.permutation(len(data))
                cursor = 0
            take = min(batch_size - len(batch), len(order) - cursor)
            batch.extend(int(i) for i in order[cursor : cursor + take])
            cursor += take

        noise = rng.standard_normal((batch_size, model.L))
        loss, grads = elbo_batch(model, data[batch], noise)
        model.params, state = rmsprop_step(state, model.params, grads)
        history.losses.append(loss)

        if log_every and (step_index + 1) % log_every == 0:
            log_vae_progress(step_index + 1, loss)

    return history
