# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Gaussian random projection and its distance-distortion check.

A projection matrix is an F x D array of independent standard-normal
draws from numpy's PCG64 generator seeded with `seed`, so (seed, F, D)
reproduces it exactly on any platform. project() applies the raw
matrix; jl_distortion() rescales projected distances by 1/sqrt(F)
before comparing them with the originals.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from epicontrol.core.errors import (
    InvalidReductionError,
    RejectedInputError,
    UndefinedStatisticError,
)
from epicontrol.core.types import Embedding
from epicontrol.embeddings.distance import pairwise_distances, rank_correlation
from epicontrol.embeddings.frame import ObservationFrame


@dataclass(frozen=True, eq=False)
class ProjectionMatrix:
    """F x D projection, reproducible from its seed."""

    entries: np.ndarray
    seed: int

    @property
    def target_dim(self) -> int:
        return self.entries.shape[0]

    @property
    def source_dim(self) -> int:
        return self.entries.shape[1]


@dataclass
class DistortionSummary:
    """Relative pairwise-distance error introduced by a projection."""

    median: float
    max: float
    pair_count: int
    rank_correlation: float


def make_projection(D: int, F: int, seed: int) -> ProjectionMatrix:
    """
    Draw an F x D standard-normal matrix.

    Raises:
        InvalidReductionError: If F >= D
    """
    if D < 1 or F < 1:
        raise RejectedInputError("D/F", f"dimensions must be positive, got D={D}, F={F}")
    if F >= D:
        raise InvalidReductionError(D, F)

    rng = np.random.Generator(np.random.PCG64(seed))
    return ProjectionMatrix(entries=rng.standard_normal((F, D)), seed=seed)


def project(m: ProjectionMatrix, x: ObservationFrame | np.ndarray) -> Embedding:
    """Return A x."""
    vector = _as_vector(x)
    if vector.shape[0] != m.source_dim:
        raise RejectedInputError("x", f"expected dimension {m.source_dim}, got {vector.shape[0]}")
    return m.entries @ vector


def jl_distortion(
    m: ProjectionMatrix,
    points: Sequence[ObservationFrame | np.ndarray],
    rescale: bool = True,
) -> DistortionSummary:
    """
    Compare all pairwise distances before and after projection.

    Args:
        m: Projection to check
        points: At least two points, not all identical
        rescale: Divide projected distances by sqrt(F) first

    Returns:
        Median and max of |projected - original| / original over pairs
        with nonzero original distance, plus the rank correlation of
        the two distance lists
    """
    if len(points) < 2:
        raise RejectedInputError("points", f"need at least 2 points, got {len(points)}")

    originals = np.stack([_as_vector(p) for p in points])
    if originals.shape[1] != m.source_dim:
        raise RejectedInputError("points", f"expected dimension {m.source_dim}, got {originals.shape[1]}")
    projected = originals @ m.entries.T

    before = pairwise_distances(originals)
    after = pairwise_distances(projected)
    if rescale:
        after = after / math.sqrt(m.target_dim)

    distinct = before > 0.0
    if not np.any(distinct):
        raise UndefinedStatisticError("distortion", "all points are identical, no distance to compare")

    relative = np.abs(after[distinct] - before[distinct]) / before[distinct]
    return DistortionSummary(
        median=float(np.median(relative)),
        max=float(np.max(relative)),
        pair_count=int(np.count_nonzero(distinct)),
        rank_correlation=rank_correlation(before[distinct], after[distinct]),
    )


def _as_vector(x: ObservationFrame | np.ndarray) -> np.ndarray:
    if isinstance(x, ObservationFrame):
        return x.pixels
    return np.asarray(x, dtype=np.float64).ravel()
