# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Embeddings module: observation frames and the state embeddings built from them.

Provides identity, Gaussian random projection and VAE-feature embeddings.
"""

from epicontrol.embeddings.frame import ObservationFrame
from epicontrol.embeddings.distance import (
    euclidean_distance,
    pairwise_distances,
    rank_correlation,
)
from epicontrol.embeddings.projection import (
    ProjectionMatrix,
    DistortionSummary,
    make_projection,
    project,
    jl_distortion,
)
from epicontrol.embeddings.functions import EmbeddingFunction

__all__ = [
    "ObservationFrame",
    "euclidean_distance",
    "pairwise_distances",
    "rank_correlation",
    "ProjectionMatrix",
    "DistortionSummary",
    "make_projection",
    "project",
    "jl_distortion",
    "EmbeddingFunction",
]
