# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Embedding functions: observation -> state vector.

Every variant is a pure function after construction, so identical
observations always produce bit-identical embeddings.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

import numpy as np

from epicontrol.core.errors import RejectedInputError
from epicontrol.core.types import Embedding, EmbeddingKind
from epicontrol.embeddings.frame import ObservationFrame
from epicontrol.embeddings.projection import ProjectionMatrix, make_projection, project

if TYPE_CHECKING:
    from epicontrol.vae.model import VaeModel


@dataclass(frozen=True, eq=False)
class EmbeddingFunction:
    """A variant tag plus its payload (projection matrix or VAE)."""

    kind: EmbeddingKind
    source_dim: int
    projection: Optional[ProjectionMatrix] = None
    vae: Optional["VaeModel"] = None

    @classmethod
    def identity(cls, D: int) -> "EmbeddingFunction":
        return cls(kind=EmbeddingKind.IDENTITY, source_dim=D)

    @classmethod
    def random_projection(cls, D: int, F: int, seed: int) -> "EmbeddingFunction":
        return cls(kind=EmbeddingKind.RANDOM_PROJECTION, source_dim=D, projection=make_projection(D, F, seed))

    @classmethod
    def vae_features(cls, model: "VaeModel") -> "EmbeddingFunction":
        return cls(kind=EmbeddingKind.VAE_FEATURES, source_dim=model.D, vae=model)

    @property
    def dim(self) -> int:
        """Output dimension, fixed for the function's lifetime."""
        match self.kind:
            case EmbeddingKind.IDENTITY:
                return self.source_dim
            case EmbeddingKind.RANDOM_PROJECTION:
                assert self.projection is not None
                return self.projection.target_dim
            case EmbeddingKind.VAE_FEATURES:
                assert self.vae is not None
                return 2 * self.vae.L

    def embed(self, frame: ObservationFrame) -> Embedding:
        """Map one observation to its state vector."""
        if frame.dim != self.source_dim:
            raise RejectedInputError("frame", f"expected dimension {self.source_dim}, got {frame.dim}")

        match self.kind:
            case EmbeddingKind.IDENTITY:
                return np.array(frame.pixels, dtype=np.float64)
            case EmbeddingKind.RANDOM_PROJECTION:
                assert self.projection is not None
                return project(self.projection, frame)
            case EmbeddingKind.VAE_FEATURES:
                assert self.vae is not None
                from epicontrol.vae.model import vae_features

                return vae_features(self.vae, frame)

    __call__ = embed
