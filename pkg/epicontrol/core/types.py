# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""Core types and enums for episodic control."""

from enum import Enum, IntEnum

import numpy as np
import numpy.typing as npt

# State vector keying every memory operation
Embedding = npt.NDArray[np.float64]


class Action(IntEnum):
    """Grid-world move actions. Index order is the argmax tie order."""

    UP = 0
    DOWN = 1
    LEFT = 2
    RIGHT = 3


class TaskTag(str, Enum):
    """Grid-world task families."""

    FORAGE = "forage"  # Collect apples (+1)
    FORAGE_AVOID = "forage-avoid"  # Collect apples, avoid lemons (-1)
    DOUBLE_T_MAZE = "double-t-maze"  # Follow colour cues to the one apple arm


class StartMode(str, Enum):
    """How an episode's initial state is chosen."""

    FIXED = "fixed"  # Same start every episode (high exact-match regime)
    RANDOMIZED = "randomized"  # Start drawn from the episode seed (low exact-match regime)


class ItemKind(str, Enum):
    """Collectible items on floor cells."""

    APPLE = "apple"
    LEMON = "lemon"


class EmbeddingKind(str, Enum):
    """Observation-to-state mapping variants."""

    IDENTITY = "identity"
    RANDOM_PROJECTION = "random-projection"
    VAE_FEATURES = "vae-features"


class ObservationMode(str, Enum):
    """Pixel layout handed to the embedding."""

    PLANES = "planes"  # One channel-plane per object class
    GRAYSCALE = "grayscale"  # Single channel, fixed intensity per class
