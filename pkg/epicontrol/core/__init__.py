# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

# Core types, errors and global configuration for epicontrol

from epicontrol.core.types import (
    Action,
    Embedding,
    EmbeddingKind,
    ItemKind,
    ObservationMode,
    StartMode,
    TaskTag,
)
from epicontrol.core.errors import (
    EpisodicControlError,
    RejectedInputError,
    EmptyBufferError,
    PreconditionError,
    UndefinedStatisticError,
    InvalidReductionError,
    NumericalFailureError,
    SpecValidationError,
    EpisodeFinishedError,
    ConfigParseError,
)
from epicontrol.core.config import (
    ECConfig,
    LoggingConfig,
    RunnerConfig,
    OutputConfig,
    get_config,
    reload_config,
)
from epicontrol.core.seeding import episode_seed, stream_seed

__all__ = [
    "Action",
    "Embedding",
    "EmbeddingKind",
    "ItemKind",
    "ObservationMode",
    "StartMode",
    "TaskTag",
    "EpisodicControlError",
    "RejectedInputError",
    "EmptyBufferError",
    "PreconditionError",
    "UndefinedStatisticError",
    "InvalidReductionError",
    "NumericalFailureError",
    "SpecValidationError",
    "EpisodeFinishedError",
    "ConfigParseError",
    "ECConfig",
    "LoggingConfig",
    "RunnerConfig",
    "OutputConfig",
    "get_config",
    "reload_config",
    "episode_seed",
    "stream_seed",
]
