# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Error types for episodic control.

Every failure the library signals is a subclass of EpisodicControlError,
carrying its context as attributes so callers (and the CLI) can report it.
"""


class EpisodicControlError(Exception):
    """Base class for all library errors."""


class RejectedInputError(EpisodicControlError, ValueError):
    """Raised when an argument violates an operation's precondition on values or shapes."""

    def __init__(self, field: str, reason: str):
        self.field = field
        self.reason = reason
        super().__init__(f"Rejected input '{field}': {reason}")


class EmptyBufferError(EpisodicControlError):
    """Raised when a nearest-neighbour query hits a buffer with no entries."""

    def __init__(self, action: int | None = None):
        self.action = action
        where = f" for action {action}" if action is not None else ""
        super().__init__(f"Buffer is empty{where}")


class PreconditionError(EpisodicControlError):
    """Raised when an operation is called in a state it does not accept."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Precondition violated: {reason}")


class UndefinedStatisticError(EpisodicControlError):
    """Raised when a statistic has no defined value for the data at hand."""

    def __init__(self, statistic: str, reason: str):
        self.statistic = statistic
        self.reason = reason
        super().__init__(f"{statistic} is undefined: {reason}")


class InvalidReductionError(EpisodicControlError):
    """Raised when a projection would not reduce dimensionality."""

    def __init__(self, source_dim: int, target_dim: int):
        self.source_dim = source_dim
        self.target_dim = target_dim
        super().__init__(f"Projection must reduce dimension (D={source_dim}, F={target_dim}, need F < D)")


class NumericalFailureError(EpisodicControlError):
    """Raised when a loss or update becomes non-finite."""

    def __init__(self, block: str, reason: str):
        self.block = block
        self.reason = reason
        super().__init__(f"Numerical failure in '{block}': {reason}")


class SpecValidationError(EpisodicControlError):
    """Raised when a grid-world spec is malformed. Lists every violation found."""

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("Invalid grid-world spec: " + "; ".join(violations))


class EpisodeFinishedError(EpisodicControlError):
    """Raised when stepping an environment whose episode is done."""

    def __init__(self, steps: int):
        self.steps = steps
        super().__init__(f"Episode already finished after {steps} steps")


class ConfigParseError(EpisodicControlError):
    """Raised when an experiment config cannot be parsed or validated."""

    def __init__(self, line: int | None, key: str, reason: str):
        self.line = line
        self.key = key
        self.reason = reason
        where = f"line {line}, " if line is not None else ""
        super().__init__(f"Config error ({where}key '{key}'): {reason}")
