# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Episodic value store: one bounded kNN buffer per action.

update() keeps the highest return ever seen for a (state, action) pair.
estimate() returns the stored value on an exact key match, otherwise the
mean value of the k nearest keys in that action's buffer.

A store is single-writer. Reads leave entries untouched; the hit/query
counters are the only state a read mutates, so they stay confined to
the run that owns the store.
"""

import math
from typing import Optional

import numpy as np

from epicontrol.core.errors import RejectedInputError, UndefinedStatisticError
from epicontrol.core.types import Embedding
from epicontrol.logging import get_logger
from epicontrol.memory.buffer import ActionBuffer

log = get_logger("memory")


class EpisodicValueStore:
    """Per-action value memories sharing one write clock."""

    def __init__(self, n_actions: int, dim: int, capacity: int):
        if n_actions < 1:
            raise RejectedInputError("n_actions", f"must be positive, got {n_actions}")

        self.n_actions = n_actions
        self.dim = dim
        self.capacity = capacity
        self.buffers = [ActionBuffer(capacity, dim, action=a) for a in range(n_actions)]
        self.clock = 0
        self.hit_count = 0
        self.query_count = 0

    def update(self, s: Embedding, a: int, R: float) -> None:
        """
        Write return R for (s, a): insert if new, otherwise keep the max.

        Every write consumes a fresh clock value, which becomes the entry's stamp.

        Raises:
            RejectedInputError: On a bad action, a wrong-dimension or
                non-finite key, or a non-finite return
        """
        key = self._check_key(s)
        buffer = self.buffers[self._check_action(a)]
        if not math.isfinite(R):
            raise RejectedInputError("R", f"return must be finite, got {R}")

        self.clock += 1
        slot = buffer.find(key)
        if slot is None:
            evicted = buffer.insert(key, float(R), self.clock)
            if evicted is not None:
                log.debug(f"Action {a} buffer full, evicted entry stamped {evicted.stamp}")
        else:
            buffer.refresh(slot, max(buffer.value_at(slot), float(R)), self.clock)

    def estimate(self, s: Embedding, a: int, k: int) -> Optional[float]:
        """
        Value estimate for (s, a).

        Exact key match returns the stored value and ignores k. Otherwise
        the mean over the min(k, count) nearest entries. Every call counts
        as a query; exact matches also count as hits.

        Returns:
            The estimate, or None when the action's buffer is empty
        """
        key = self._check_key(s)
        buffer = self.buffers[self._check_action(a)]
        if k < 1:
            raise RejectedInputError("k", f"must be positive, got {k}")

        self.query_count += 1
        if len(buffer) == 0:
            return None

        slot = buffer.find(key)
        if slot is not None:
            self.hit_count += 1
            return buffer.value_at(slot)

        return float(np.mean(buffer.nearest_values(key, k)))

    def match_rate(self) -> float:
        """Fraction of estimate() calls that found a bit-identical key."""
        if self.query_count == 0:
            raise UndefinedStatisticError("match rate", "no queries have been made")
        return self.hit_count / self.query_count

    def occupancy(self) -> list[int]:
        """Entry count per action."""
        return [len(buffer) for buffer in self.buffers]

    def reset_statistics(self) -> None:
        """Zero the hit/query counters (entries are kept)."""
        self.hit_count = 0
        self.query_count = 0

    def _check_key(self, s: Embedding) -> np.ndarray:
        key = np.asarray(s, dtype=np.float64)
        if key.ndim != 1 or key.shape[0] != self.dim:
            raise RejectedInputError("s", f"expected a vector of dimension {self.dim}, got shape {key.shape}")
        if not np.all(np.isfinite(key)):
            raise RejectedInputError("s", "embedding has non-finite components")
        return key

    def _check_action(self, a: int) -> int:
        if not 0 <= int(a) < self.n_actions:
            raise RejectedInputError("a", f"action must be in [0, {self.n_actions}), got {a}")
        return int(a)
