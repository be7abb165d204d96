# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Bounded nearest-neighbour buffer for one action.

Entries are (key, value, stamp) triples. Keys are unique bit-for-bit;
when the buffer is full the entry with the smallest stamp is evicted.
Nearest-neighbour search is an exact linear scan over Euclidean distance.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from epicontrol.core.errors import EmptyBufferError, PreconditionError, RejectedInputError
from epicontrol.core.types import Embedding

# First allocation; storage doubles until it reaches capacity
INITIAL_ALLOCATION = 256


def key_bytes(key: Embedding) -> bytes:
    """Exact-match identity of a key (bit-identical float64 vectors compare equal)."""
    return np.ascontiguousarray(key, dtype=np.float64).tobytes()


@dataclass(frozen=True)
class MemoryEntry:
    """One remembered state: its key, the best return seen, and its last write stamp."""

    key: Embedding
    value: float
    stamp: int


class ActionBuffer:
    """
    Fixed-capacity kNN buffer.

    Stamps are supplied by the owning store's clock; the buffer only
    relies on them being distinct and increasing.
    """

    def __init__(self, capacity: int, dim: int, action: Optional[int] = None):
        if capacity < 1:
            raise RejectedInputError("capacity", f"must be positive, got {capacity}")
        if dim < 1:
            raise RejectedInputError("dim", f"must be positive, got {dim}")

        self.capacity = capacity
        self.dim = dim
        self.action = action

        allocation = min(capacity, INITIAL_ALLOCATION)
        self._keys = np.empty((allocation, dim), dtype=np.float64)
        self._values = np.empty(allocation, dtype=np.float64)
        self._stamps = np.empty(allocation, dtype=np.int64)
        self._count = 0
        self._index: dict[bytes, int] = {}

    def __len__(self) -> int:
        return self._count

    @property
    def is_full(self) -> bool:
        return self._count >= self.capacity

    def find(self, key: Embedding) -> Optional[int]:
        """Slot of the entry whose key is bit-identical to `key`, if any."""
        return self._index.get(key_bytes(key))

    def value_at(self, slot: int) -> float:
        return float(self._values[slot])

    def entry_at(self, slot: int) -> MemoryEntry:
        return MemoryEntry(
            key=self._keys[slot].copy(),
            value=float(self._values[slot]),
            stamp=int(self._stamps[slot]),
        )

    def entries(self) -> list[MemoryEntry]:
        """All entries ordered by stamp (oldest first)."""
        order = np.argsort(self._stamps[: self._count], kind="stable")
        return [self.entry_at(int(slot)) for slot in order]

    def insert(self, key: Embedding, value: float, stamp: int) -> Optional[MemoryEntry]:
        """
        Add a new entry, evicting the least recently written one if full.

        Args:
            key: Embedding not already present in the buffer
            value: Initial stored return
            stamp: Fresh clock value

        Returns:
            The evicted entry, or None if there was room
        """
        evicted = self.evict() if self.is_full else None

        if self._count == len(self._values):
            self._grow()

        slot = self._count
        self._keys[slot] = key
        self._values[slot] = value
        self._stamps[slot] = stamp
        self._index[key_bytes(self._keys[slot])] = slot
        self._count += 1
        return evicted

    def refresh(self, slot: int, value: float, stamp: int) -> None:
        """Overwrite an entry's value and stamp in place."""
        self._values[slot] = value
        self._stamps[slot] = stamp

    def evict(self) -> MemoryEntry:
        """
        Remove and return the entry with the smallest stamp.

        Raises:
            PreconditionError: If the buffer is below capacity
        """
        if not self.is_full:
            raise PreconditionError(f"evict requires a full buffer ({self._count}/{self.capacity} entries)")

        slot = int(np.argmin(self._stamps[: self._count]))
        evicted = self.entry_at(slot)
        del self._index[key_bytes(evicted.key)]

        last = self._count - 1
        if slot != last:
            # Move the last entry into the hole
            self._keys[slot] = self._keys[last]
            self._values[slot] = self._values[last]
            self._stamps[slot] = self._stamps[last]
            self._index[key_bytes(self._keys[slot])] = slot
        self._count -= 1
        return evicted

    def knn(self, s: Embedding, k: int) -> list[tuple[MemoryEntry, float]]:
        """
        The min(k, count) entries nearest to `s`, by ascending Euclidean distance.

        Equal distances are ordered by stamp, older first. Reads never
        touch stamps.

        Raises:
            EmptyBufferError: If the buffer holds no entries
        """
        order, distances = self._nearest(s, k)
        return [(self.entry_at(int(slot)), float(distances[slot])) for slot in order]

    def nearest_values(self, s: Embedding, k: int) -> np.ndarray:
        """Values of the knn() entries, in the same order."""
        order, _ = self._nearest(s, k)
        return self._values[order]

    def _nearest(self, s: Embedding, k: int) -> tuple[np.ndarray, np.ndarray]:
        if self._count == 0:
            raise EmptyBufferError(self.action)
        if k < 1:
            raise RejectedInputError("k", f"must be positive, got {k}")

        n = self._count
        diffs = self._keys[:n] - s
        distances = np.sqrt(np.einsum("ij,ij->i", diffs, diffs))
        order = np.lexsort((self._stamps[:n], distances))
        return order[: min(k, n)], distances

    def _grow(self) -> None:
        allocation = min(self.capacity, max(1, 2 * len(self._values)))
        keys = np.empty((allocation, self.dim), dtype=np.float64)
        values = np.empty(allocation, dtype=np.float64)
        stamps = np.empty(allocation, dtype=np.int64)
        keys[: self._count] = self._keys[: self._count]
        values[: self._count] = self._values[: self._count]
        stamps[: self._count] = self._stamps[: self._count]
        self._keys, self._values, self._stamps = keys, values, stamps
