# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Text snapshots of an episodic value store.

Format:
    EC-STORE v1 F=<dim> actions=<n>
    action,value,stamp,v1,...,vF
    ...

Numbers use Python's shortest round-trip repr, so a loaded store behaves
bit-identically to the saved one.
"""

import re
from pathlib import Path
from typing import Optional

import numpy as np

from epicontrol.core.errors import RejectedInputError
from epicontrol.memory.store import EpisodicValueStore

HEADER_PATTERN = re.compile(r"^EC-STORE v1 F=(\d+) actions=(\d+)$")


def save_snapshot(store: EpisodicValueStore, path: Path) -> None:
    """Write every entry of `store` to `path`, oldest first within each action."""
    lines = [f"EC-STORE v1 F={store.dim} actions={store.n_actions}"]
    for action, buffer in enumerate(store.buffers):
        for entry in buffer.entries():
            key_text = ",".join(repr(float(v)) for v in entry.key)
            lines.append(f"{action},{entry.value!r},{entry.stamp},{key_text}")

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")


def load_snapshot(path: Path, capacity: Optional[int] = None) -> EpisodicValueStore:
    """
    Rebuild a store from a snapshot file.

    Args:
        path: Snapshot file
        capacity: Per-action capacity; defaults to the largest buffer in the file

    Returns:
        Store with the saved entries and stamps; clock resumes at the
        largest stamp, hit/query counters start at zero
    """
    lines = [line for line in path.read_text().splitlines() if line.strip()]
    if not lines:
        raise RejectedInputError("snapshot", f"{path} is empty")

    match = HEADER_PATTERN.match(lines[0].strip())
    if match is None:
        raise RejectedInputError("snapshot", f"bad header: {lines[0]!r}")
    dim, n_actions = int(match.group(1)), int(match.group(2))

    rows: list[tuple[int, float, int, np.ndarray]] = []
    for number, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) != 3 + dim:
            raise RejectedInputError("snapshot", f"line {number}: expected {3 + dim} fields, got {len(fields)}")
        try:
            action, value, stamp = int(fields[0]), float(fields[1]), int(fields[2])
            key = np.array([float(v) for v in fields[3:]], dtype=np.float64)
        except ValueError as e:
            raise RejectedInputError("snapshot", f"line {number}: {e}") from e
        if not 0 <= action < n_actions:
            raise RejectedInputError("snapshot", f"line {number}: action {action} out of range")
        rows.append((action, value, stamp, key))

    counts = [0] * n_actions
    for action, *_ in rows:
        counts[action] += 1
    if capacity is None:
        capacity = max(1, max(counts, default=0))
    if max(counts, default=0) > capacity:
        raise RejectedInputError("capacity", f"snapshot holds {max(counts)} entries for one action, capacity {capacity}")

    store = EpisodicValueStore(n_actions=n_actions, dim=dim, capacity=capacity)
    for action, value, stamp, key in sorted(rows, key=lambda row: row[2]):
        if store.buffers[action].find(key) is not None:
            raise RejectedInputError("snapshot", f"duplicate key for action {action}")
        store.buffers[action].insert(key, value, stamp)
    store.clock = max((row[2] for row in rows), default=0)
    return store
