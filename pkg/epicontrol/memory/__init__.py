# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Episodic memory: bounded per-action kNN value buffers.
"""

from epicontrol.memory.buffer import ActionBuffer, MemoryEntry, key_bytes
from epicontrol.memory.store import EpisodicValueStore
from epicontrol.memory.snapshot import save_snapshot, load_snapshot

__all__ = [
    "ActionBuffer",
    "MemoryEntry",
    "key_bytes",
    "EpisodicValueStore",
    "save_snapshot",
    "load_snapshot",
]
