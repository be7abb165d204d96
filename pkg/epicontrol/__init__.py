# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem
#
# epicontrol - Model-free episodic control
# Per-action nearest-neighbour value memories, observation embeddings,
# grid-world tasks and a seeded benchmark harness.

__version__ = "0.3.1"
