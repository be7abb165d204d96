# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Seed derivation.

Every random stream in a run is derived from the run seed through
numpy's SeedSequence, so streams never overlap and a (config, seed) pair
reproduces a run exactly.
"""

import numpy as np

# Named sub-streams of a run seed
PROJECTION_STREAM = 1
CORPUS_STREAM = 2
VAE_INIT_STREAM = 3
VAE_TRAIN_STREAM = 4
BASELINE_STREAM = 5


def episode_seed(run_seed: int, episode: int) -> int:
    """Seed for one episode of a run."""
    return int(np.random.SeedSequence([run_seed, episode]).generate_state(1)[0])


def stream_seed(run_seed: int, stream: int) -> int:
    """Seed for a named sub-stream of a run."""
    return int(np.random.SeedSequence(run_seed, spawn_key=(stream,)).generate_state(1)[0])
