# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Environments module: deterministic grid worlds with pixel observations.
"""

from epicontrol.envs.protocol import Environment, StepOutcome
from epicontrol.envs.spec import (
    Cell,
    Item,
    GridWorldSpec,
    default_spec,
    load_spec,
    place_items,
)
from epicontrol.envs.gridworld import (
    CUE_GREEN,
    CUE_RED,
    GRAYSCALE_INTENSITIES,
    N_PLANES,
    PLANE_AGENT,
    PLANE_APPLE,
    PLANE_CUE,
    PLANE_LEMON,
    PLANE_WALL,
    EnvState,
    GridWorld,
    render,
    reset,
    step,
)
from epicontrol.envs.search import max_achievable_return

__all__ = [
    "Environment",
    "StepOutcome",
    "Cell",
    "Item",
    "GridWorldSpec",
    "default_spec",
    "load_spec",
    "place_items",
    "CUE_GREEN",
    "CUE_RED",
    "GRAYSCALE_INTENSITIES",
    "N_PLANES",
    "PLANE_AGENT",
    "PLANE_APPLE",
    "PLANE_CUE",
    "PLANE_LEMON",
    "PLANE_WALL",
    "EnvState",
    "GridWorld",
    "render",
    "reset",
    "step",
    "max_achievable_return",
]
