# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""Exact best-return search for fixed-start forage tasks."""

from epicontrol.core.errors import RejectedInputError
from epicontrol.core.types import ItemKind, StartMode, TaskTag
from epicontrol.envs.gridworld import MOVES
from epicontrol.envs.spec import Cell, GridWorldSpec


def max_achievable_return(spec: GridWorldSpec) -> float:
    """
    Best total reward reachable within T_max from the fixed start.

    Breadth-first over (position, remaining apples), keeping the best
    return per state at each depth. Lemons never disappear, so they only
    enter through the reward.

    Raises:
        RejectedInputError: For the double-t-maze or randomized starts
    """
    if spec.task is TaskTag.DOUBLE_T_MAZE:
        raise RejectedInputError("spec", "best return is only defined for forage tasks")
    if spec.start_mode is not StartMode.FIXED:
        raise RejectedInputError("spec", "best return needs a fixed start")
    spec.check()

    floor = frozenset(spec.floor_cells())
    lemons = frozenset(item.cell for item in spec.items if item.kind is ItemKind.LEMON)
    apples = frozenset(item.cell for item in spec.items if item.kind is ItemKind.APPLE)

    frontier: dict[tuple[Cell, frozenset[Cell]], float] = {(spec.start, apples): 0.0}
    best = 0.0
    for _ in range(spec.t_max):
        layer: dict[tuple[Cell, frozenset[Cell]], float] = {}
        for (position, remaining), total in frontier.items():
            for dx, dy in MOVES.values():
                target = (position[0] + dx, position[1] + dy)
                reward = 0.0
                left = remaining
                if target not in floor:
                    target = position
                elif target in remaining:
                    reward = 1.0
                    left = remaining - {target}
                elif target in lemons:
                    reward = -1.0

                value = total + reward
                best = max(best, value)
                if not left:
                    continue
                key = (target, left)
                if value > layer.get(key, float("-inf")):
                    layer[key] = value
        frontier = layer
        if not frontier:
            break
    return best
