# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Deterministic grid worlds: forage, forage-avoid and the double-t-maze.

Observations carry one plane per object class, in this order:
walls, agent, apples, lemons, cue. Cue cells hold 1.0 for red and 0.5
for green. Cues are rendered at every step.

Double-t-maze cue rule: the first junction is red when the apple is in a
left arm (1, 2) and green otherwise. Both second junctions show the same
colour: red for arms 2 and 3, green for arms 1 and 4, so that red always
means "turn left" and green "turn right" relative to the direction of
travel.
"""

from dataclasses import dataclass, field
from typing import Hashable, Optional

import numpy as np

from epicontrol.core.errors import EpisodeFinishedError, RejectedInputError
from epicontrol.core.types import Action, ItemKind, ObservationMode, StartMode, TaskTag
from epicontrol.embeddings.frame import ObservationFrame
from epicontrol.envs.protocol import Environment, StepOutcome
from epicontrol.envs.spec import Cell, GridWorldSpec

PLANE_WALL = 0
PLANE_AGENT = 1
PLANE_APPLE = 2
PLANE_LEMON = 3
PLANE_CUE = 4
N_PLANES = 5

CUE_RED = 1.0
CUE_GREEN = 0.5

# Per-plane brightness for single-channel rendering
GRAYSCALE_INTENSITIES = (0.3, 1.0, 0.8, 0.55, 0.15)

MOVES: dict[Action, Cell] = {
    Action.UP: (0, -1),
    Action.DOWN: (0, 1),
    Action.LEFT: (-1, 0),
    Action.RIGHT: (1, 0),
}

LEFT_ARMS = (1, 2)
RED_SECOND_CUE_ARMS = (2, 3)


@dataclass
class EnvState:
    """Mutable state of one episode."""

    spec: GridWorldSpec
    rng: np.random.Generator = field(repr=False)
    agent: Cell
    home: Cell
    apples: frozenset[Cell]
    lemons: frozenset[Cell]
    floor: frozenset[Cell] = field(repr=False)
    walls: frozenset[Cell] = field(repr=False)
    apple_arm: Optional[int] = None
    t: int = 0
    done: bool = False

    @property
    def first_cue(self) -> Optional[float]:
        if self.apple_arm is None:
            return None
        return CUE_RED if self.apple_arm in LEFT_ARMS else CUE_GREEN

    @property
    def second_cue(self) -> Optional[float]:
        if self.apple_arm is None:
            return None
        return CUE_RED if self.apple_arm in RED_SECOND_CUE_ARMS else CUE_GREEN

    def key(self) -> Hashable:
        return (self.agent, self.apples, self.lemons, self.apple_arm)


def reset(spec: GridWorldSpec, seed: int) -> tuple[EnvState, ObservationFrame]:
    """
    Start an episode.

    Fixed mode starts at spec.start with the spec's items. Randomized mode
    draws the start (and, for forage tasks, item cells) from `seed`. The
    double-t-maze draws its apple arm from `seed` in both modes.

    Raises:
        SpecValidationError: If the spec is malformed
    """
    spec.check()
    rng = np.random.Generator(np.random.PCG64(seed))
    floor = frozenset(spec.floor_cells())
    walls = spec.wall_cells()

    if spec.task is TaskTag.DOUBLE_T_MAZE:
        arms = spec.arm_ends()
        if spec.start_mode is StartMode.RANDOMIZED:
            candidates = [c for c in spec.floor_cells() if c not in arms.values()]
            home = candidates[int(rng.integers(len(candidates)))]
        else:
            home = spec.start
        state = EnvState(
            spec=spec, rng=rng, agent=home, home=home, apples=frozenset(), lemons=frozenset(), floor=floor, walls=walls
        )
        _place_apple_arm(state, int(rng.integers(1, 5)))
        return state, render(state)

    if spec.start_mode is StartMode.RANDOMIZED:
        n_apples, n_lemons = spec.item_counts()
        cells = spec.floor_cells()
        picks = [cells[i] for i in rng.choice(len(cells), size=1 + n_apples + n_lemons, replace=False)]
        home = picks[0]
        apples = frozenset(picks[1 : 1 + n_apples])
        lemons = frozenset(picks[1 + n_apples :])
    else:
        home = spec.start
        apples = frozenset(item.cell for item in spec.items if item.kind is ItemKind.APPLE)
        lemons = frozenset(item.cell for item in spec.items if item.kind is ItemKind.LEMON)

    state = EnvState(spec=spec, rng=rng, agent=home, home=home, apples=apples, lemons=lemons, floor=floor, walls=walls)
    return state, render(state)


def step(state: EnvState, action: int) -> StepOutcome:
    """
    Advance one time step in place.

    Raises:
        EpisodeFinishedError: If the episode is already done
        RejectedInputError: If the action is not a move action
    """
    if state.done:
        raise EpisodeFinishedError(state.t)
    try:
        dx, dy = MOVES[Action(action)]
    except ValueError:
        raise RejectedInputError("action", f"expected 0..{len(MOVES) - 1}, got {action}") from None

    reward = 0.0
    target = (state.agent[0] + dx, state.agent[1] + dy)
    if target in state.floor:
        state.agent = target
        maze = state.spec.task is TaskTag.DOUBLE_T_MAZE
        if target in state.apples:
            reward = 1.0
            if maze:
                state.agent = state.home
                _place_apple_arm(state, int(state.rng.integers(1, 5)))
            else:
                state.apples = state.apples - {target}
        elif target in state.lemons:
            reward = -1.0
            if maze:
                state.agent = state.home

    state.t += 1
    apples_left = state.spec.task is TaskTag.DOUBLE_T_MAZE or bool(state.apples)
    state.done = state.t >= state.spec.t_max or not apples_left
    return StepOutcome(observation=render(state), reward=reward, done=state.done)


def render(state: EnvState) -> ObservationFrame:
    """Draw the state as stacked object planes."""
    spec = state.spec
    planes = np.zeros((N_PLANES, spec.height, spec.width))
    for x, y in state.walls:
        planes[PLANE_WALL, y, x] = 1.0
    for x, y in state.apples:
        planes[PLANE_APPLE, y, x] = 1.0
    for x, y in state.lemons:
        planes[PLANE_LEMON, y, x] = 1.0
    first_cue, second_cue = state.first_cue, state.second_cue
    if first_cue is not None and second_cue is not None:
        first, second_left, second_right = spec.junctions()
        planes[PLANE_CUE, first[1], first[0]] = first_cue
        for x, y in (second_left, second_right):
            planes[PLANE_CUE, y, x] = second_cue
    x, y = state.agent
    planes[PLANE_AGENT, y, x] = 1.0
    return ObservationFrame(pixels=planes, height=spec.height, width=spec.width, channels=N_PLANES)


def _place_apple_arm(state: EnvState, arm: int) -> None:
    arms = state.spec.arm_ends()
    state.apple_arm = arm
    state.apples = frozenset({arms[arm]})
    state.lemons = frozenset(cell for number, cell in arms.items() if number != arm)


class GridWorld(Environment):
    """Environment wrapper over reset/step/render for one spec."""

    def __init__(self, spec: GridWorldSpec, observation: ObservationMode = ObservationMode.PLANES):
        self.spec = spec.check()
        self.observation = observation
        self._state: Optional[EnvState] = None

    @property
    def n_actions(self) -> int:
        return len(MOVES)

    @property
    def observation_dim(self) -> int:
        channels = N_PLANES if self.observation is ObservationMode.PLANES else 1
        return channels * self.spec.width * self.spec.height

    @property
    def state(self) -> EnvState:
        if self._state is None:
            raise RejectedInputError("state", "environment has not been reset")
        return self._state

    def reset(self, seed: int) -> ObservationFrame:
        self._state, frame = reset(self.spec, seed)
        return self._observe(frame)

    def step(self, action: int) -> StepOutcome:
        outcome = step(self.state, action)
        if self.observation is ObservationMode.PLANES:
            return outcome
        return StepOutcome(observation=self._observe(outcome.observation), reward=outcome.reward, done=outcome.done)

    def state_key(self) -> Hashable:
        return self.state.key()

    def _observe(self, frame: ObservationFrame) -> ObservationFrame:
        if self.observation is ObservationMode.GRAYSCALE:
            return frame.grayscale(GRAYSCALE_INTENSITIES)
        return frame
