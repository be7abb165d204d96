# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""Tests for grid-world specs, dynamics and rendering."""

import numpy as np
import pytest

from epicontrol.core.errors import EpisodeFinishedError, RejectedInputError, SpecValidationError
from epicontrol.core.types import Action, ItemKind, ObservationMode, StartMode, TaskTag
from epicontrol.envs import (
    CUE_GREEN,
    CUE_RED,
    N_PLANES,
    PLANE_AGENT,
    PLANE_APPLE,
    PLANE_CUE,
    PLANE_LEMON,
    PLANE_WALL,
    GridWorld,
    GridWorldSpec,
    Item,
    default_spec,
    load_spec,
    max_achievable_return,
    place_items,
    render,
    reset,
    step,
)
from tests.conftest import small_forage_spec


def strip_spec(apples, lemons=(), width=4, t_max=10) -> GridWorldSpec:
    """One-row corridor starting at the left end."""
    items = tuple(Item(kind=ItemKind.APPLE, x=x, y=0) for x in apples)
    items += tuple(Item(kind=ItemKind.LEMON, x=x, y=0) for x in lemons)
    task = TaskTag.FORAGE_AVOID if lemons else TaskTag.FORAGE
    return GridWorldSpec(task=task, width=width, height=1, start=(0, 0), items=items, t_max=t_max)


def arm_route(arm: int) -> list[Action]:
    """Moves from the maze's bottom start to the end of `arm`."""
    across = Action.LEFT if arm in (1, 2) else Action.RIGHT
    along = Action.UP if arm in (1, 3) else Action.DOWN
    return [Action.UP] * 4 + [across] * 4 + [along] * 4


class TestSpec:
    """Tests for spec construction and validation."""

    def test_default_forage_layout(self):
        spec = default_spec(TaskTag.FORAGE)
        assert (spec.width, spec.height, spec.t_max) == (8, 8, 100)
        assert spec.item_counts() == (5, 0)
        assert spec.violations() == []

    def test_default_forage_avoid_has_lemons(self):
        assert default_spec(TaskTag.FORAGE_AVOID).item_counts() == (5, 5)

    def test_default_maze_layout(self):
        spec = default_spec(TaskTag.DOUBLE_T_MAZE)
        assert (spec.width, spec.height, spec.t_max) == (9, 9, 200)
        assert spec.start == (4, 8)
        assert spec.junctions() == ((4, 4), (0, 4), (8, 4))
        assert spec.arm_ends() == {1: (0, 0), 2: (0, 8), 3: (8, 0), 4: (8, 8)}
        for cell in [(4, 8), (4, 4), (0, 4), (8, 4), (0, 0), (8, 8)]:
            assert spec.is_floor(cell)
        for cell in [(1, 0), (3, 7), (5, 5)]:
            assert not spec.is_floor(cell)

    def test_floor_cells_are_row_major(self):
        spec = small_forage_spec(walls=((1, 0),))
        cells = spec.floor_cells()
        assert cells[:3] == ((0, 0), (2, 0), (0, 1))
        assert len(cells) == 8

    def test_forage_without_apples_is_invalid(self):
        spec = small_forage_spec(items=())
        assert any("apple" in p for p in spec.violations())
        with pytest.raises(SpecValidationError):
            spec.check()

    def test_every_violation_is_listed(self):
        spec = small_forage_spec(
            start=(5, 5),
            items=(Item(kind=ItemKind.APPLE, x=1, y=1), Item(kind=ItemKind.LEMON, x=1, y=1)),
        )
        with pytest.raises(SpecValidationError) as excinfo:
            spec.check()
        assert len(excinfo.value.violations) == 2

    def test_maze_size_must_match_arm_length(self):
        spec = GridWorldSpec(task=TaskTag.DOUBLE_T_MAZE, width=7, height=9, start=(4, 8), arm_length=4)
        assert spec.violations()

    def test_place_items_is_seeded_and_avoids_start(self):
        a = place_items(4, 4, frozenset(), (0, 0), apples=3, lemons=2, seed=7)
        b = place_items(4, 4, frozenset(), (0, 0), apples=3, lemons=2, seed=7)
        assert a == b
        assert len({item.cell for item in a}) == 5
        assert all(item.cell != (0, 0) for item in a)

    def test_place_items_rejects_overfull_grid(self):
        with pytest.raises(SpecValidationError):
            place_items(2, 2, frozenset(), (0, 0), apples=4, lemons=0, seed=0)


class TestLoadSpec:
    """Tests for parsing spec files."""

    def test_parse_full_file(self):
        spec = load_spec(
            """
            # small arena
            task=forage-avoid
            width=8
            height=8
            items=apple@1,2;apple@5,5;lemon@3,3
            start=4,7
            start_mode=fixed
            t_max=100
            seed=0
            """
        )
        assert spec.task is TaskTag.FORAGE_AVOID
        assert spec.start == (4, 7)
        assert spec.item_counts() == (2, 1)
        assert Item(kind=ItemKind.LEMON, x=3, y=3) in spec.items

    def test_items_placed_from_counts(self):
        spec = load_spec("task=forage\nwidth=6\nheight=6\napples=4\nseed=3\n")
        assert spec.item_counts() == (4, 0)

    def test_maze_start_defaults_to_stem_bottom(self):
        spec = load_spec("task=double-t-maze\nwidth=9\nheight=9\nstart_mode=randomized\n")
        assert spec.start == (4, 8)
        assert spec.start_mode is StartMode.RANDOMIZED

    def test_problems_are_collected(self):
        with pytest.raises(SpecValidationError) as excinfo:
            load_spec("task=forage\ncolour=blue\nwidth=4\nwidth=5\n")
        problems = excinfo.value.violations
        assert any("unknown key 'colour'" in p for p in problems)
        assert any("duplicate key 'width'" in p for p in problems)
        assert any("missing key 'height'" in p for p in problems)

    def test_bad_item_kind(self):
        with pytest.raises(SpecValidationError, match="unknown item kind"):
            load_spec("task=forage\nwidth=4\nheight=4\nitems=pear@1,1\n")

    def test_bad_task(self):
        with pytest.raises(SpecValidationError):
            load_spec("task=chess\nwidth=4\nheight=4\n")

    def test_start_on_wall(self):
        with pytest.raises(SpecValidationError, match="start"):
            load_spec("task=forage\nwidth=4\nheight=4\nwalls=1,1;2,2\nstart=1,1\nitems=apple@3,3\n")


class TestDynamics:
    """Tests for reset and step."""

    def test_apple_to_the_right(self):
        state, _ = reset(small_forage_spec(), seed=0)
        outcome = step(state, Action.RIGHT)
        assert outcome.reward == 1.0
        assert state.agent == (1, 1)
        assert outcome.done
        assert outcome.observation.planes()[PLANE_APPLE].sum() == 0.0

    def test_step_after_done_raises(self):
        state, _ = reset(small_forage_spec(), seed=0)
        step(state, Action.RIGHT)
        with pytest.raises(EpisodeFinishedError):
            step(state, Action.LEFT)

    def test_boundary_blocks_movement(self):
        state, _ = reset(small_forage_spec(), seed=0)
        outcome = step(state, Action.LEFT)
        assert state.agent == (0, 1)
        assert outcome.reward == 0.0
        assert not outcome.done

    def test_walls_block_movement(self):
        state, _ = reset(small_forage_spec(walls=((0, 0),)), seed=0)
        step(state, Action.UP)
        assert state.agent == (0, 1)

    def test_time_limit_ends_episode(self):
        state, _ = reset(small_forage_spec(t_max=3), seed=0)
        outcomes = [step(state, Action.LEFT) for _ in range(3)]
        assert [o.done for o in outcomes] == [False, False, True]

    def test_bad_action_rejected(self):
        state, _ = reset(small_forage_spec(), seed=0)
        with pytest.raises(RejectedInputError):
            step(state, 9)

    def test_lemon_costs_one_and_stays(self):
        state, _ = reset(strip_spec(apples=[3], lemons=[1]), seed=0)
        outcome = step(state, Action.RIGHT)
        assert outcome.reward == -1.0
        assert (1, 0) in state.lemons
        assert state.agent == (1, 0)

    def test_fixed_reset_is_deterministic(self):
        spec = default_spec(TaskTag.FORAGE)
        _, a = reset(spec, seed=1)
        _, b = reset(spec, seed=99)
        assert a.pixels.tobytes() == b.pixels.tobytes()

    def test_randomized_reset_follows_seed(self):
        spec = default_spec(TaskTag.FORAGE_AVOID, start_mode=StartMode.RANDOMIZED)
        _, a = reset(spec, seed=5)
        _, b = reset(spec, seed=5)
        _, c = reset(spec, seed=6)
        assert a.pixels.tobytes() == b.pixels.tobytes()
        assert a.pixels.tobytes() != c.pixels.tobytes()

    def test_randomized_reset_keeps_item_counts(self):
        spec = default_spec(TaskTag.FORAGE_AVOID, start_mode=StartMode.RANDOMIZED)
        for seed in range(10):
            state, _ = reset(spec, seed=seed)
            assert len(state.apples) == 5
            assert len(state.lemons) == 5
            assert state.agent not in state.apples | state.lemons

    def test_forage_rewards_count_apples_eaten(self):
        spec = default_spec(TaskTag.FORAGE_AVOID)
        rng = np.random.Generator(np.random.PCG64(0))
        state, _ = reset(spec, seed=0)
        apple_reward = lemon_reward = 0.0
        done = False
        while not done:
            lemons_before = state.lemons
            outcome = step(state, int(rng.integers(4)))
            if outcome.reward < 0:
                lemon_reward += outcome.reward
                assert state.agent in lemons_before
            else:
                apple_reward += outcome.reward
            done = outcome.done
        assert apple_reward == 5 - len(state.apples)

    def test_state_key_tracks_position(self):
        env = GridWorld(small_forage_spec(t_max=5))
        env.reset(0)
        before = env.state_key()
        env.step(Action.UP)
        env.step(Action.DOWN)
        assert env.state_key() == before

    def test_state_before_reset_rejected(self):
        with pytest.raises(RejectedInputError):
            GridWorld(small_forage_spec()).state_key()


class TestDoubleTMaze:
    """Tests for the cue-following maze."""

    def test_fixed_start_is_shared_across_seeds(self):
        spec = default_spec(TaskTag.DOUBLE_T_MAZE)
        starts = {reset(spec, seed=s)[0].agent for s in range(20)}
        assert starts == {(4, 8)}

    def test_every_arm_is_drawn(self):
        spec = default_spec(TaskTag.DOUBLE_T_MAZE)
        assert {reset(spec, seed=s)[0].apple_arm for s in range(100)} == {1, 2, 3, 4}

    def test_randomized_start_avoids_arm_ends(self):
        spec = default_spec(TaskTag.DOUBLE_T_MAZE, start_mode=StartMode.RANDOMIZED)
        arm_ends = set(spec.arm_ends().values())
        for seed in range(30):
            state, _ = reset(spec, seed=seed)
            assert state.agent in spec.floor_cells()
            assert state.agent not in arm_ends

    @pytest.mark.parametrize(
        "arm,first,second",
        [(1, CUE_RED, CUE_GREEN), (2, CUE_RED, CUE_RED), (3, CUE_GREEN, CUE_RED), (4, CUE_GREEN, CUE_GREEN)],
    )
    def test_cues_encode_the_arm(self, arm: int, first: float, second: float):
        spec = default_spec(TaskTag.DOUBLE_T_MAZE)
        seed = next(s for s in range(100) if reset(spec, seed=s)[0].apple_arm == arm)
        _, frame = reset(spec, seed=seed)
        cue = frame.planes()[PLANE_CUE]
        assert cue[4, 4] == first
        assert cue[4, 0] == second
        assert cue[4, 8] == second
        assert np.count_nonzero(cue) == 3

    def test_following_cues_reaches_apple(self):
        """Reading only the cue pixels, the agent walks to the apple every time."""
        spec = default_spec(TaskTag.DOUBLE_T_MAZE)
        for seed in range(12):
            state, frame = reset(spec, seed=seed)
            cue = frame.planes()[PLANE_CUE]
            left = cue[4, 4] == CUE_RED
            side_red = cue[4, 0] == CUE_RED
            # red at a side junction means turn left relative to travel
            arm = (2 if side_red else 1) if left else (3 if side_red else 4)
            assert arm == state.apple_arm

            rewards = [step(state, action).reward for action in arm_route(arm)]
            assert rewards == [0.0] * 11 + [1.0]
            assert state.agent == (4, 8)
            assert state.t == 12

    def test_wrong_arm_is_a_lemon(self):
        spec = default_spec(TaskTag.DOUBLE_T_MAZE)
        state, _ = reset(spec, seed=0)
        wrong = next(arm for arm in (1, 2, 3, 4) if arm != state.apple_arm)
        arm_before = state.apple_arm
        rewards = [step(state, action).reward for action in arm_route(wrong)]
        assert rewards[-1] == -1.0
        assert state.agent == (4, 8)
        assert state.apple_arm == arm_before

    def test_maze_runs_to_time_limit(self):
        spec = default_spec(TaskTag.DOUBLE_T_MAZE)
        state, _ = reset(spec, seed=0)
        outcomes = [step(state, Action.DOWN) for _ in range(200)]
        assert outcomes[-1].done
        assert not any(o.done for o in outcomes[:-1])

    def test_frames_differ_only_in_item_and_cue_planes(self):
        spec = default_spec(TaskTag.DOUBLE_T_MAZE)
        by_arm = {}
        for seed in range(100):
            state, frame = reset(spec, seed=seed)
            by_arm.setdefault(state.apple_arm, frame)
        a, b = by_arm[1].planes(), by_arm[4].planes()
        assert np.array_equal(a[PLANE_WALL], b[PLANE_WALL])
        assert np.array_equal(a[PLANE_AGENT], b[PLANE_AGENT])
        for plane in (PLANE_APPLE, PLANE_LEMON, PLANE_CUE):
            assert not np.array_equal(a[plane], b[plane])


class TestRender:
    """Tests for observations."""

    def test_render_is_deterministic(self):
        state, frame = reset(default_spec(TaskTag.FORAGE_AVOID), seed=0)
        assert render(state).pixels.tobytes() == frame.pixels.tobytes()

    def test_planes_shape(self):
        _, frame = reset(default_spec(TaskTag.FORAGE), seed=0)
        assert frame.channels == N_PLANES
        assert frame.planes().shape == (N_PLANES, 8, 8)

    def test_tiny_room_has_one_agent_pixel(self):
        spec = GridWorldSpec(
            task=TaskTag.FORAGE, width=2, height=2, start=(0, 0), items=(Item(kind=ItemKind.APPLE, x=1, y=1),), t_max=20
        )
        env = GridWorld(spec)
        frame = env.reset(0)
        assert frame.planes()[PLANE_AGENT].sum() == 1.0
        for action in [Action.UP, Action.LEFT, Action.RIGHT, Action.UP, Action.LEFT]:
            frame = env.step(action).observation
            assert frame.planes()[PLANE_AGENT].sum() == 1.0

    def test_grayscale_observations(self):
        env = GridWorld(small_forage_spec(), ObservationMode.GRAYSCALE)
        frame = env.reset(0)
        assert env.observation_dim == 9
        assert frame.dim == 9
        assert frame.channels == 1
        # agent at (0, 1) drawn at full brightness, apple at (1, 1) at its own
        assert frame.planes()[0, 1, 0] == 1.0
        assert frame.planes()[0, 1, 1] == 0.8
        assert frame.planes()[0, 0, 0] == 0.0


class TestMaxAchievableReturn:
    """Tests for the exact best-return search."""

    def test_single_apple(self):
        assert max_achievable_return(small_forage_spec()) == 1.0

    def test_limited_by_time(self):
        assert max_achievable_return(strip_spec(apples=[1, 3], t_max=2)) == 1.0
        assert max_achievable_return(strip_spec(apples=[1, 3], t_max=3)) == 2.0

    def test_worth_crossing_a_lemon(self):
        assert max_achievable_return(strip_spec(apples=[2, 3], lemons=[1], t_max=3)) == 1.0

    def test_not_worth_crossing_a_lemon(self):
        assert max_achievable_return(strip_spec(apples=[2], lemons=[1], t_max=5)) == 0.0

    def test_maze_rejected(self):
        with pytest.raises(RejectedInputError):
            max_achievable_return(default_spec(TaskTag.DOUBLE_T_MAZE))

    def test_randomized_start_rejected(self):
        with pytest.raises(RejectedInputError):
            max_achievable_return(default_spec(TaskTag.FORAGE, start_mode=StartMode.RANDOMIZED))
