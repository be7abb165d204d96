# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Grid-world specifications.

A spec is a pydantic model, either built in code (default_spec) or parsed
from a line-oriented key=value file (load_spec):

    task=forage-avoid
    width=8
    height=8
    items=apple@1,2;apple@5,5;lemon@3,3
    start=4,7
    start_mode=fixed
    t_max=100
    seed=0

Coordinates are (x, y) with y growing downward. When `items` is absent,
forage items are placed from `seed` using the `apples`/`lemons` counts.
Double-t-maze layouts (walls, arm ends, junctions) are derived from
`arm_length`; width and height must be 2*arm_length+1.
"""

from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from epicontrol.core.errors import SpecValidationError
from epicontrol.core.types import ItemKind, StartMode, TaskTag

Cell = tuple[int, int]

SPEC_KEYS = {
    "task",
    "width",
    "height",
    "items",
    "start",
    "start_mode",
    "t_max",
    "seed",
    "walls",
    "arm_length",
    "apples",
    "lemons",
}


class Item(BaseModel):
    """An item on a floor cell."""

    model_config = ConfigDict(frozen=True)

    kind: ItemKind
    x: int
    y: int

    @property
    def cell(self) -> Cell:
        return (self.x, self.y)


class GridWorldSpec(BaseModel):
    """Static description of one grid-world task."""

    model_config = ConfigDict(frozen=True)

    task: TaskTag
    width: int = Field(ge=1)
    height: int = Field(ge=1)
    walls: tuple[Cell, ...] = ()
    items: tuple[Item, ...] = ()
    start: Cell = (0, 0)
    start_mode: StartMode = StartMode.FIXED
    t_max: int = Field(default=100, ge=1)
    seed: int = 0  # layout seed
    arm_length: int = Field(default=4, ge=1)

    # --- Layout ---

    def in_bounds(self, cell: Cell) -> bool:
        x, y = cell
        return 0 <= x < self.width and 0 <= y < self.height

    def wall_cells(self) -> frozenset[Cell]:
        """Blocked cells inside the grid (the outer boundary is implicit)."""
        if self.task is TaskTag.DOUBLE_T_MAZE:
            corridors = _maze_corridors(self.arm_length)
            return frozenset(
                (x, y) for y in range(self.height) for x in range(self.width) if (x, y) not in corridors
            )
        return frozenset(self.walls)

    def floor_cells(self) -> tuple[Cell, ...]:
        """Walkable cells in row-major order."""
        walls = self.wall_cells()
        return tuple((x, y) for y in range(self.height) for x in range(self.width) if (x, y) not in walls)

    def is_floor(self, cell: Cell) -> bool:
        return self.in_bounds(cell) and cell not in self.wall_cells()

    def arm_ends(self) -> dict[int, Cell]:
        """
        Double-t-maze arm ends:
        1 = left-up, 2 = left-down, 3 = right-up, 4 = right-down.
        """
        last = 2 * self.arm_length
        return {1: (0, 0), 2: (0, last), 3: (last, 0), 4: (last, last)}

    def junctions(self) -> tuple[Cell, Cell, Cell]:
        """Double-t-maze junctions: (first, second-left, second-right)."""
        a = self.arm_length
        return (a, a), (0, a), (2 * a, a)

    def item_counts(self) -> tuple[int, int]:
        apples = sum(1 for item in self.items if item.kind is ItemKind.APPLE)
        return apples, len(self.items) - apples

    # --- Validation ---

    def violations(self) -> list[str]:
        """Every rule the spec breaks, empty when valid."""
        problems: list[str] = []

        if self.task is TaskTag.DOUBLE_T_MAZE:
            side = 2 * self.arm_length + 1
            if (self.width, self.height) != (side, side):
                problems.append(f"double-t-maze with arm_length={self.arm_length} must be {side}x{side}")
            if self.walls:
                problems.append("double-t-maze walls are derived from arm_length")
            if self.items:
                problems.append("double-t-maze items are placed by the environment")
        else:
            for cell in self.walls:
                if not self.in_bounds(cell):
                    problems.append(f"wall {cell} is outside the grid")
            apples, _ = self.item_counts()
            if apples == 0:
                problems.append(f"{self.task.value} needs at least one apple")

        if not self.is_floor(self.start):
            problems.append(f"start {self.start} is not a floor cell")

        seen: set[Cell] = set()
        for item in self.items:
            if not self.is_floor(item.cell):
                problems.append(f"{item.kind.value} at {item.cell} is not on a floor cell")
            if item.cell in seen:
                problems.append(f"more than one item at {item.cell}")
            seen.add(item.cell)

        if self.start_mode is StartMode.RANDOMIZED and len(self.floor_cells()) < len(self.items) + 1:
            problems.append(f"{len(self.floor_cells())} floor cells cannot hold the start and {len(self.items)} items")

        return problems

    def check(self) -> "GridWorldSpec":
        """Raise SpecValidationError if the spec is malformed, else return it."""
        problems = self.violations()
        if problems:
            raise SpecValidationError(problems)
        return self


def default_spec(task: TaskTag, start_mode: StartMode = StartMode.FIXED, seed: int = 0) -> GridWorldSpec:
    """
    Default layouts per task.

    forage: 8x8, 5 apples, T_max=100
    forage-avoid: 8x8, 5 apples and 5 lemons, T_max=100
    double-t-maze: arms of length 4 (9x9), T_max=200
    """
    match task:
        case TaskTag.DOUBLE_T_MAZE:
            arm = 4
            return GridWorldSpec(
                task=task,
                width=2 * arm + 1,
                height=2 * arm + 1,
                start=(arm, 2 * arm),
                start_mode=start_mode,
                t_max=200,
                seed=seed,
                arm_length=arm,
            )
        case TaskTag.FORAGE | TaskTag.FORAGE_AVOID:
            lemons = 5 if task is TaskTag.FORAGE_AVOID else 0
            start = (4, 7)
            items = place_items(8, 8, frozenset(), start, apples=5, lemons=lemons, seed=seed)
            return GridWorldSpec(
                task=task,
                width=8,
                height=8,
                items=items,
                start=start,
                start_mode=start_mode,
                t_max=100,
                seed=seed,
            )


def place_items(
    width: int,
    height: int,
    walls: frozenset[Cell],
    start: Optional[Cell],
    apples: int,
    lemons: int,
    seed: int,
) -> tuple[Item, ...]:
    """Scatter apples then lemons over distinct floor cells, avoiding the start."""
    if apples < 0 or lemons < 0:
        raise SpecValidationError([f"item counts must be non-negative, got apples={apples}, lemons={lemons}"])
    cells = [(x, y) for y in range(height) for x in range(width) if (x, y) not in walls and (x, y) != start]
    if apples + lemons > len(cells):
        raise SpecValidationError([f"{apples + lemons} items do not fit on {len(cells)} free floor cells"])

    rng = np.random.Generator(np.random.PCG64(seed))
    chosen = rng.choice(len(cells), size=apples + lemons, replace=False)
    kinds = [ItemKind.APPLE] * apples + [ItemKind.LEMON] * lemons
    return tuple(Item(kind=kind, x=cells[i][0], y=cells[i][1]) for kind, i in zip(kinds, chosen))


def load_spec(text: str) -> GridWorldSpec:
    """
    Parse a key=value spec file.

    Raises:
        SpecValidationError: Listing every problem found, parse or layout
    """
    problems: list[str] = []
    raw: dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            problems.append(f"line {number}: expected key=value")
            continue
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in SPEC_KEYS:
            problems.append(f"line {number}: unknown key '{key}'")
        elif key in raw:
            problems.append(f"line {number}: duplicate key '{key}'")
        else:
            raw[key] = value

    for key in ("task", "width", "height"):
        if key not in raw:
            problems.append(f"missing key '{key}'")
    if problems:
        raise SpecValidationError(problems)

    data: dict[str, object] = {k: v for k, v in raw.items() if k not in {"items", "start", "walls", "apples", "lemons"}}
    try:
        if "start" in raw:
            data["start"] = _parse_cell(raw["start"])
        if "walls" in raw:
            data["walls"] = tuple(_parse_cell(c) for c in raw["walls"].split(";") if c.strip())
        if "items" in raw:
            data["items"] = tuple(_parse_item(entry) for entry in raw["items"].split(";") if entry.strip())
    except ValueError as e:
        raise SpecValidationError([str(e)]) from e

    try:
        spec = GridWorldSpec.model_validate(data)
    except ValidationError as e:
        raise SpecValidationError(
            [f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors()]
        ) from e

    if spec.task is TaskTag.DOUBLE_T_MAZE and "start" not in raw:
        spec = spec.model_copy(update={"start": (spec.arm_length, 2 * spec.arm_length)})

    if spec.task is not TaskTag.DOUBLE_T_MAZE and "items" not in raw:
        try:
            apples = int(raw.get("apples", "5"))
            lemons = int(raw.get("lemons", "5" if spec.task is TaskTag.FORAGE_AVOID else "0"))
        except ValueError as e:
            raise SpecValidationError([f"item counts must be integers: {e}"]) from e
        items = place_items(spec.width, spec.height, spec.wall_cells(), spec.start, apples, lemons, spec.seed)
        spec = spec.model_copy(update={"items": items})

    return spec.check()


def _parse_cell(text: str) -> Cell:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"bad cell '{text}', expected x,y")
    return int(parts[0]), int(parts[1])


def _parse_item(text: str) -> Item:
    kind, sep, cell = text.partition("@")
    if not sep:
        raise ValueError(f"bad item '{text}', expected kind@x,y")
    try:
        item_kind = ItemKind(kind.strip())
    except ValueError:
        raise ValueError(f"unknown item kind '{kind.strip()}'") from None
    x, y = _parse_cell(cell)
    return Item(kind=item_kind, x=x, y=y)


def _maze_corridors(arm_length: int) -> frozenset[Cell]:
    a, last = arm_length, 2 * arm_length
    stem = {(a, y) for y in range(a, last + 1)}
    crossbar = {(x, a) for x in range(last + 1)}
    sides = {(x, y) for x in (0, last) for y in range(last + 1)}
    return frozenset(stem | crossbar | sides)
