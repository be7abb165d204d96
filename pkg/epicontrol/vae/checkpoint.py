# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Plain-text VAE checkpoints.

Layout:
    EC-VAE v1 D=<D> H=<H> L=<L>
    [<block>] shape=<r>x<c>
    <comma-separated row>
    ...

Blocks appear in declared parameter order; floats are written with repr
so a reload is bit-identical.
"""

import re
from pathlib import Path

import numpy as np

from epicontrol.core.errors import RejectedInputError
from epicontrol.vae.model import PARAMETER_ORDER, VaeModel, parameter_shapes

HEADER_PATTERN = re.compile(r"^EC-VAE v1 D=(\d+) H=(\d+) L=(\d+)$")
BLOCK_PATTERN = re.compile(r"^\[(\w+)\] shape=([\dx]+)$")


def save_checkpoint(model: VaeModel, path: Path) -> None:
    """Write model parameters to `path`."""
    lines = [f"EC-VAE v1 D={model.D} H={model.H} L={model.L}"]
    for name in PARAMETER_ORDER:
        block = model.params[name]
        lines.append(f"[{name}] shape={'x'.join(str(n) for n in block.shape)}")
        rows = block if block.ndim == 2 else block[None, :]
        lines.extend(",".join(repr(float(v)) for v in row) for row in rows)

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_checkpoint(path: Path) -> VaeModel:
    """
    Read a checkpoint written by save_checkpoint.

    Raises:
        RejectedInputError: If the file is malformed
    """
    lines = [line for line in path.read_text(encoding="utf-8").splitlines() if line.strip()]
    if not lines:
        raise RejectedInputError("checkpoint", "empty file")

    header = HEADER_PATTERN.match(lines[0])
    if header is None:
        raise RejectedInputError("checkpoint", f"bad header: {lines[0]!r}")
    D, H, L = (int(g) for g in header.groups())
    shapes = parameter_shapes(D, H, L)

    params: dict[str, np.ndarray] = {}
    cursor = 1
    for name in PARAMETER_ORDER:
        if cursor >= len(lines):
            raise RejectedInputError("checkpoint", f"missing block '{name}'")
        block = BLOCK_PATTERN.match(lines[cursor])
        if block is None or block.group(1) != name:
            raise RejectedInputError("checkpoint", f"expected block '{name}', got {lines[cursor]!r}")
        shape = shapes[name]
        n_rows = shape[0] if len(shape) == 2 else 1
        rows = lines[cursor + 1 : cursor + 1 + n_rows]
        try:
            values = np.array([[float(v) for v in row.split(",")] for row in rows], dtype=np.float64)
        except ValueError as e:
            raise RejectedInputError("checkpoint", f"block '{name}': {e}") from e
        if values.size != int(np.prod(shape)):
            raise RejectedInputError("checkpoint", f"block '{name}' has {values.size} values, expected {shape}")
        params[name] = values.reshape(shape)
        cursor += 1 + n_rows

    return VaeModel(D=D, H=H, L=L, params=params)
