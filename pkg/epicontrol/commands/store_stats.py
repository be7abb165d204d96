# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
store-stats command - Summarize a saved episodic store snapshot.

Displays per-action occupancy, value ranges and the write clock.
"""

import sys
from argparse import ArgumentParser, Namespace
from pathlib import Path

import numpy as np

from epicontrol.commands.base import BaseCommand
from epicontrol.memory.snapshot import load_snapshot
from epicontrol.utils.terminal import bar, get_icon, safe_print


class StoreStatsCommand(BaseCommand):
    name = "store-stats"
    description = "Show occupancy and value statistics of a store snapshot"

    def configure_parser(self, parser: ArgumentParser) -> None:
        parser.add_argument("snapshot", type=Path, help="Snapshot file written with save_store=true")
        parser.add_argument("--capacity", type=int, default=None, help="Capacity to report occupancy against")

    def execute(self, args: Namespace) -> int:
        store = load_snapshot(args.snapshot, capacity=args.capacity)
        total = sum(store.occupancy())

        safe_print(f"# {get_icon('🧠')} Store {args.snapshot.name}")
        print(f"Dimension: {store.dim}  Actions: {store.n_actions}  Capacity: {store.capacity}")
        print(f"Entries: {total}  Clock: {store.clock}")
        print()

        print("## By Action")
        for action, buffer in enumerate(store.buffers):
            count = len(buffer)
            line = f"  {action}: {bar(count / store.capacity)} {count}"
            if count:
                values = np.array([entry.value for entry in buffer.entries()])
                line += f"  values [{values.min():.3f}, {values.max():.3f}] mean {values.mean():.3f}"
            safe_print(line)

        if total == 0:
            print()
            safe_print(f"  {get_icon('⚠️')} Store is empty")
        return 0


def run(args: list[str]) -> int:
    return StoreStatsCommand().run(args)


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
