# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
run command - Execute an experiment (or a k-sweep) and write its CSVs.

    epicontrol run --config <path> [--sweep-k a,b,c] [--out <dir>] [--seeds s1,s2,...]
"""

import sys
from argparse import ArgumentParser, ArgumentTypeError, Namespace
from pathlib import Path

from epicontrol.commands.base import BaseCommand
from epicontrol.core.config import get_config
from epicontrol.harness.config import load_config
from epicontrol.harness.metrics import write_result, write_sweep
from epicontrol.harness.runner import run_experiment, run_k_sweep
from epicontrol.utils.terminal import get_icon, safe_print


def int_list(text: str) -> list[int]:
    """argparse type for comma-separated integers."""
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from None


class RunCommand(BaseCommand):
    name = "run"
    description = "Run an episodic control experiment and write learning curves as CSV"

    def configure_parser(self, parser: ArgumentParser) -> None:
        parser.add_argument("--config", required=True, type=Path, help="Experiment config (key=value text)")
        parser.add_argument("--sweep-k", type=int_list, default=None, metavar="a,b,c", help="Run once per k value")
        parser.add_argument("--out", type=Path, default=None, metavar="<dir>", help="Output directory")
        parser.add_argument("--seeds", type=int_list, default=None, metavar="s1,s2", help="Override the seed list")

    def execute(self, args: Namespace) -> int:
        config = load_config(args.config).with_overrides(
            seeds=args.seeds,
            sweep_k=args.sweep_k,
            out=str(args.out) if args.out is not None else None,
        )
        out = Path(config.out or get_config().output.directory)

        if config.is_sweep:
            sweep = run_k_sweep(config)
            write_sweep(sweep, out)
            for point in sweep.points:
                safe_print(f"  {get_icon('🎯')} k={point.k}: final score {point.mean:.3f}")
            failures = [f for point in sweep.points for f in point.result.failures]
        else:
            result = run_experiment(config)
            write_result(result, out)
            if result.curve.mean:
                safe_print(f"  {get_icon('📈')} last episode mean reward {result.curve.mean[-1]:.3f}")
            failures = result.failures

        for failure in failures:
            safe_print(
                f"  {get_icon('⚠️')} seed {failure.seed} failed at episode {failure.episode}: {failure.error}",
                file=sys.stderr,
            )
        safe_print(f"{get_icon('✅')} Results written to {out}")
        return 0


def run(args: list[str]) -> int:
    return RunCommand().run(args)


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
