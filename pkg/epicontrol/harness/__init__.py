# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Harness module: experiment configuration, multi-seed runs, k-sweeps and CSV output.
"""

from epicontrol.harness.config import ExperimentConfig, load_config, parse_config
from epicontrol.harness.runner import (
    AggregateCurve,
    ExperimentResult,
    RunRecord,
    RunRow,
    SeedFailure,
    SweepPoint,
    SweepResult,
    aggregate_curves,
    build_embedding,
    final_score,
    resolve_spec,
    run_experiment,
    run_k_sweep,
    run_seed,
)
from epicontrol.harness.metrics import (
    AGGREGATE_HEADER,
    RUN_HEADER,
    SWEEP_HEADER,
    format_number,
    write_metrics,
    write_result,
    write_sweep,
)

__all__ = [
    "ExperimentConfig",
    "load_config",
    "parse_config",
    "AggregateCurve",
    "ExperimentResult",
    "RunRecord",
    "RunRow",
    "SeedFailure",
    "SweepPoint",
    "SweepResult",
    "aggregate_curves",
    "build_embedding",
    "final_score",
    "resolve_spec",
    "run_experiment",
    "run_k_sweep",
    "run_seed",
    "AGGREGATE_HEADER",
    "RUN_HEADER",
    "SWEEP_HEADER",
    "format_number",
    "write_metrics",
    "write_result",
    "write_sweep",
]
