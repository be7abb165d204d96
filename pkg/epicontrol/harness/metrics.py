# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
CSV emission.

Files written under the output directory:
    seed_<s>.csv          episode,steps,frames,total_reward,match_rate,buffer_occupancy
    aggregate.csv         episode,mean_reward,sem_reward,n_seeds
    baseline_seed_<s>.csv episode,total_reward            (baseline runs)
    baseline_aggregate.csv episode,mean_reward,sem_reward,n_seeds
    failures.csv          seed,episode,error              (only when a seed failed)
    store_seed_<s>.txt    store snapshot                  (save_store)
    sweep.csv             k,final_score_mean,final_score_sem (sweeps, one k_<k>/ per value)

Floats are written with repr (shortest round-trip text), undefined values
as "nan", so identical inputs give byte-identical files.
"""

import csv
import math
from pathlib import Path
from typing import Iterable, Optional, Sequence

from epicontrol.core.errors import RejectedInputError
from epicontrol.harness.runner import AggregateCurve, ExperimentResult, RunRecord, SweepResult
from epicontrol.logging import get_logger
from epicontrol.memory.snapshot import save_snapshot

log = get_logger("harness")

RUN_HEADER = ("episode", "steps", "frames", "total_reward", "match_rate", "buffer_occupancy")
AGGREGATE_HEADER = ("episode", "mean_reward", "sem_reward", "n_seeds")
BASELINE_HEADER = ("episode", "total_reward")
FAILURE_HEADER = ("seed", "episode", "error")
SWEEP_HEADER = ("k", "final_score_mean", "final_score_sem")


def format_number(value: Optional[float | int]) -> str:
    """Decimal text for a CSV field; None and nan become "nan"."""
    if value is None:
        return "nan"
    if isinstance(value, int):
        return str(value)
    if math.isnan(value):
        return "nan"
    return repr(float(value))


def write_metrics(
    records: Sequence[RunRecord],
    curve: AggregateCurve,
    path: Path,
    baseline_curve: Optional[AggregateCurve] = None,
) -> list[Path]:
    """
    Write per-seed, aggregate, baseline and failure CSVs into `path`.

    Returns:
        The files written, in write order

    Raises:
        RejectedInputError: If there are no records
        OSError: If the directory cannot be written
    """
    if not records:
        raise RejectedInputError("records", "nothing to write")

    path.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    for record in records:
        rows = (
            (
                str(row.episode),
                str(row.steps),
                str(row.frames),
                format_number(row.total_reward),
                format_number(row.match_rate),
                ";".join(str(n) for n in row.occupancy),
            )
            for row in record.rows
        )
        written.append(_write_csv(path / f"seed_{record.seed}.csv", RUN_HEADER, rows))

        if record.store is not None:
            snapshot = path / f"store_seed_{record.seed}.txt"
            save_snapshot(record.store, snapshot)
            written.append(snapshot)

    written.append(_write_csv(path / "aggregate.csv", AGGREGATE_HEADER, _aggregate_rows(curve)))

    baselines = [r for r in records if r.baseline is not None]
    for record in baselines:
        assert record.baseline is not None
        rows = ((str(i), format_number(reward)) for i, reward in enumerate(record.baseline.rewards, start=1))
        written.append(_write_csv(path / f"baseline_seed_{record.seed}.csv", BASELINE_HEADER, rows))
    if baseline_curve is not None and baselines:
        written.append(_write_csv(path / "baseline_aggregate.csv", AGGREGATE_HEADER, _aggregate_rows(baseline_curve)))

    failures = [r.failure for r in records if r.failure is not None]
    if failures:
        rows = ((str(f.seed), str(f.episode), f.error) for f in failures)
        written.append(_write_csv(path / "failures.csv", FAILURE_HEADER, rows))

    log.info(f"Wrote {len(written)} files to {path}")
    return written


def write_result(result: ExperimentResult, path: Path) -> list[Path]:
    """write_metrics for a whole experiment result."""
    return write_metrics(result.records, result.curve, path, result.baseline_curve)


def write_sweep(sweep: SweepResult, path: Path) -> list[Path]:
    """One k_<k>/ directory per sweep value plus the final-score table."""
    if not sweep.points:
        raise RejectedInputError("sweep", "nothing to write")

    written: list[Path] = []
    for point in sweep.points:
        written.extend(write_result(point.result, path / f"k_{point.k}"))

    rows = ((str(p.k), format_number(p.mean), format_number(p.sem)) for p in sweep.points)
    written.append(_write_csv(path / "sweep.csv", SWEEP_HEADER, rows))
    return written


def _aggregate_rows(curve: AggregateCurve) -> Iterable[tuple[str, ...]]:
    for episode, mean, sem, n in zip(curve.episodes, curve.mean, curve.sem, curve.n_seeds):
        yield str(episode), format_number(mean), format_number(sem), str(n)


def _write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[str]]) -> Path:
    with path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path
