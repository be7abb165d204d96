# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Logging infrastructure for epicontrol.

Daily log files with automatic cleanup.
Enable via ~/.epicontrol/config.json: {"logging": {"debug": true}}

Log files are created at ~/.epicontrol/logs/epicontrol_<date>.log
Every run appends to the same daily file, tagged with a run ID.
"""

import sys
import uuid
from datetime import datetime
from pathlib import Path
from typing import Optional

from loguru import logger

from epicontrol.core.config import get_config

# Run ID - generated once per process (for correlating log entries)
_run_id: Optional[str] = None
_configured: bool = False


def get_run_id() -> str:
    """Get or generate the current run ID."""
    global _run_id
    if _run_id is None:
        _run_id = uuid.uuid4().hex[:8]
    return _run_id


def get_log_dir() -> Path:
    """Get the log directory path."""
    return Path.home() / ".epicontrol" / "logs"


def get_daily_log_path() -> Path:
    """Get the log file path for today."""
    today = datetime.now().strftime("%Y-%m-%d")
    return get_log_dir() / f"epicontrol_{today}.log"


def cleanup_old_logs(retention_count: int) -> int:
    """
    Remove old log files, keeping only the most recent N days.

    Args:
        retention_count: Number of daily log files to keep

    Returns:
        Number of files deleted
    """
    log_dir = get_log_dir()
    if not log_dir.exists():
        return 0

    log_files = sorted(
        log_dir.glob("epicontrol_*.log"),
        key=lambda p: p.stat().st_mtime,
        reverse=True,
    )

    deleted = 0
    for old_file in log_files[retention_count:]:
        try:
            old_file.unlink()
            deleted += 1
        except OSError:
            pass

    return deleted


def configure_logging() -> None:
    """
    Configure loguru based on config settings.

    If debug is disabled, logging goes nowhere (null sink).
    If debug is enabled, logs append to daily file and INFO goes to stderr.
    """
    global _configured
    if _configured:
        return

    config = get_config()

    # Remove default stderr handler
    logger.remove()
    logger.configure(extra={"name": "epicontrol"})

    if config.logging.debug:
        log_dir = get_log_dir()
        log_dir.mkdir(parents=True, exist_ok=True)

        cleanup_old_logs(config.logging.log_retention_count)

        run_id = get_run_id()
        log_path = get_daily_log_path()
        logger.add(
            log_path,
            format="{time:HH:mm:ss} | {level: <7} | [" + run_id + "] {extra[name]}: {message}",
            level="DEBUG",
            rotation=None,  # One file per day
            retention=None,  # Handled by cleanup_old_logs
        )

        logger.add(
            sys.stderr,
            format="<dim>{time:HH:mm:ss}</dim> | <level>{level: <7}</level> | {message}",
            level="INFO",
            colorize=True,
        )

        logger.bind(name="epicontrol").info("epicontrol process started")
        logger.bind(name="epicontrol").debug(f"Log file: {log_path}")

    _configured = True


def get_logger(name: str = "epicontrol"):
    """
    Get a configured logger instance.

    Automatically configures logging on first call.

    Args:
        name: Logger channel name (memory, vae, harness, ...)

    Returns:
        Configured loguru logger
    """
    configure_logging()
    return logger.bind(name=name)


def log_run_start(task: str, embedding: str, seeds: list[int], episodes: int) -> None:
    """Log the start of an experiment."""
    log = get_logger("harness")
    log.info(f"Experiment: task={task} embedding={embedding} seeds={seeds} episodes={episodes}")


def log_episode(seed: int, episode: int, total_reward: float, steps: int, match_rate: Optional[float]) -> None:
    """Log one finished episode (debug level)."""
    log = get_logger("harness")
    rate = f"{match_rate:.3f}" if match_rate is not None else "n/a"
    log.debug(f"  seed {seed} episode {episode}: reward={total_reward} steps={steps} match={rate}")


def log_seed_failure(seed: int, episode: int, error: Exception) -> None:
    """Log that a seed's run was aborted."""
    log = get_logger("harness")
    log.error(f"Seed {seed} aborted at episode {episode}: {type(error).__name__}: {error}")


def log_vae_progress(step: int, loss: float) -> None:
    """Log VAE training progress."""
    log = get_logger("vae")
    log.debug(f"  step {step}: loss={loss:.4f}")


def log_error(context: str, error: Exception) -> None:
    """Log an error with context."""
    log = get_logger("errors")
    log.error(f"{context}: {type(error).__name__}: {error}")


def log_warning(message: str) -> None:
    """Log a warning."""
    log = get_logger("warnings")
    log.warning(message)
