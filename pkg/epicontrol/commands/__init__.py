# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
CLI commands for epicontrol.

- run: Run an experiment or k-sweep and write CSVs
- train-vae: Pretrain a VAE and write a checkpoint
- store-stats: Summarize a store snapshot
"""

from epicontrol.commands.base import BaseCommand

__all__ = ["BaseCommand"]
