# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Agents module: the episodic controller and a tabular Q-learning baseline.
"""

from epicontrol.agents.config import AgentConfig, QLearningConfig
from epicontrol.agents.episodic import (
    EpisodeResult,
    EpisodeTrace,
    ReturnsVector,
    act,
    compute_returns,
    end_episode,
    evaluate_greedy,
    run_episode,
)
from epicontrol.agents.qlearning import ALPHA_GRID, LearningCurve, q_learning_baseline, tune_alpha

__all__ = [
    "AgentConfig",
    "QLearningConfig",
    "EpisodeResult",
    "EpisodeTrace",
    "ReturnsVector",
    "act",
    "compute_returns",
    "end_episode",
    "evaluate_greedy",
    "run_episode",
    "ALPHA_GRID",
    "LearningCurve",
    "q_learning_baseline",
    "tune_alpha",
]
