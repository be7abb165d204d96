# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Distance functions for embeddings.

Provides Euclidean distance, all-pairs distances and rank agreement
between two distance lists.
"""

import math
from typing import Sequence

import numpy as np
from scipy.spatial.distance import pdist
from scipy.stats import spearmanr


def euclidean_distance(a: Sequence[float] | np.ndarray, b: Sequence[float] | np.ndarray) -> float:
    """
    Calculate the Euclidean distance between two vectors.

    Args:
        a: First vector
        b: Second vector

    Returns:
        Distance (0 = identical)
    """
    if len(a) != len(b):
        raise ValueError(f"Vector dimensions don't match: {len(a)} vs {len(b)}")

    diff = np.asarray(a, dtype=np.float64) - np.asarray(b, dtype=np.float64)
    return float(math.sqrt(float(np.dot(diff, diff))))


def pairwise_distances(points: np.ndarray) -> np.ndarray:
    """
    Condensed all-pairs Euclidean distances.

    Args:
        points: (n, d) array, one point per row

    Returns:
        Length n*(n-1)/2 vector in scipy's condensed order
    """
    return pdist(np.asarray(points, dtype=np.float64), metric="euclidean")


def rank_correlation(a: np.ndarray, b: np.ndarray) -> float:
    """
    Spearman rank correlation between two equal-length lists.

    Returns nan when fewer than two values are given.
    """
    if len(a) != len(b):
        raise ValueError(f"Lengths don't match: {len(a)} vs {len(b)}")
    if len(a) < 2:
        return float("nan")
    return float(spearmanr(a, b)[0])
