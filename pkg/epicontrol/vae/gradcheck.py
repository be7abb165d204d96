# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""Finite-difference check of the analytic ELBO gradients."""

import numpy as np

from epicontrol.embeddings.frame import ObservationFrame
from epicontrol.vae.model import PARAMETER_ORDER, Params, VaeModel, elbo_loss


def numerical_gradients(
    model: VaeModel,
    x: ObservationFrame | np.ndarray,
    noise: np.ndarray,
    step: float = 1e-5,
) -> Params:
    """Central differences of the loss with respect to every parameter entry."""
    shifted = model.copy()
    grads: Params = {}
    for name in PARAMETER_ORDER:
        block = shifted.params[name]
        grad = np.zeros_like(block)
        for index in np.ndindex(block.shape):
            original = block[index]
            block[index] = original + step
            plus, _ = elbo_loss(shifted, x, noise)
            block[index] = original - step
            minus, _ = elbo_loss(shifted, x, noise)
            block[index] = original
            grad[index] = (plus - minus) / (2.0 * step)
        grads[name] = grad
    return grads


def gradient_check(
    model: VaeModel,
    x: ObservationFrame | np.ndarray,
    noise: np.ndarray,
    step: float = 1e-5,
    floor: float = 1e-4,
) -> dict[str, float]:
    """
    Max relative error per parameter block.

    Relative error is |analytic - numeric| / max(|analytic|, |numeric|, floor),
    the floor keeping near-zero gradients from dominating.
    """
    _, analytic = elbo_loss(model, x, noise)
    numeric = numerical_gradients(model, x, noise, step)

    errors: dict[str, float] = {}
    for name in PARAMETER_ORDER:
        a, n = analytic[name], numeric[name]
        scale = np.maximum(np.maximum(np.abs(a), np.abs(n)), floor)
        errors[name] = float(np.max(np.abs(a - n) / scale))
    return errors
