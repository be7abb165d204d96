# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""RMSProp optimizer over VAE parameter blocks."""

from dataclasses import dataclass, field

import numpy as np

from epicontrol.core.errors import NumericalFailureError, RejectedInputError

Params = dict[str, np.ndarray]


@dataclass
class RmsPropState:
    """Running mean of squared gradients, one array per parameter block."""

    v: Params = field(default_factory=dict)
    lr: float = 1e-5
    rho: float = 0.9
    eps: float = 1e-8

    @classmethod
    def zeros_like(cls, params: Params, lr: float = 1e-5, rho: float = 0.9, eps: float = 1e-8) -> "RmsPropState":
        if lr <= 0:
            raise RejectedInputError("lr", f"learning rate must be positive, got {lr}")
        if not 0.0 <= rho < 1.0:
            raise RejectedInputError("rho", f"decay must be in [0, 1), got {rho}")
        return cls(v={n: np.zeros_like(p) for n, p in params.items()}, lr=lr, rho=rho, eps=eps)


def rmsprop_step(state: RmsPropState, params: Params, grads: Params) -> tuple[Params, RmsPropState]:
    """
    One update: v <- rho*v + (1-rho)*g^2, theta <- theta - lr*g/sqrt(v+eps).

    Returns new parameter and state dicts; the inputs are left untouched.

    Raises:
        NumericalFailureError: If any gradient entry is NaN or infinite
    """
    if grads.keys() != params.keys():
        raise RejectedInputError("grads", "gradient blocks do not match parameter blocks")

    new_v: Params = {}
    new_params: Params = {}
    for name, theta in params.items():
        g = np.asarray(grads[name], dtype=np.float64)
        if g.shape != theta.shape:
            raise RejectedInputError("grads", f"block '{name}' has shape {g.shape}, expected {theta.shape}")
        if not np.all(np.isfinite(g)):
            raise NumericalFailureError(name, "gradient is not finite")
        v = state.rho * state.v.get(name, np.zeros_like(theta)) + (1.0 - state.rho) * g**2
        new_v[name] = v
        new_params[name] = theta - state.lr * g / np.sqrt(v + state.eps)

    return new_params, RmsPropState(v=new_v, lr=state.lr, rho=state.rho, eps=state.eps)
