# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
Dense variational autoencoder with hand-derived gradients.

Encoder: x (D) -> ReLU dense (H) -> linear (2L) = [mu_z, logstd_z]
Decoder: z (L) -> ReLU dense (H) -> linear (2D) = [mu_x, logstd_x]

Posterior, prior and likelihood are diagonal Gaussians; the prior is a
standard normal. The likelihood standard deviation is clamped from below
at `sigma_floor`; the clamp passes no gradient on its flat branch.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from epicontrol.core.errors import NumericalFailureError, RejectedInputError
from epicontrol.core.types import Embedding
from epicontrol.embeddings.frame import ObservationFrame

SIGMA_FLOOR = 0.05
LOG_2PI = math.log(2.0 * math.pi)

# Declared parameter order (checkpoints and gradient dicts follow it)
PARAMETER_ORDER = ("enc_w1", "enc_b1", "enc_w2", "enc_b2", "dec_w1", "dec_b1", "dec_w2", "dec_b2")

Params = dict[str, np.ndarray]


def parameter_shapes(D: int, H: int, L: int) -> dict[str, tuple[int, ...]]:
    """Shape of every parameter block for a (D, H, L) model."""
    return {
        "enc_w1": (H, D),
        "enc_b1": (H,),
        "enc_w2": (2 * L, H),
        "enc_b2": (2 * L,),
        "dec_w1": (H, L),
        "dec_b1": (H,),
        "dec_w2": (2 * D, H),
        "dec_b2": (2 * D,),
    }


@dataclass(eq=False)
class VaeModel:
    """VAE parameters plus the dimensions they imply."""

    D: int
    H: int
    L: int
    params: Params = field(default_factory=dict)
    sigma_floor: float = SIGMA_FLOOR

    def __post_init__(self):
        for name, shape in parameter_shapes(self.D, self.H, self.L).items():
            if name not in self.params:
                raise RejectedInputError("params", f"missing block '{name}'")
            if self.params[name].shape != shape:
                raise RejectedInputError("params", f"block '{name}' has shape {self.params[name].shape}, expected {shape}")

    @classmethod
    def zeros(cls, D: int, H: int, L: int) -> "VaeModel":
        """All-zero network (encodes everything to mu=0, logstd=0)."""
        return cls(D=D, H=H, L=L, params={n: np.zeros(s) for n, s in parameter_shapes(D, H, L).items()})

    @classmethod
    def init(cls, D: int, H: int, L: int, seed: int) -> "VaeModel":
        """
        Seeded initialization.

        ReLU layers get He-normal weights, output layers 1/sqrt(fan_in)
        normal weights; biases start at zero.
        """
        rng = np.random.Generator(np.random.PCG64(seed))
        params: Params = {}
        for name, shape in parameter_shapes(D, H, L).items():
            if len(shape) == 1:
                params[name] = np.zeros(shape)
                continue
            fan_in = shape[1]
            scale = math.sqrt(2.0 / fan_in) if name.endswith("w1") else math.sqrt(1.0 / fan_in)
            params[name] = rng.standard_normal(shape) * scale
        return cls(D=D, H=H, L=L, params=params)

    def copy(self) -> "VaeModel":
        return VaeModel(
            D=self.D,
            H=self.H,
            L=self.L,
            params={n: p.copy() for n, p in self.params.items()},
            sigma_floor=self.sigma_floor,
        )


def encode(model: VaeModel, x: ObservationFrame | np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Posterior mean and log-standard-deviation for one observation."""
    vector = _check_input(model, x)
    p = model.params
    hidden = np.maximum(p["enc_w1"] @ vector + p["enc_b1"], 0.0)
    out = p["enc_w2"] @ hidden + p["enc_b2"]
    return out[: model.L], out[model.L :]


def decode(model: VaeModel, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Likelihood mean and floored standard deviation for one latent."""
    z = np.asarray(z, dtype=np.float64)
    if z.shape != (model.L,):
        raise RejectedInputError("z", f"expected shape ({model.L},), got {z.shape}")
    p = model.params
    hidden = np.maximum(p["dec_w1"] @ z + p["dec_b1"], 0.0)
    out = p["dec_w2"] @ hidden + p["dec_b2"]
    sigma = np.maximum(np.exp(out[model.D :]), model.sigma_floor)
    return out[: model.D], sigma


def sample_latent(mu_z: np.ndarray, logstd_z: np.ndarray, noise: np.ndarray) -> np.ndarray:
    """Reparameterized draw z = mu + exp(logstd) * noise."""
    mu_z, logstd_z, noise = (np.asarray(v, dtype=np.float64) for v in (mu_z, logstd_z, noise))
    if not mu_z.shape == logstd_z.shape == noise.shape:
        raise RejectedInputError("noise", f"shapes differ: {mu_z.shape}, {logstd_z.shape}, {noise.shape}")
    return mu_z + np.exp(logstd_z) * noise


def kl_term(mu_z: np.ndarray, logstd_z: np.ndarray) -> float:
    """KL(N(mu, sigma^2) || N(0, I)) in closed form."""
    mu_z = np.asarray(mu_z, dtype=np.float64)
    logstd_z = np.asarray(logstd_z, dtype=np.float64)
    if mu_z.shape != logstd_z.shape:
        raise RejectedInputError("logstd_z", f"shape {logstd_z.shape} differs from mu_z {mu_z.shape}")
    if not (np.all(np.isfinite(mu_z)) and np.all(np.isfinite(logstd_z))):
        raise RejectedInputError("mu_z/logstd_z", "non-finite posterior parameters")
    return float(0.5 * np.sum(mu_z**2 + np.exp(2.0 * logstd_z) - 1.0 - 2.0 * logstd_z))


def recon_nll(model: VaeModel, x: ObservationFrame | np.ndarray, z: np.ndarray) -> float:
    """Gaussian negative log-likelihood of x under the decoder at z."""
    vector = _check_input(model, x)
    mu_x, sigma_x = decode(model, z)
    return float(np.sum(0.5 * LOG_2PI + np.log(sigma_x) + (vector - mu_x) ** 2 / (2.0 * sigma_x**2)))


def elbo_loss(model: VaeModel, x: ObservationFrame | np.ndarray, noise: np.ndarray) -> tuple[float, Params]:
    """
    Single-sample negative ELBO (KL + reconstruction NLL) and its gradients.

    Raises:
        NumericalFailureError: If the loss is not finite
    """
    vector = _check_input(model, x)
    noise = np.asarray(noise, dtype=np.float64)
    if noise.shape != (model.L,):
        raise RejectedInputError("noise", f"expected shape ({model.L},), got {noise.shape}")
    return elbo_batch(model, vector[None, :], noise[None, :])


def elbo_batch(model: VaeModel, X: np.ndarray, noise: np.ndarray) -> tuple[float, Params]:
    """
    Mean single-sample negative ELBO over a minibatch, with gradients.

    Args:
        model: VAE
        X: (B, D) observations
        noise: (B, L) standard-normal draws, one per datapoint

    Returns:
        (mean loss, gradient per parameter block)
    """
    p = model.params
    D, L = model.D, model.L
    B = X.shape[0]
    if X.shape != (B, D) or noise.shape != (B, L):
        raise RejectedInputError("X/noise", f"expected ({B}, {D}) and ({B}, {L}), got {X.shape} and {noise.shape}")

    with np.errstate(over="ignore", invalid="ignore"):
        # Encoder
        a1 = X @ p["enc_w1"].T + p["enc_b1"]
        h1 = np.maximum(a1, 0.0)
        enc_out = h1 @ p["enc_w2"].T + p["enc_b2"]
        mu_z, logstd_z = enc_out[:, :L], enc_out[:, L:]
        std_z = np.exp(logstd_z)
        z = mu_z + std_z * noise

        # Decoder
        a2 = z @ p["dec_w1"].T + p["dec_b1"]
        h2 = np.maximum(a2, 0.0)
        dec_out = h2 @ p["dec_w2"].T + p["dec_b2"]
        mu_x, logstd_x = dec_out[:, :D], dec_out[:, D:]
        raw_sigma = np.exp(logstd_x)
        active = raw_sigma > model.sigma_floor
        sigma_x = np.where(active, raw_sigma, model.sigma_floor)

        residual = X - mu_x
        kl = 0.5 * np.sum(mu_z**2 + std_z**2 - 1.0 - 2.0 * logstd_z, axis=1)
        nll = np.sum(0.5 * LOG_2PI + np.log(sigma_x) + residual**2 / (2.0 * sigma_x**2), axis=1)
        loss = float(np.mean(kl + nll))

    if not math.isfinite(loss):
        raise NumericalFailureError(_offending_block(model, enc_out, dec_out), f"loss is {loss}")

    # Backward pass, scaled for the batch mean
    d_mu_x = -residual / sigma_x**2
    d_logstd_x = np.where(active, 1.0 - residual**2 / sigma_x**2, 0.0)
    d_dec_out = np.concatenate([d_mu_x, d_logstd_x], axis=1) / B

    grads: Params = {}
    grads["dec_w2"] = d_dec_out.T @ h2
    grads["dec_b2"] = d_dec_out.sum(axis=0)
    d_a2 = (d_dec_out @ p["dec_w2"]) * (a2 > 0.0)
    grads["dec_w1"] = d_a2.T @ z
    grads["dec_b1"] = d_a2.sum(axis=0)
    d_z = d_a2 @ p["dec_w1"]

    d_mu_z = d_z + mu_z / B
    d_logstd_z = d_z * noise * std_z + (std_z**2 - 1.0) / B
    d_enc_out = np.concatenate([d_mu_z, d_logstd_z], axis=1)

    grads["enc_w2"] = d_enc_out.T @ h1
    grads["enc_b2"] = d_enc_out.sum(axis=0)
    d_a1 = (d_enc_out @ p["enc_w2"]) * (a1 > 0.0)
    grads["enc_w1"] = d_a1.T @ X
    grads["enc_b1"] = d_a1.sum(axis=0)

    return loss, {name: grads[name] for name in PARAMETER_ORDER}


def vae_features(model: VaeModel, x: ObservationFrame | np.ndarray) -> Embedding:
    """State features: posterior mean followed by posterior log-std (2L values)."""
    mu_z, logstd_z = encode(model, x)
    return np.concatenate([mu_z, logstd_z])


def _check_input(model: VaeModel, x: ObservationFrame | np.ndarray) -> np.ndarray:
    vector = x.pixels if isinstance(x, ObservationFrame) else np.asarray(x, dtype=np.float64).ravel()
    if vector.shape[0] != model.D:
        raise RejectedInputError("x", f"expected dimension {model.D}, got {vector.shape[0]}")
    return vector


def _offending_block(model: VaeModel, enc_out: np.ndarray, dec_out: np.ndarray) -> str:
    for name in PARAMETER_ORDER:
        if not np.all(np.isfinite(model.params[name])):
            return name
    if not np.all(np.isfinite(enc_out)):
        return "enc_w2"
    return "dec_w2" if not np.all(np.isfinite(dec_out)) else "dec_b2"


def init_model(D: int, H: int, L: int, seed: int) -> VaeModel:
    """Seeded VAE initialization."""
    return VaeModel.init(D, H, L, seed)
