# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
VAE module: a dense variational autoencoder trained on environment frames.

The posterior mean and log-std of a trained model serve as state features.
"""

from epicontrol.vae.model import (
    LOG_2PI,
    PARAMETER_ORDER,
    SIGMA_FLOOR,
    VaeModel,
    decode,
    elbo_batch,
    elbo_loss,
    encode,
    init_model,
    kl_term,
    parameter_shapes,
    recon_nll,
    sample_latent,
    vae_features,
)
from epicontrol.vae.optim import RmsPropState, rmsprop_step
from epicontrol.vae.gradcheck import gradient_check, numerical_gradients
from epicontrol.vae.checkpoint import load_checkpoint, save_checkpoint
from epicontrol.vae.training import TrainingCorpus, TrainingLog, collect_corpus, train

__all__ = [
    "LOG_2PI",
    "PARAMETER_ORDER",
    "SIGMA_FLOOR",
    "VaeModel",
    "decode",
    "elbo_batch",
    "elbo_loss",
    "encode",
    "kl_term",
    "parameter_shapes",
    "recon_nll",
    "sample_latent",
    "vae_features",
    "RmsPropState",
    "rmsprop_step",
    "gradient_check",
    "numerical_gradients",
    "load_checkpoint",
    "save_checkpoint",
    "TrainingCorpus",
    "TrainingLog",
    "collect_corpus",
    "train",
    "init_model",
]
