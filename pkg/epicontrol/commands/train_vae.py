# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""
train-vae command - Pretrain a VAE on random-policy frames and save a checkpoint.
"""

import sys
from argparse import ArgumentParser, Namespace
from pathlib import Path

from epicontrol.commands.base import BaseCommand
from epicontrol.core.types import ObservationMode, StartMode, TaskTag
from epicontrol.envs.gridworld import GridWorld
from epicontrol.envs.spec import default_spec, load_spec
from epicontrol.utils.terminal import get_icon, safe_print
from epicontrol.vae.checkpoint import save_checkpoint
from epicontrol.vae.model import init_model
from epicontrol.vae.training import collect_corpus, train


class TrainVaeCommand(BaseCommand):
    name = "train-vae"
    description = "Collect frames under a random policy, train a VAE on them and write a checkpoint"

    def configure_parser(self, parser: ArgumentParser) -> None:
        parser.add_argument("--task", choices=[t.value for t in TaskTag], default=TaskTag.FORAGE.value)
        parser.add_argument("--start-mode", choices=[m.value for m in StartMode], default=StartMode.FIXED.value)
        parser.add_argument("--observation", choices=[m.value for m in ObservationMode], default="planes")
        parser.add_argument("--env-file", type=Path, default=None, help="Grid-world spec file (overrides --task)")
        parser.add_argument("--frames", type=int, default=2000, help="Corpus size")
        parser.add_argument("--steps", type=int, default=500, help="Minibatch updates")
        parser.add_argument("--batch", type=int, default=100, help="Minibatch size")
        parser.add_argument("--lr", type=float, default=1e-3, help="RMSProp learning rate")
        parser.add_argument("--hidden", type=int, default=64, help="Hidden units (H)")
        parser.add_argument("--latent", type=int, default=32, help="Latent dimension (L)")
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--out", type=Path, default=Path("vae.ckpt"), help="Checkpoint path")

    def execute(self, args: Namespace) -> int:
        if args.env_file is not None:
            spec = load_spec(args.env_file.read_text(encoding="utf-8"))
        else:
            spec = default_spec(TaskTag(args.task), StartMode(args.start_mode))
        observation = ObservationMode(args.observation)

        corpus = collect_corpus(spec, args.frames, args.seed, observation)
        D = GridWorld(spec, observation).observation_dim
        model = init_model(D, args.hidden, args.latent, args.seed)
        history = train(model, corpus, steps=args.steps, batch_size=args.batch, seed=args.seed, lr=args.lr)
        save_checkpoint(model, args.out)

        smoothed = history.smoothed()
        if len(smoothed):
            safe_print(f"  {get_icon('📈')} loss {smoothed[0]:.2f} -> {smoothed[-1]:.2f} over {args.steps} steps")
        safe_print(f"{get_icon('✅')} Checkpoint written to {args.out} (D={D}, H={args.hidden}, L={args.latent})")
        return 0


def run(args: list[str]) -> int:
    return TrainVaeCommand().run(args)


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
