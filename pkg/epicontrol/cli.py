# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""epicontrol CLI - Entry point for experiment commands."""

import sys


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the epicontrol CLI."""
    argv = sys.argv[1:] if argv is None else argv
    if not argv or "help" in argv[0]:
        print("epicontrol - model-free episodic control experiments")
        print("Usage: epicontrol <command> [args]")
        print("")
        print("Commands:")
        print("  run --config <path>    Run an experiment (--sweep-k, --out, --seeds)")
        print("  train-vae              Pretrain a VAE on random-policy frames")
        print("  store-stats <file>     Summarize a store snapshot")
        print("  version                Show installed version")
        return 0

    command = argv[0]
    args = argv[1:]

    match command:
        case "run":
            from epicontrol.commands.run import run

            return run(args)
        case "train-vae":
            from epicontrol.commands.train_vae import run

            return run(args)
        case "store-stats" | "stats":
            from epicontrol.commands.store_stats import run

            return run(args)
        case "version":
            from epicontrol import __version__

            print(f"epicontrol {__version__}")
            return 0
        case _:
            print(f"Unknown command: {command}")
            return 1


if __name__ == "__main__":
    sys.exit(main())
