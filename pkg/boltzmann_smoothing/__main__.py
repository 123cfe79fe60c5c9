"""
Entry point for running as a module: python -m boltzmann_smoothing

Subcommands:
    simulate              Integrate the configured initial datum in time.
    collision-apply       Evaluate Q(g, f) for two field files.
    measure               Functionals of one field file.
    verify                Run one inequality check (--inequality <id>).
    smoothing-experiment  Simulate, track regularity and reduce to one verdict.
    report                Summarize finished run directories.

On startup, the nearest .env file (walked up from CWD) is loaded into
os.environ, but only for keys that aren't already set by the parent process,
so thread counts, budgets and the output directory can live next to the run
configs. Set BOLTZMANN_SMOOTHING_AUTO_LOAD_ENV=0 to disable .env discovery.
"""

import os
import sys

# Load .env BEFORE importing boltzmann_smoothing.config (which reads env at import time).
from boltzmann_smoothing.env_loader import load_env

if os.getenv("BOLTZMANN_SMOOTHING_AUTO_LOAD_ENV", "1").strip().lower() not in {
    "0",
    "false",
    "no",
    "off",
}:
    load_env()

from boltzmann_smoothing.runner import run_cli  # noqa: E402


def main() -> None:
    """Run one boltzmann-smoothing subcommand and exit with its status."""
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
