#!/usr/bin/env python3
# /// script
# dependencies = [
#   "numpy>=2.0",
#   "scipy>=1.13",
#   "rich>=13.0",
#   "python-dotenv>=1.0",
# ]
# ///
"""
Boltzmann Smoothing - Main Entry Point

Runs one subcommand of the boltzmann-smoothing command line against an INI run config.

Usage:
    python boltzmann-smoothing.py simulate --config run.ini
    python boltzmann-smoothing.py verify --inequality interp-3.6 --seed 3
    python boltzmann-smoothing.py smoothing-experiment --config rough.ini --output runs/rough
    python boltzmann-smoothing.py report runs/rough

Environment Variables:
    BOLTZMANN_SMOOTHING_THREADS - Worker count for scipy.fft and BLAS
    BOLTZMANN_SMOOTHING_DETERMINISTIC - Exactly rounded reductions, single-worker FFTs
    BOLTZMANN_SMOOTHING_BUDGET - Cap on pair x sigma operations per sum
    BOLTZMANN_SMOOTHING_OUTPUT_DIR - Default directory for run artifacts
    BOLTZMANN_SMOOTHING_DEBUG - Emit DEBUG log lines
    BOLTZMANN_SMOOTHING_AUTO_LOAD_ENV - Set to 0 to skip .env discovery
"""

import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from boltzmann_smoothing.__main__ import main  # noqa: E402

if __name__ == "__main__":
    main()
