"""
Boltzmann Smoothing - Simple CLI Entry Point

A simple entry point for the boltzmann-smoothing command line.
For the full description of the subcommands, see boltzmann-smoothing.py.
"""

from boltzmann_smoothing.__main__ import main

if __name__ == "__main__":
    main()
