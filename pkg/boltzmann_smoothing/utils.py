"""
Utility Functions

Shared utility functions for logging and exactly rounded reductions.
"""

import math
import sys
from typing import Any

import numpy as np

from boltzmann_smoothing import config


def log(message: str, level: str = "INFO") -> None:
    """
    Write a log message to stderr.

    Using stderr keeps logs separate from the JSON summaries printed on stdout.

    Args:
        message: The message to log
        level: Log level (INFO, WARN, ERROR, DEBUG)
    """
    if level == "DEBUG" and not config.DEBUG:
        return
    prefix = "[Smoothing]"
    if level != "INFO":
        prefix = f"[Smoothing:{level}]"
    sys.stderr.write(f"{prefix} {message}\n")
    sys.stderr.flush()


def log_run_table(title: str, rows: list[tuple[str, Any]]) -> None:
    """
    Display a run summary in an ASCII box on stderr.

    Args:
        title: Box title (subcommand and label)
        rows: (key, value) pairs shown one per line
    """
    width = max([len(title) + 4] + [len(f"{k}: {v}") + 4 for k, v in rows] + [40])
    lines = [f"[Smoothing] +{'-' * width}+", f"[Smoothing] | {title:<{width - 2}} |"]
    lines.append(f"[Smoothing] +{'-' * width}+")
    for key, value in rows:
        text = f"{key}: {value}"
        lines.append(f"[Smoothing] | {text:<{width - 2}} |")
    lines.append(f"[Smoothing] +{'-' * width}+")
    sys.stderr.write("\n".join(lines) + "\n")
    sys.stderr.flush()


def reduce_sum(values: np.ndarray) -> float:
    """
    Sum an array to a Python float.

    In deterministic mode the sum is exactly rounded (math.fsum), so the result does not
    depend on reduction order or thread count.
    """
    arr = np.asarray(values, dtype=float)
    if config.DETERMINISTIC:
        return math.fsum(arr.ravel().tolist())
    return float(np.sum(arr))


def reduce_complex_sum(values: np.ndarray) -> complex:
    """Complex counterpart of :func:`reduce_sum`."""
    arr = np.asarray(values, dtype=complex)
    return complex(reduce_sum(arr.real), reduce_sum(arr.imag))
