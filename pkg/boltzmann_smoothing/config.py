"""
Configuration Module

Centralizes process-level configuration constants and environment variable handling.
Run-level parameters (grid, cross section, schedule, ...) live in the INI run config
parsed by ``boltzmann_smoothing.runner``; this module only holds knobs that belong to
the process: threading, determinism, budgets and numerical floors.
This module follows the 12-factor app methodology for configuration.
"""

import os


def _get_env_int(name: str, default: int) -> int:
    """Parse an integer env var with a safe fallback."""
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(float(raw))
    except ValueError:
        return default


def _get_env_float(name: str, default: float) -> float:
    """Parse a float env var with a safe fallback."""
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        return default


def _get_env_bool(name: str, default: bool) -> bool:
    """Parse a boolean env var ("1", "true", "yes", "on")."""
    raw = os.environ.get(name)
    if raw is None:
        return default
    return raw.strip().lower() in {"1", "true", "yes", "on"}


# =============================================================================
# SYSTEM CONFIGURATION
# =============================================================================

TOTAL_CORES = os.cpu_count() or 1
"""Number of CPU cores available for parallel processing."""
WORKER_CORES = max(1, _get_env_int("BOLTZMANN_SMOOTHING_THREADS", max(1, TOTAL_CORES // 2)))
"""Number of workers handed to scipy.fft and the BLAS backends."""
DETERMINISTIC: bool = _get_env_bool("BOLTZMANN_SMOOTHING_DETERMINISTIC", True)
"""Force single-worker FFTs and exactly rounded scalar reductions (bit-identical reruns)."""
DEBUG: bool = _get_env_bool("BOLTZMANN_SMOOTHING_DEBUG", False)
"""Emit DEBUG log lines."""

os.environ.setdefault("OMP_NUM_THREADS", str(WORKER_CORES))
os.environ.setdefault("MKL_NUM_THREADS", str(WORKER_CORES))


def fft_workers() -> int:
    """Worker count for scipy.fft calls under the current determinism setting."""
    return 1 if DETERMINISTIC else WORKER_CORES


# =============================================================================
# NUMERICAL BUDGETS
# =============================================================================

OPERATION_BUDGET = _get_env_int("BOLTZMANN_SMOOTHING_BUDGET", 16**6 * 384)
"""Cap on pair x sigma operations for one trilinear sum or one velocity-side sum."""
KERNEL_MATRIX_MAX_ENTRIES = _get_env_int(
    "BOLTZMANN_SMOOTHING_KERNEL_MATRIX_ENTRIES", 4096 * 4096
)
"""Largest frequency kernel matrix kept in memory; larger ones are rebuilt row-chunk by chunk."""
PAIR_CHUNK_ENTRIES = _get_env_int("BOLTZMANN_SMOOTHING_PAIR_CHUNK", 1 << 21)
"""Number of (xi, xi_star) pairs processed per vectorized chunk."""
SIGMA_BATCH = _get_env_int("BOLTZMANN_SMOOTHING_SIGMA_BATCH", 128)
"""Number of sigma nodes shifted per batched inverse FFT in velocity-side sums."""


# =============================================================================
# NUMERICAL TOLERANCES AND DEFAULTS
# =============================================================================

NEGATIVITY_TOLERANCE = _get_env_float("BOLTZMANN_SMOOTHING_NEG_TOLERANCE", 0.0)
"""epsilon_neg: how far below zero a field flagged nonnegative may dip."""
ENTROPY_FLOOR = _get_env_float("BOLTZMANN_SMOOTHING_ENTROPY_FLOOR", 1e-30)
"""epsilon_f: log f is evaluated as log(max(f, epsilon_f))."""
DRIFT_FACTOR = _get_env_float("BOLTZMANN_SMOOTHING_DRIFT_FACTOR", 2.0)
"""A fitted constant is stable when its refinement trail varies by less than this factor."""
PHI_HAT_TABLE_SPACING = _get_env_float("BOLTZMANN_SMOOTHING_PHI_HAT_SPACING", 1e-3)
"""Spacing of the radial table caching the compact kinetic transform."""
PHI_HAT_NODES = _get_env_int("BOLTZMANN_SMOOTHING_PHI_HAT_NODES", 24)
"""Gauss nodes per radial panel for the compact kinetic transform."""

DEFAULT_THETA_MIN = 1e-3
"""Angular cutoff of the grazing singularity, always reported with the result."""
DEFAULT_THETA_PANELS = 12
"""Log-spaced theta panels between theta_min and pi/2."""
DEFAULT_NODES_PER_PANEL = 4
"""Gauss-Legendre nodes per theta panel."""
DEFAULT_AZIMUTH_NODES = 8
"""Uniform azimuthal nodes per theta node."""
DEFAULT_TRACKER_DELTAS: tuple[float, ...] = (1.0, 1e-1, 1e-2, 1e-3, 0.0)
"""Delta set used by the regularity tracker."""


# =============================================================================
# OUTPUT
# =============================================================================

OUTPUT_DIR = os.environ.get("BOLTZMANN_SMOOTHING_OUTPUT_DIR", "runs")
"""Default directory for run artifacts."""
FIELD_FORMAT_VERSION = 1
"""Version stamped into every field file header."""
CONFIG_SCHEMA_VERSION = 1
"""Version of the INI run-config schema."""
