"""
Symbol evaluation and the mollifier operator M(D_v).
"""

from __future__ import annotations

import numpy as np

from boltzmann_smoothing.grid_ttc.tools.fourier_tools import apply_multiplier
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution
from boltzmann_smoothing.mollifier_ttc.tools.symbol_tools import MollifierSymbol


def symbol_value(xi: np.ndarray, M: MollifierSymbol) -> np.ndarray | float:
    """M(xi) for one frequency vector (shape (3,)) or a batch (shape (..., 3))."""
    arr = np.asarray(xi, dtype=float)
    if arr.shape[-1:] != (3,):
        raise ValueError(f"frequency vectors need a trailing axis of length 3, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("symbol_value needs finite frequencies")
    value = M.evaluate(np.linalg.norm(arr, axis=-1))
    return float(value) if value.ndim == 0 else value


def apply_mollifier(f: Distribution, M: MollifierSymbol) -> Distribution:
    """M(D_v) f through the Fourier layer."""
    M.validate()
    if M.is_identity:
        return f.with_values(f.values.copy())
    return apply_multiplier(f, M.on_lattice(f.grid))


def default_n0(a: float, gamma: float, s_prime: float | None = None) -> float:
    """
    Smallest n0 meeting the order constraint at lambda = a.

    a + (5 + gamma)/2, or a + (5 + gamma + 2 s' - 1)/2 for the s > 1/2 variant.
    """
    if s_prime is None:
        return a + 0.5 * (5.0 + gamma)
    return a + 0.5 * (5.0 + gamma + 2.0 * s_prime - 1.0)


def log_bracket_root(f: Distribution, M: MollifierSymbol) -> Distribution:
    """(log <D>)^{1/2} M(D) f, the field behind the log-weighted ledger term."""
    M.validate()
    grid = f.grid
    symbol = np.sqrt(np.log(grid.frequency_bracket)) * M.on_lattice(grid)
    return apply_multiplier(f, symbol)
