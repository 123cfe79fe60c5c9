"""
Fourier layer.

forward_transform approximates the continuum integral f^(xi) = int f(v) e^{-i v.xi} dv by an
h^3-scaled DFT; the (-1)^k phase accounts for the lattice origin sitting at v = -L.
"""

from __future__ import annotations

import numpy as np
import scipy.fft

from boltzmann_smoothing import config
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution, Spectrum, VelocityGrid


def raw_forward(values: np.ndarray, axes: tuple[int, ...] = (-3, -2, -1)) -> np.ndarray:
    return scipy.fft.fftn(values, axes=axes, workers=config.fft_workers())


def raw_inverse(coefficients: np.ndarray, axes: tuple[int, ...] = (-3, -2, -1)) -> np.ndarray:
    return scipy.fft.ifftn(coefficients, axes=axes, workers=config.fft_workers())


def forward_transform(f: Distribution) -> Spectrum:
    """Spectrum of ``f`` under the integral normalization."""
    if not f.is_finite():
        raise ValueError("forward_transform: field has non-finite values")
    grid = f.grid
    coefficients = grid.cell_volume * grid.sign_pattern * raw_forward(f.values)
    return Spectrum(grid=grid, coefficients=coefficients)


def inverse_transform(spectrum: Spectrum, *, nonnegative: bool = False) -> Distribution:
    """Real part of the inverse of :func:`forward_transform`."""
    if not np.all(np.isfinite(spectrum.coefficients)):
        raise ValueError("inverse_transform: spectrum has non-finite coefficients")
    grid = spectrum.grid
    values = raw_inverse(spectrum.coefficients * grid.sign_pattern).real / grid.cell_volume
    return Distribution(grid=grid, values=values, nonnegative=nonnegative)


def zero_nyquist(spectrum: Spectrum) -> Spectrum:
    """Spectrum with the unpaired Nyquist modes set to zero."""
    out = spectrum.coefficients.copy()
    out[spectrum.grid.nyquist_mask] = 0.0
    return Spectrum(grid=spectrum.grid, coefficients=out)


def nyquist_filtered(f: Distribution) -> Distribution:
    """``f`` with its Nyquist modes removed (the field the spectral operators actually see)."""
    return inverse_transform(zero_nyquist(forward_transform(f)))


def apply_multiplier(f: Distribution, symbol: np.ndarray) -> Distribution:
    """inverse(symbol * forward(f)) for a real symbol given on the lattice in FFT order."""
    spectrum = forward_transform(f)
    return inverse_transform(spectrum.scaled(symbol))


def shift_phases(grid: VelocityGrid, displacements: np.ndarray) -> np.ndarray:
    """
    e^{i xi.d} for a batch of displacements.

    Args:
        grid: The lattice.
        displacements: Array of shape (B, 3).

    Returns:
        Complex array of shape (B, N, N, N) built from per-axis outer products.
    """
    d = np.atleast_2d(np.asarray(displacements, dtype=float))
    k = grid.frequency_axis
    ex = np.exp(1j * d[:, 0, None] * k[None, :])
    ey = np.exp(1j * d[:, 1, None] * k[None, :])
    ez = np.exp(1j * d[:, 2, None] * k[None, :])
    return ex[:, :, None, None] * ey[:, None, :, None] * ez[:, None, None, :]


def filtered_raw_spectrum(grid: VelocityGrid, values: np.ndarray) -> np.ndarray:
    """Raw DFT with the Nyquist modes zeroed; input to :func:`shifted_fields`."""
    raw = raw_forward(values)
    raw[grid.nyquist_mask] = 0.0
    return raw


def shifted_fields(
    grid: VelocityGrid, raw_hat: np.ndarray, displacements: np.ndarray
) -> np.ndarray:
    """
    Trigonometric interpolant evaluated at v + d for every lattice v and each displacement d.

    ``raw_hat`` must come from :func:`filtered_raw_spectrum` so the interpolant is real.
    Returns a real array of shape (B, N, N, N).
    """
    phases = shift_phases(grid, displacements)
    return raw_inverse(raw_hat[None, ...] * phases).real
