"""
Frequency-side evaluation of the compact part Q_c.

For Q_c(g, f) with g in the starred slot,
    Q_c^(xi) = (2L)^-3 sum_{xi*} K(xi, xi*) g^(xi*) f^(xi - xi*),
with xi - xi* wrapped onto the lattice and both xi, xi* restricted to the retained modes.
"""

from __future__ import annotations

import numpy as np

from boltzmann_smoothing.collision_ttc.tools.workspace_tools import CollisionWorkspace
from boltzmann_smoothing.grid_ttc.tools.fourier_tools import (
    forward_transform,
    inverse_transform,
    zero_nyquist,
)
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import (
    Distribution,
    Spectrum,
    check_same_grid,
)
from boltzmann_smoothing.kernel_ttc.tasks.kinetic_tasks import phi_c_hat_values
from boltzmann_smoothing.utils import reduce_complex_sum


def _check(ws: CollisionWorkspace, *spectra: Spectrum) -> None:
    check_same_grid(ws.grid, *(s.grid for s in spectra))


def _filtered_flat(spectrum: Spectrum) -> np.ndarray:
    return zero_nyquist(spectrum).coefficients.ravel()


def spectral_collision(
    starred: Spectrum,
    other: Spectrum,
    ws: CollisionWorkspace,
    *,
    commutator_symbol: np.ndarray | None = None,
) -> np.ndarray:
    """
    Q_c^ at the retained modes, shape (M,).

    With ``commutator_symbol`` (a real symbol on the full lattice) every term is multiplied by
    M(xi) - M(xi - xi*), giving the transform of M Q_c(g, f) - Q_c(g, M f).
    """
    _check(ws, starred, other)
    star = _filtered_flat(starred)[ws.mode_index]
    rest = _filtered_flat(other)
    symbol = None if commutator_symbol is None else np.asarray(commutator_symbol).ravel()
    out = np.empty(ws.mode_count, dtype=np.complex128)
    for rows, block in ws.kernel_blocks():
        diff = ws.difference_index(rows)
        terms = block * star[None, :] * rest[diff]
        if symbol is not None:
            factor = symbol[ws.mode_index[rows]][:, None] - symbol[diff]
            terms = terms * factor
        out[rows] = terms.sum(axis=1)
    return out / ws.grid.box_volume


def _pair_with(q_hat: np.ndarray, h: Spectrum, ws: CollisionWorkspace) -> float:
    h_flat = _filtered_flat(h)[ws.mode_index]
    return reduce_complex_sum(q_hat * np.conj(h_flat)).real / ws.grid.box_volume


def trilinear_qc(f: Spectrum, g: Spectrum, h: Spectrum, ws: CollisionWorkspace) -> float:
    """(Q_c(f, g), h) by the frequency double sum, f in the starred slot."""
    _check(ws, f, g, h)
    return _pair_with(spectral_collision(f, g, ws), h, ws)


def spectral_commutator(
    f: Spectrum, g: Spectrum, h: Spectrum, symbol: np.ndarray, ws: CollisionWorkspace
) -> float:
    """(M Q_c(f, g) - Q_c(f, M g), h) with the factor M(xi) - M(xi - xi*) inside the sum."""
    _check(ws, f, g, h)
    return _pair_with(spectral_collision(f, g, ws, commutator_symbol=symbol), h, ws)


def spectrum_on_lattice(values: np.ndarray, ws: CollisionWorkspace) -> Spectrum:
    """Embed retained-mode coefficients into a full lattice spectrum (zeros elsewhere)."""
    full = np.zeros(ws.grid.size, dtype=np.complex128)
    full[ws.mode_index] = values
    return Spectrum(grid=ws.grid, coefficients=full.reshape(ws.grid.shape))


def apply_qc(g: Distribution, f: Distribution, ws: CollisionWorkspace) -> Distribution:
    """Field Q_c(g, f) from the frequency double sum."""
    check_same_grid(ws.grid, g.grid, f.grid)
    q_hat = spectral_collision(forward_transform(g), forward_transform(f), ws)
    return inverse_transform(spectrum_on_lattice(q_hat, ws))


def spectral_loss(g: Distribution, f: Distribution, ws: CollisionWorkspace) -> Distribution:
    """
    Loss part of Q_c(g, f): f(v) (sum_sigma w b) (Phi_c * g)(v), restricted to the same
    retained modes as :func:`spectral_collision` so that gain = Q_c - loss is consistent.
    """
    check_same_grid(ws.grid, g.grid, f.grid)
    mask = ws.retained_mask
    kernel = phi_c_hat_values(ws.grid.frequency_norm, ws.xs) * mask
    convolution = inverse_transform(forward_transform(g).scaled(kernel))
    f_values = inverse_transform(zero_nyquist(forward_transform(f))).values
    total = float(np.sum(ws.xs.sigma_weights))
    product = Distribution(grid=ws.grid, values=total * f_values * convolution.values)
    return inverse_transform(forward_transform(product).scaled(mask))
