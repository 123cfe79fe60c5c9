"""
Velocity-side machinery: sampling fields off the lattice, relative-velocity offset rules and
the (u, sigma) pair iterator.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage
from scipy.special import roots_legendre

from boltzmann_smoothing import config
from boltzmann_smoothing.grid_ttc.tools.fourier_tools import (
    filtered_raw_spectrum,
    raw_inverse,
    shifted_fields,
)
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution, VelocityGrid
from boltzmann_smoothing.kernel_ttc.tasks.geometry_tasks import sigma_nodes
from boltzmann_smoothing.kernel_ttc.tasks.kinetic_tasks import kinetic_on_lattice, radial_rule
from boltzmann_smoothing.kernel_ttc.tools.cross_section_tools import CrossSection

FieldSource = Distribution | np.ndarray | Callable[[np.ndarray], np.ndarray]


class FieldSampler:
    """
    Evaluates a field at v + d for every lattice velocity v.

    Lattice fields are interpolated (trigonometric with the Nyquist modes removed, or periodic
    linear / cubic B-spline); callables are evaluated exactly at the displaced points.
    """

    def __init__(self, grid: VelocityGrid, source: FieldSource, method: str = "spectral") -> None:
        self.grid = grid
        self._fn: Callable[[np.ndarray], np.ndarray] | None = None
        self._raw_hat: np.ndarray | None = None
        self._coefficients: np.ndarray | None = None
        if callable(source) and not isinstance(source, np.ndarray | Distribution):
            self.method = "exact"
            self._fn = source
            self.values = np.broadcast_to(
                np.asarray(source(grid.velocities), dtype=float), grid.shape
            ).copy()
            return
        values = source.values if isinstance(source, Distribution) else np.asarray(source, float)
        values = values.reshape(grid.shape)
        self.method = method
        if method == "spectral":
            self._raw_hat = filtered_raw_spectrum(grid, values)
            self.values = raw_inverse(self._raw_hat).real
        elif method == "linear":
            self.values = values
            self._coefficients = values
        elif method == "cubic":
            self.values = values
            self._coefficients = ndimage.spline_filter(values, order=3, mode="grid-wrap")
        else:
            raise ValueError(f"unknown interpolation {method!r}")

    @property
    def raw_hat(self) -> np.ndarray:
        """Raw DFT of the sampled lattice values (Nyquist-free for the spectral method)."""
        if self._raw_hat is None:
            self._raw_hat = filtered_raw_spectrum(self.grid, self.values)
        return self._raw_hat

    @property
    def is_exact(self) -> bool:
        return self._fn is not None

    def at(self, displacements: np.ndarray) -> np.ndarray:
        """Field values at v + d, shape (B, N, N, N) for displacements of shape (B, 3)."""
        d = np.atleast_2d(np.asarray(displacements, dtype=float))
        if self._fn is not None:
            points = self.grid.velocities[:, None] + d.T[:, :, None, None, None]
            out = np.asarray(self._fn(points), dtype=float)
            return np.broadcast_to(out, (d.shape[0], *self.grid.shape))
        if self._raw_hat is not None and self.method == "spectral":
            return shifted_fields(self.grid, self._raw_hat, d)
        assert self._coefficients is not None
        order = 1 if self.method == "linear" else 3
        index = np.arange(self.grid.n_points, dtype=float)
        base = np.stack(np.meshgrid(index, index, index, indexing="ij"))
        coords = base[:, None] + (d.T / self.grid.spacing)[:, :, None, None, None]
        return ndimage.map_coordinates(
            self._coefficients,
            coords.reshape(3, -1),
            order=order,
            mode="grid-wrap",
            prefilter=False,
        ).reshape(d.shape[0], *self.grid.shape)

    def shifted_by_lattice(self, shift: np.ndarray) -> np.ndarray:
        """Exact values at v + h m for an integer vector m."""
        m = np.asarray(shift, dtype=np.int64)
        return np.roll(self.values, shift=tuple(int(-x) for x in m), axis=(0, 1, 2))


@dataclass(frozen=True, eq=False)
class OffsetRule:
    """Relative velocities u = v - v* with weights (volume element times kinetic factor)."""

    vectors: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    kind: str = "lattice"
    lattice_shifts: np.ndarray | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return int(self.weights.size)

    @property
    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.vectors, axis=1)


def lattice_offsets(
    grid: VelocityGrid, xs: CrossSection, part: str = "full", u_max: float | None = None
) -> OffsetRule:
    """
    Minimum-image lattice offsets 0 < |u| <= u_max (default L), components within +-(N/2 - 1).

    Weights are h^3 times the kinetic factor of ``part``; zero-weight offsets are dropped.
    """
    cap = grid.half_width if u_max is None else float(u_max)
    half = grid.n_points // 2
    m1 = np.arange(-half + 1, half)
    mesh = np.stack(np.meshgrid(m1, m1, m1, indexing="ij"), axis=-1).reshape(-1, 3)
    vectors = grid.spacing * mesh.astype(float)
    r = np.linalg.norm(vectors, axis=1)
    keep = (r > 0.0) & (r <= cap + 1e-12)
    weights = grid.cell_volume * kinetic_on_lattice(r[keep], xs, grid.spacing, part)
    nonzero = weights != 0.0
    return OffsetRule(
        vectors=vectors[keep][nonzero],
        weights=weights[nonzero],
        kind="lattice",
        lattice_shifts=mesh[keep][nonzero],
    )


def spherical_offsets(
    grid: VelocityGrid,
    xs: CrossSection,
    part: str = "compact",
    *,
    u_max: float | None = None,
    radial_nodes: int = 8,
    polar_nodes: int = 12,
    azimuth_nodes: int = 24,
) -> OffsetRule:
    """
    Continuous-u product rule: radial Gauss(-Jacobi) nodes times a Gauss-Legendre x uniform
    rule on the unit sphere, resolving the lattice's highest wavenumber.
    """
    rho_max = float(grid.frequency_norm.max())
    cap = grid.half_width if u_max is None else float(u_max)
    r, wr = radial_rule(xs, rho_max, part=part, r_max=cap, nodes=radial_nodes)
    mu, wmu = roots_legendre(polar_nodes)
    phi = 2.0 * math.pi * (np.arange(azimuth_nodes) + 0.5) / azimuth_nodes
    st = np.sqrt(1.0 - mu**2)
    directions = np.stack(
        [
            (st[:, None] * np.cos(phi)[None, :]).ravel(),
            (st[:, None] * np.sin(phi)[None, :]).ravel(),
            np.repeat(mu, azimuth_nodes),
        ],
        axis=1,
    )
    wdir = np.repeat(wmu, azimuth_nodes) * (2.0 * math.pi / azimuth_nodes)
    vectors = (r[:, None, None] * directions[None, :, :]).reshape(-1, 3)
    weights = (wr[:, None] * wdir[None, :]).ravel()
    keep = weights != 0.0
    return OffsetRule(vectors=vectors[keep], weights=weights[keep], kind="spherical")


def trig_sum(grid: VelocityGrid, amplitudes: np.ndarray, displacements: np.ndarray) -> np.ndarray:
    """
    sum_k A_k exp(i xi_k . d) for each displacement d, shape (n,).

    The phase factorizes per axis, so the sum is a matrix product over the last axis followed by
    two small contractions.
    """
    d = np.atleast_2d(np.asarray(displacements, dtype=float))
    n = grid.n_points
    k = grid.frequency_axis
    ex = np.exp(1j * d[:, 0, None] * k[None, :])
    ey = np.exp(1j * d[:, 1, None] * k[None, :])
    ez = np.exp(1j * d[:, 2, None] * k[None, :])
    t1 = (amplitudes.reshape(n * n, n) @ ez.T).reshape(n, n, -1)
    t2 = np.einsum("abq,qb->aq", t1, ey)
    return np.einsum("aq,qa->q", t2, ex)


@dataclass(frozen=True, eq=False)
class PairChunk:
    """A block of (u, sigma) pairs sharing the offsets ``vectors``."""

    start: int
    vectors: np.ndarray
    owner: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return int(self.weights.size)


def iter_pair_chunks(
    offsets: OffsetRule, xs: CrossSection, batch: int | None = None
) -> Iterator[PairChunk]:
    """
    Iterate over all (u, sigma) pairs.

    With u = v - v*, the displacements are d1 = v' - v = (|u| sigma - u)/2 and
    d2 = v'* - v = -(u + |u| sigma)/2; sigma is taken in the frame of u, so theta is the
    deviation angle. Pair weights are the offset weight times w_sigma b(theta).
    """
    size = config.SIGMA_BATCH if batch is None else int(batch)
    per_u = xs.rule.size
    step = max(1, size // max(1, per_u))
    sigma_weights = xs.sigma_weights
    for start in range(0, offsets.size, step):
        us = offsets.vectors[start : start + step]
        r = np.linalg.norm(us, axis=1)
        sig = sigma_nodes(us, xs.rule)
        scaled = r[:, None, None] * sig
        d1 = 0.5 * (scaled - us[:, None, :])
        d2 = -0.5 * (us[:, None, :] + scaled)
        weights = offsets.weights[start : start + step, None] * sigma_weights[None, :]
        yield PairChunk(
            start=start,
            vectors=us,
            owner=np.repeat(np.arange(us.shape[0]), per_u),
            d1=d1.reshape(-1, 3),
            d2=d2.reshape(-1, 3),
            weights=weights.ravel(),
        )


def pair_slices(count: int, batch: int | None = None) -> Iterator[slice]:
    """Split ``count`` pairs into slices of at most SIGMA_BATCH."""
    size = config.SIGMA_BATCH if batch is None else int(batch)
    for start in range(0, count, max(1, size)):
        yield slice(start, min(start + size, count))
