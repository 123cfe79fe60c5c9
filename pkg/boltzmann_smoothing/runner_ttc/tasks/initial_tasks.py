"""
Initial data built from the [initial] section.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
from scipy import ndimage

from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution, VelocityGrid
from boltzmann_smoothing.kernel_ttc.tools.cross_section_tools import CrossSection
from boltzmann_smoothing.runner_ttc.tools.run_config_tools import InitialSection
from boltzmann_smoothing.veritas_ttc.tools.oracle_tools import (
    angular_relaxation_constant,
    bkw_profile,
    bkw_shape,
)

InitialBuilder = Callable[[VelocityGrid, InitialSection, CrossSection], np.ndarray]


def _gaussian(
    grid: VelocityGrid, density: float, temperature: float, drift: np.ndarray
) -> np.ndarray:
    v = grid.velocities - drift.reshape(3, 1, 1, 1)
    r2 = np.sum(v**2, axis=0)
    return density * (2.0 * math.pi * temperature) ** -1.5 * np.exp(-0.5 * r2 / temperature)


def _normalized(grid: VelocityGrid, values: np.ndarray, density: float) -> np.ndarray:
    mass = grid.cell_volume * float(np.sum(values))
    if mass <= 0.0:
        raise ValueError("initial datum has no mass on this grid; enlarge radius or refine")
    return values * (density / mass)


def _maxwellian(grid: VelocityGrid, p: InitialSection, xs: CrossSection) -> np.ndarray:
    return _gaussian(grid, p.density, p.temperature, np.asarray(p.drift, dtype=float))


def _ball(grid: VelocityGrid, p: InitialSection, xs: CrossSection) -> np.ndarray:
    inside = (grid.speed <= p.radius).astype(float)
    return _normalized(grid, inside, p.density)


def _smoothed_ball(grid: VelocityGrid, p: InitialSection, xs: CrossSection) -> np.ndarray:
    """Ball indicator under a periodic Gaussian filter of width ``smoothing`` (velocity units)."""
    inside = (grid.speed <= p.radius).astype(float)
    sigma = p.smoothing / grid.spacing
    blurred = ndimage.gaussian_filter(inside, sigma=sigma, mode="wrap") if sigma > 0 else inside
    return _normalized(grid, np.clip(blurred, 0.0, None), p.density)


def _bimodal(grid: VelocityGrid, p: InitialSection, xs: CrossSection) -> np.ndarray:
    """Two Maxwellians at +drift and -drift, half the density each."""
    drift = np.asarray(p.drift, dtype=float)
    half = 0.5 * p.density
    return _gaussian(grid, half, p.temperature, drift) + _gaussian(
        grid, half, p.temperature, -drift
    )


def _bkw(grid: VelocityGrid, p: InitialSection, xs: CrossSection) -> np.ndarray:
    """BKW profile at ``bkw_time`` along the exact shape evolution from ``bkw_shape``."""
    K = p.bkw_shape
    if p.bkw_time > 0:
        beta = angular_relaxation_constant(xs)
        K = bkw_shape(p.bkw_time, beta, p.density, k0=p.bkw_shape)
    f = bkw_profile(grid, K, density=p.density, temperature=p.temperature)
    return f.values


def _perturbed_maxwellian(grid: VelocityGrid, p: InitialSection, xs: CrossSection) -> np.ndarray:
    """Maxwellian times 1 + amplitude cos(v1 / sqrt T); the cosine keeps it positive."""
    base = _maxwellian(grid, p, xs)
    ripple = 1.0 + p.amplitude * np.cos(grid.velocities[0] / math.sqrt(p.temperature))
    return _normalized(grid, base * ripple, p.density)


INITIAL_BUILDERS: dict[str, InitialBuilder] = {
    "maxwellian": _maxwellian,
    "ball": _ball,
    "smoothed_ball": _smoothed_ball,
    "bimodal": _bimodal,
    "bkw": _bkw,
    "perturbed_maxwellian": _perturbed_maxwellian,
}


def initial_datum(grid: VelocityGrid, p: InitialSection, xs: CrossSection) -> Distribution:
    """Sample the configured initial datum; every kind is nonnegative."""
    p.validate()
    builder = INITIAL_BUILDERS.get(p.kind)
    if builder is None:
        raise ValueError(f"unknown initial kind {p.kind!r}; known: {', '.join(INITIAL_BUILDERS)}")
    values = builder(grid, p, xs)
    return Distribution(grid=grid, values=values, nonnegative=True, label=f"initial[{p.kind}]")
