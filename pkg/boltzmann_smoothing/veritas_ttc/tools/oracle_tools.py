"""
Closed-form oracles: the BKW profile, moment relaxation for Maxwellian molecules and the
regime taxonomy of (gamma, s).
"""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate

from boltzmann_smoothing.grid_ttc.tasks.quadrature_tasks import Weight, quadrature
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution, VelocityGrid
from boltzmann_smoothing.kernel_ttc.tools.cross_section_tools import HALF_PI, CrossSection

BKW_MIN_K = 0.6
"""Smallest shape parameter for which the BKW profile is nonnegative."""


def angular_relaxation_constant(xs: CrossSection) -> float:
    """beta = 2 pi int_{theta_min}^{pi/2} sin^3(theta) b(theta) d theta (adaptive quadrature)."""

    def integrand(theta: float) -> float:
        return math.sin(theta) ** 3 * float(xs.b(np.array([theta]))[0])

    value, _ = integrate.quad(integrand, xs.rule.theta_min, HALF_PI, limit=200)
    return 2.0 * math.pi * value


def bkw_shape(t: float, beta: float, density: float = 1.0, k0: float = BKW_MIN_K) -> float:
    """K(t) = 1 - (1 - K0) exp(-beta rho t / 4)."""
    if not BKW_MIN_K <= k0 <= 1.0:
        raise ValueError(f"BKW shape K0={k0} must lie in [{BKW_MIN_K}, 1]")
    return 1.0 - (1.0 - k0) * math.exp(-0.25 * beta * density * t)


def bkw_profile(
    grid: VelocityGrid, K: float, *, density: float = 1.0, temperature: float = 1.0
) -> Distribution:
    """
    rho (2 pi K T)^{-3/2} exp(-|v|^2/(2 K T)) [(5K - 3)/(2K) + (1 - K)|v|^2/(2 K^2 T)].
    """
    if not BKW_MIN_K <= K <= 1.0:
        raise ValueError(f"BKW shape K={K} must lie in [{BKW_MIN_K}, 1]")
    r2 = grid.speed**2
    kt = K * temperature
    gauss = density * (2.0 * math.pi * kt) ** -1.5 * np.exp(-0.5 * r2 / kt)
    poly = (5.0 * K - 3.0) / (2.0 * K) + (1.0 - K) * r2 / (2.0 * K * kt)
    return Distribution(grid=grid, values=gauss * poly, nonnegative=True, label=f"bkw[K={K:g}]")


def bkw_fourth_moment(K: float, *, density: float = 1.0, temperature: float = 1.0) -> float:
    """int |v|^4 f = 15 rho T^2 K (2 - K)."""
    return 15.0 * density * temperature**2 * K * (2.0 - K)


def fourth_moment_rate(f: Distribution, xs: CrossSection) -> float:
    """
    dM4/dt for Maxwellian molecules (gamma = 0):
        (beta/2) (-rho M4 + 2 E2^2 - sum_ij P_ij^2),
    with M4 = int |v|^4 f, E2 = int |v|^2 f and P_ij = int v_i v_j f.
    """
    if xs.gamma != 0.0:
        raise ValueError("fourth_moment_rate holds for gamma = 0 only")
    beta = angular_relaxation_constant(xs)
    v = f.grid.velocities
    rho = quadrature(f, "one")
    m4 = quadrature(f, Weight("speed_power", ell=4.0))
    e2 = quadrature(f, "speed_squared")
    cell = f.grid.cell_volume
    p2 = 0.0
    for i in range(3):
        for j in range(3):
            p2 += (cell * float(np.sum(v[i] * v[j] * f.values))) ** 2
    return 0.5 * beta * (-rho * m4 + 2.0 * e2 * e2 - p2)


def fourth_moment_relaxation_rate(xs: CrossSection, density: float = 1.0) -> float:
    """Decay rate beta rho / 2 of M4 - 5 E2^2 / (3 rho) for isotropic data."""
    return 0.5 * angular_relaxation_constant(xs) * density


def regime_tag(gamma: float, s: float) -> str:
    """
    hard: gamma > 0; moderately-soft: 0 >= gamma > max(-2s, -1);
    very-soft: -1 >= gamma > -2s; outside otherwise.
    """
    if gamma > 0.0:
        return "hard"
    if gamma > max(-2.0 * s, -1.0):
        return "moderately-soft"
    if -1.0 >= gamma > -2.0 * s:
        return "very-soft"
    return "outside"


def regime_tags(gamma: float, s: float) -> tuple[str, ...]:
    """Primary tag plus ``hard-mild`` for gamma > 0, 0 < s < 1/2."""
    tags = [regime_tag(gamma, s)]
    if gamma > 0.0 and 0.0 < s < 0.5:
        tags.append("hard-mild")
    return tuple(tags)
