"""
Kinetic factor tasks: the split Phi_c + Phi_cbar, the radial transform of Phi_c and
lattice sampling of |z|^gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.special import roots_jacobi, roots_legendre

from boltzmann_smoothing import config
from boltzmann_smoothing.kernel_ttc.tools import state
from boltzmann_smoothing.kernel_ttc.tools.cross_section_tools import CrossSection, cutoff_bump
from boltzmann_smoothing.utils import log

_TABLE_CHUNK = 512


def _power(r: np.ndarray, gamma: float) -> np.ndarray:
    """r^gamma with the r = 0 convention: 0 for gamma > 0, 1 for gamma = 0, inf for gamma < 0."""
    r = np.asarray(r, dtype=float)
    positive = r > 0.0
    safe = np.where(positive, r, 1.0)
    at_origin = 0.0 if gamma > 0 else (1.0 if gamma == 0 else math.inf)
    return np.where(positive, safe**gamma, at_origin)


def kinetic_parts(r: np.ndarray, xs: CrossSection) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized (Phi_c, Phi_cbar) = (r^gamma phi(r), r^gamma (1 - phi(r)))."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("kinetic_split needs r >= 0")
    phi = cutoff_bump(r, xs.r_in, xs.r_out)
    full = _power(r, xs.gamma)
    with np.errstate(invalid="ignore"):
        compact = np.where(phi > 0.0, full * phi, 0.0)
        tail = np.where(phi < 1.0, np.where(r > 0.0, full, 0.0) * (1.0 - phi), 0.0)
    return compact, tail


def kinetic_split(r: float, xs: CrossSection) -> tuple[float, float]:
    """(Phi_c(r), Phi_cbar(r)); at r = 0 the compact part carries the full convention value."""
    if not r >= 0:
        raise ValueError(f"kinetic_split needs r >= 0, got {r}")
    compact, tail = kinetic_parts(np.array([r]), xs)
    return float(compact[0]), float(tail[0])


def cell_average_origin(spacing: float, gamma: float) -> float:
    """Mean of |z|^gamma over the ball of radius h/2: 3 (h/2)^gamma / (gamma + 3)."""
    if gamma <= -3.0:
        raise ValueError("cell average of |z|^gamma needs gamma > -3")
    return 3.0 * (0.5 * spacing) ** gamma / (gamma + 3.0)


def kinetic_on_lattice(
    r: np.ndarray, xs: CrossSection, spacing: float, part: str = "full"
) -> np.ndarray:
    """
    Kinetic factor at lattice separations.

    Coincident points (r = 0) get the cell-averaged value of r^gamma when gamma < 0.

    Args:
        r: Separations |v - v*| on the lattice.
        xs: Cross section.
        spacing: Lattice spacing h.
        part: "full", "compact" or "tail".
    """
    if part not in {"full", "compact", "tail"}:
        raise ValueError(f"unknown kinetic part {part!r}")
    r = np.asarray(r, dtype=float)
    compact, tail = kinetic_parts(r, xs)
    values = {"full": compact + tail, "compact": compact, "tail": tail}[part]
    origin = r == 0.0
    if xs.gamma < 0 and np.any(origin):
        # the part holding phi(0) = 1 carries the singularity
        carries_origin = part == "full" or (part == "compact") == xs.has_compact_part
        fill = cell_average_origin(spacing, xs.gamma) if carries_origin else 0.0
        values = np.where(origin, fill, values)
    return values


def _legendre_panels(lo: float, hi: float, width: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    xl, wl = roots_legendre(n)
    count = max(1, math.ceil((hi - lo) / width)) if math.isfinite(width) else 1
    edges = np.linspace(lo, hi, count + 1)
    left, right = edges[:-1, None], edges[1:, None]
    r = (0.5 * (right - left) * xl[None, :] + 0.5 * (right + left)).ravel()
    w = (0.5 * (right - left) * wl[None, :]).ravel()
    return r, w


def radial_rule(
    xs: CrossSection,
    rho_max: float,
    *,
    part: str = "compact",
    r_max: float | None = None,
    nodes: int | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Nodes and weights for int r^(gamma+2) Phi_part(r)/r^gamma g(r) dr, resolving oscillations
    of g up to frequency rho_max.

    The weight r^(gamma+2) near the origin is handled by Gauss-Jacobi; the rest by composite
    Gauss-Legendre panels no wider than pi / rho_max, split at the cutoff radii.

    Args:
        xs: Cross section.
        rho_max: Highest frequency to resolve.
        part: "compact" (r^gamma phi), "tail" (r^gamma (1 - phi)) or "full" (r^gamma).
        r_max: Outer radius for "tail"/"full" (required there).
        nodes: Gauss nodes per panel (default PHI_HAT_NODES).
    """
    n = int(nodes or config.PHI_HAT_NODES)
    beta = xs.gamma + 2.0
    width = math.pi / rho_max if rho_max > 0 else math.inf
    if part not in {"compact", "tail", "full"}:
        raise ValueError(f"unknown kinetic part {part!r}")
    if part == "compact":
        if not xs.has_compact_part:
            return np.zeros(0), np.zeros(0)
        origin_end, breaks = min(xs.r_in, width), [xs.r_in, xs.r_out]
    else:
        if r_max is None or r_max <= 0:
            raise ValueError(f"radial rule for part {part!r} needs r_max > 0")
        if part == "tail" and xs.has_compact_part:
            origin_end = None
            breaks = [xs.r_in] + [b for b in (xs.r_out, r_max) if xs.r_in < b <= r_max]
        else:
            part = "full"
            origin_end, breaks = min(r_max, width), [r_max]

    node_list: list[np.ndarray] = []
    weight_list: list[np.ndarray] = []
    if origin_end is not None:
        # r^(gamma+2) weight at the origin
        xj, wj = roots_jacobi(n, 0.0, beta)
        node_list.append(0.5 * origin_end * (1.0 + xj))
        weight_list.append((0.5 * origin_end) ** (beta + 1.0) * wj)
        breaks = [origin_end] + breaks
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        if hi <= lo:
            continue
        r, w = _legendre_panels(lo, hi, width, n)
        phi = cutoff_bump(r, xs.r_in, xs.r_out)
        factor = {"compact": phi, "tail": 1.0 - phi, "full": np.ones_like(r)}[part]
        node_list.append(r)
        weight_list.append(w * r**beta * factor)
    if not node_list:
        return np.zeros(0), np.zeros(0)
    return np.concatenate(node_list), np.concatenate(weight_list)


def phi_c_hat_direct(rho: np.ndarray, xs: CrossSection) -> np.ndarray:
    """4 pi int r^(gamma+2) phi(r) sinc(rho r) dr evaluated by quadrature (no table)."""
    rho = np.atleast_1d(np.asarray(rho, dtype=float))
    if xs.gamma <= -3.0:
        raise ValueError("phi_c_hat needs gamma > -3")
    if not xs.has_compact_part:
        return np.zeros_like(rho)
    out = np.empty_like(rho)
    order = np.argsort(rho)
    for start in range(0, rho.size, _TABLE_CHUNK):
        idx = order[start : start + _TABLE_CHUNK]
        r, w = radial_rule(xs, float(rho[idx].max()))
        # np.sinc(x) = sin(pi x) / (pi x)
        out[idx] = 4.0 * math.pi * (np.sinc(np.outer(rho[idx], r) / math.pi) @ w)
    return out


@dataclass(frozen=True, eq=False)
class RadialTable:
    """Cubic spline on a uniform radial grid, evaluated by direct cell indexing."""

    spacing: float
    coefficients: np.ndarray
    rho_max: float

    def __call__(self, rho: np.ndarray) -> np.ndarray:
        rho = np.asarray(rho, dtype=float)
        cell = np.minimum((rho / self.spacing).astype(np.int64), self.coefficients.shape[1] - 1)
        t = rho - cell * self.spacing
        c = self.coefficients
        return ((c[0, cell] * t + c[1, cell]) * t + c[2, cell]) * t + c[3, cell]


def _table_key(xs: CrossSection) -> tuple[float, ...]:
    return (xs.gamma, xs.r_in, xs.r_out, float(config.PHI_HAT_NODES), config.PHI_HAT_TABLE_SPACING)


def phi_c_hat_table(xs: CrossSection, rho_max: float) -> RadialTable:
    """Cached spline table of Phi_c^ covering [0, rho_max]."""
    key = _table_key(xs)
    cached = state.PHI_C_HAT_TABLES.get(key)
    if cached is not None and cached.rho_max >= rho_max:
        return cached
    spacing = config.PHI_HAT_TABLE_SPACING
    count = max(8, math.ceil(rho_max / spacing) + 1)
    rho = spacing * np.arange(count + 1)
    log(f"🧮 Building Phi_c^ table: {rho.size} radii up to {rho[-1]:.2f}", "DEBUG")
    spline = CubicSpline(rho, phi_c_hat_direct(rho, xs))
    table = RadialTable(spacing=spacing, coefficients=np.asarray(spline.c), rho_max=float(rho[-1]))
    state.PHI_C_HAT_TABLES[key] = table
    return table


def phi_c_hat_values(rho: np.ndarray, xs: CrossSection, rho_max: float | None = None) -> np.ndarray:
    """Vectorized Phi_c^(|xi|): table lookup, direct quadrature past the table end."""
    rho = np.asarray(rho, dtype=float)
    if np.any(rho < 0):
        raise ValueError("phi_c_hat needs |xi| >= 0")
    if xs.gamma <= -3.0:
        raise ValueError("phi_c_hat needs gamma > -3")
    if not xs.has_compact_part:
        return np.zeros_like(rho)
    limit = rho_max if rho_max is not None else (float(rho.max()) if rho.size else 0.0)
    table = phi_c_hat_table(xs, limit)
    out = table(np.minimum(rho, table.rho_max))
    beyond = rho > table.rho_max
    if np.any(beyond):
        out[beyond] = phi_c_hat_direct(rho[beyond], xs)
    return out


def phi_c_hat(xi_norm: float, xs: CrossSection) -> float:
    """Radial Fourier transform of the compact kinetic part at |xi| = xi_norm."""
    if not xi_norm >= 0:
        raise ValueError(f"phi_c_hat needs |xi| >= 0, got {xi_norm}")
    if xs.gamma <= -3.0:
        raise ValueError("phi_c_hat needs gamma > -3")
    return float(phi_c_hat_direct(np.array([xi_norm]), xs)[0])


def clear_tables() -> None:
    state.PHI_C_HAT_TABLES.clear()
