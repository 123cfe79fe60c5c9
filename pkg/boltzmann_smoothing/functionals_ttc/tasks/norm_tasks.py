"""
Norms, moments and spectral diagnostics of lattice fields.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import Any

import numpy as np
from scipy import integrate

from boltzmann_smoothing import config
from boltzmann_smoothing.functionals_ttc.tools.request_tools import Moments, NormRequest
from boltzmann_smoothing.grid_ttc.tasks.quadrature_tasks import Weight, quadrature, weight_values
from boltzmann_smoothing.grid_ttc.tools.fourier_tools import forward_transform
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution
from boltzmann_smoothing.utils import reduce_sum


def _require_nonnegative(f: Distribution, what: str) -> None:
    low = float(f.values.min()) if f.values.size else 0.0
    if low < -config.NEGATIVITY_TOLERANCE:
        raise ValueError(f"{what} needs f >= 0 (min {low:.3e})")


def weighted_lp_norm(f: Distribution, p: float = 2.0, ell: float = 0.0) -> float:
    """(int |f|^p (1 + |v|)^(ell p) dv)^(1/p); p = inf gives the weighted sup norm."""
    if not p > 0:
        raise ValueError(f"weighted_lp_norm needs p > 0, got {p}")
    weight = weight_values(f.grid, Weight("affine", ell=ell))
    magnitude = np.abs(f.values) * weight
    if math.isinf(p):
        return float(magnitude.max()) if magnitude.size else 0.0
    total = f.grid.cell_volume * reduce_sum(magnitude**p)
    return total ** (1.0 / p) if total > 0 else 0.0


def llogl_norm(f: Distribution) -> float:
    """int |f| log(1 + |f|) dv."""
    magnitude = np.abs(f.values)
    return f.grid.cell_volume * reduce_sum(magnitude * np.log1p(magnitude))


def weighted_sobolev_norm(f: Distribution, k: float = 0.0, ell: float = 0.0) -> float:
    """||<D>^k (<v>^ell f)||_{L^2} through Parseval on the full lattice."""
    grid = f.grid
    weighted = f if ell == 0.0 else f.with_values(
        f.values * weight_values(grid, Weight("bracket", ell=ell)), nonnegative=False
    )
    spectrum = forward_transform(weighted).coefficients
    multiplier = grid.frequency_bracket ** (2.0 * k)
    total = reduce_sum(multiplier * np.abs(spectrum) ** 2) / grid.box_volume
    return math.sqrt(max(total, 0.0))


def entropy(f: Distribution, floor: float | None = None) -> float:
    """int f log f dv with 0 log 0 = 0; values below ``floor`` contribute nothing."""
    _require_nonnegative(f, "entropy")
    eps = 0.0 if floor is None else floor
    values = np.where(f.values > eps, f.values, 0.0)
    safe = np.where(values > 0.0, values, 1.0)
    return f.grid.cell_volume * reduce_sum(values * np.log(safe))


def entropy_magnitude(f: Distribution) -> float:
    """int f |log f| dv, the integrability quantity behind the entropy family."""
    _require_nonnegative(f, "entropy")
    values = np.where(f.values > 0.0, f.values, 0.0)
    safe = np.where(values > 0.0, values, 1.0)
    return f.grid.cell_volume * reduce_sum(values * np.abs(np.log(safe)))


def norm(f: Distribution, req: NormRequest) -> float:
    """Evaluate the requested norm of ``f``."""
    req.validate()
    if req.family == "Lp_weighted":
        return weighted_lp_norm(f, req.p, req.ell)
    if req.family == "LlogL":
        return llogl_norm(f)
    if req.family == "Sobolev_weighted":
        return weighted_sobolev_norm(f, req.k, req.ell)
    return entropy_magnitude(f)


def moments(f: Distribution) -> Moments:
    """Mass, momentum, energy and entropy of a field (entropy needs f >= 0)."""
    mass = quadrature(f, "one")
    px, py, pz = (quadrature(f, Weight("coordinate", axis=i)) for i in range(3))
    energy = 0.5 * quadrature(f, "speed_squared")
    low = float(f.values.min()) if f.values.size else 0.0
    h = entropy(f) if low >= -config.NEGATIVITY_TOLERANCE else math.nan
    return Moments(mass=mass, momentum=(px, py, pz), energy=energy, entropy=h)


def moment_series(f: Distribution, orders: Sequence[float]) -> dict[str, float]:
    """||f||_{L^1_ell} for each requested ell (moment boundedness diagnostics)."""
    return {f"L1_{ell:g}": weighted_lp_norm(f, 1.0, ell) for ell in orders}


def sqrt_sobolev(f: Distribution, s: float, ell: float = 0.0) -> float:
    """||sqrt(f)||^2_{H^s_ell}; negative values are clipped to zero first."""
    root = f.with_values(np.sqrt(np.maximum(f.values, 0.0)), nonnegative=True)
    return weighted_sobolev_norm(root, s, ell) ** 2


def lq_weight_norm(g: Distribution, q: float, ell: float) -> float:
    """||g||_{L^q_ell} for 0 < q (q < 1 gives the quasi-norm used by the soft-potential terms)."""
    return weighted_lp_norm(g, q, ell)


def _continuum_embedding_constant(order: float) -> float:
    # (2 pi)^-3 int <xi>^(-2 order) d xi, finite for order > 3/2
    value, _ = integrate.quad(lambda r: 4.0 * math.pi * r**2 * (1.0 + r * r) ** (-order), 0, np.inf)
    return math.sqrt(value / (2.0 * math.pi) ** 3)


def embedding_ratio(f: Distribution, eps: float = 0.1) -> dict[str, float]:
    """
    ||f||_{H^{-3/2-eps}} / ||f||_{L^1} with the constants bounding it.

    On the lattice |f^(xi)| <= ||f||_{L^1}, so the ratio never exceeds ``lattice_constant``.
    """
    if not eps > 0:
        raise ValueError(f"embedding_ratio needs eps > 0, got {eps}")
    grid = f.grid
    order = 1.5 + eps
    l1 = weighted_lp_norm(f, 1.0, 0.0)
    negative = weighted_sobolev_norm(f, -order, 0.0)
    lattice_constant = math.sqrt(
        reduce_sum(grid.frequency_bracket ** (-2.0 * order)) / grid.box_volume
    )
    return {
        "order": -order,
        "h_negative": negative,
        "l1": l1,
        "ratio": negative / l1 if l1 > 0 else 0.0,
        "lattice_constant": lattice_constant,
        "continuum_constant": _continuum_embedding_constant(order),
    }


def time_continuity(
    times: Sequence[float], states: Sequence[Distribution], k: float = -2.0
) -> list[dict[str, Any]]:
    """
    ||f(t_{i+1}) - f(t_i)||_{H^k} and its quotient by the time gap for successive checkpoints.

    Continuity in time is only spot-checked: the values are recorded, never asserted.
    """
    if len(times) != len(states):
        raise ValueError("time_continuity needs one state per time")
    rows: list[dict[str, Any]] = []
    for i in range(len(times) - 1):
        gap = float(times[i + 1]) - float(times[i])
        diff = states[i + 1].plus(states[i], -1.0)
        value = weighted_sobolev_norm(diff, k, 0.0)
        rows.append(
            {
                "t0": float(times[i]),
                "t1": float(times[i + 1]),
                "difference": value,
                "rate": value / gap if gap > 0 else math.inf,
            }
        )
    return rows
