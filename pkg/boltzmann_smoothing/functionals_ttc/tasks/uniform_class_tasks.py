"""
The uniform class U(D0, E0) and its truncation property.
"""

from __future__ import annotations

import numpy as np

from boltzmann_smoothing import config
from boltzmann_smoothing.functionals_ttc.tasks.norm_tasks import llogl_norm, weighted_lp_norm
from boltzmann_smoothing.functionals_ttc.tools.request_tools import ClassWitness, UniformClassParams
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution

DEFAULT_MAX_CENTERS = 512


def uniform_class_radii(D0: float, E0: float) -> tuple[float, float, float]:
    """Tight (R, M, r0) for U(D0, E0)."""
    params = UniformClassParams(D0=float(D0), E0=float(E0))
    return params.R, params.M, params.r0


def _centers(g: Distribution, radius: float, max_centers: int) -> np.ndarray:
    points = g.grid.velocities.reshape(3, -1).T
    inside = points[np.linalg.norm(points, axis=1) <= radius + 1e-12]
    if inside.shape[0] > max_centers:
        stride = int(np.ceil(inside.shape[0] / max_centers))
        inside = inside[::stride]
    return inside


def truncated_masses(
    g: Distribution, params: UniformClassParams, centers: np.ndarray
) -> np.ndarray:
    """Mass of g on B(R) minus the open ball of radius r0 around each center."""
    grid = g.grid
    points = grid.velocities.reshape(3, -1).T
    values = g.values.ravel() * grid.cell_volume
    in_ball = np.linalg.norm(points, axis=1) <= params.R
    out = np.empty(centers.shape[0])
    for i, center in enumerate(centers):
        keep = in_ball & (np.linalg.norm(points - center, axis=1) >= params.r0)
        out[i] = float(np.sum(values[keep]))
    return out


def uniform_class_check(
    g: Distribution,
    params: UniformClassParams,
    *,
    centers: np.ndarray | None = None,
    max_centers: int = DEFAULT_MAX_CENTERS,
) -> tuple[bool, ClassWitness]:
    """
    Membership of g in U(D0, E0) plus the truncation property at lattice centers |v0| <= R.

    ``centers`` overrides the sampled center set (default: lattice points in B(R), strided down
    to ``max_centers``).
    """
    low = float(g.values.min()) if g.values.size else 0.0
    if low < -config.NEGATIVITY_TOLERANCE:
        raise ValueError(f"uniform class membership needs g >= 0 (min {low:.3e})")
    mass = weighted_lp_norm(g, 1.0, 0.0)
    l1_2 = weighted_lp_norm(g, 1.0, 2.0)
    llogl = llogl_norm(g)
    mass_ok = mass >= params.D0
    bound_ok = l1_2 + llogl <= params.E0
    sample = _centers(g, params.R, max_centers) if centers is None else np.atleast_2d(centers)
    truncated = truncated_masses(g, params, sample) if sample.size else np.zeros(0)
    if truncated.size:
        worst = int(np.argmin(truncated))
        truncated_min = float(truncated[worst])
        worst_center = sample[worst]
    else:
        truncated_min, worst_center = mass, None
    truncation_ok = truncated_min >= 0.5 * params.D0
    witness = ClassWitness(
        mass=mass,
        l1_2=l1_2,
        llogl=llogl,
        truncated_min=truncated_min,
        centers_checked=int(truncated.size),
        mass_ok=mass_ok,
        bound_ok=bound_ok,
        truncation_ok=truncation_ok,
        worst_center=worst_center,
    )
    return mass_ok and bound_ok and truncation_ok, witness
