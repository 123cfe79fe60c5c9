"""
Entropy dissipation D(g, f) = -(Q(g, f), log f) by direct (u, sigma) quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from boltzmann_smoothing import config
from boltzmann_smoothing.collision_ttc.tasks.velocity_tasks import make_offsets, starred_values
from boltzmann_smoothing.collision_ttc.tools.shift_tools import (
    FieldSampler,
    iter_pair_chunks,
    pair_slices,
)
from boltzmann_smoothing.collision_ttc.tools.workspace_tools import CollisionWorkspace, check_budget
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution, check_same_grid
from boltzmann_smoothing.utils import reduce_sum


@dataclass(frozen=True)
class DissipationReport:
    """Direct D(g, f) and, when g is f, the symmetrized form."""

    direct: float
    symmetrized: float | None
    floor: float

    def to_dict(self) -> dict[str, Any]:
        return {"direct": self.direct, "symmetrized": self.symmetrized, "floor": self.floor}


def _floor(floor: float | None) -> float:
    return config.ENTROPY_FLOOR if floor is None else float(floor)


def _check_positive(f: Distribution, eps: float) -> None:
    if eps <= 0.0 and np.any(f.values <= 0.0):
        raise ValueError("entropy dissipation needs f > 0 on the grid when no floor is applied")


def _safe_log(values: np.ndarray, eps: float) -> np.ndarray:
    return np.log(np.maximum(values, eps))


def entropy_dissipation(
    g: Distribution,
    f: Distribution,
    ws: CollisionWorkspace,
    *,
    floor: float | None = None,
    offsets: str = "lattice",
) -> float:
    """
    D(g, f) = -sum B g(v*) f(v) [log f(v') - log f(v)] with log f taken as log max(f, eps).

    The post-collisional log is the log of the interpolated f, not an interpolated log.
    """
    check_same_grid(ws.grid, g.grid, f.grid)
    eps = _floor(floor)
    _check_positive(f, eps)
    rule = make_offsets(ws, "full", offsets)
    if rule.size == 0:
        return 0.0
    check_budget(
        "entropy dissipation", rule.size * ws.sigma_count * ws.grid.size, ws.operation_budget
    )
    gs = FieldSampler(ws.grid, g, ws.interpolation)
    fs = FieldSampler(ws.grid, f, ws.interpolation)
    log_f = _safe_log(fs.values, eps)
    partial: list[float] = []
    for chunk in iter_pair_chunks(rule, ws.xs):
        products = starred_values(gs, rule, chunk) * fs.values[None]
        for sl in pair_slices(chunk.size):
            jump = _safe_log(fs.at(chunk.d1[sl]), eps) - log_f[None]
            sums = np.einsum("pabc,pabc->p", products[chunk.owner[sl]], jump)
            partial.append(-float(chunk.weights[sl] @ sums))
    return ws.grid.cell_volume * reduce_sum(np.asarray(partial))


def symmetrized_dissipation(
    f: Distribution,
    ws: CollisionWorkspace,
    *,
    floor: float | None = None,
    offsets: str = "lattice",
) -> float:
    """
    1/4 sum B (f' f'* - f f*)(log f' f'* - log f f*), pointwise nonnegative.

    Every factor is floored at eps before both the products and the logs, so each term has the
    form (x - y)(log x - log y) >= 0.
    """
    check_same_grid(ws.grid, f.grid)
    eps = _floor(floor)
    _check_positive(f, eps)
    rule = make_offsets(ws, "full", offsets)
    if rule.size == 0:
        return 0.0
    check_budget(
        "symmetrized dissipation", rule.size * ws.sigma_count * ws.grid.size, ws.operation_budget
    )
    fs = FieldSampler(ws.grid, f, ws.interpolation)
    here = np.maximum(fs.values, eps)
    partial: list[float] = []
    for chunk in iter_pair_chunks(rule, ws.xs):
        before = here[None] * np.maximum(starred_values(fs, rule, chunk), eps)
        for sl in pair_slices(chunk.size):
            after = np.maximum(fs.at(chunk.d1[sl]), eps) * np.maximum(fs.at(chunk.d2[sl]), eps)
            prior = before[chunk.owner[sl]]
            terms = (after - prior) * (np.log(after) - np.log(prior))
            partial.append(float(chunk.weights[sl] @ np.einsum("pabc->p", terms)))
    return 0.25 * ws.grid.cell_volume * reduce_sum(np.asarray(partial))


def dissipation_report(
    g: Distribution,
    f: Distribution,
    ws: CollisionWorkspace,
    *,
    floor: float | None = None,
) -> DissipationReport:
    """Direct D(g, f); the symmetrized form is added when g and f are the same field."""
    direct = entropy_dissipation(g, f, ws, floor=floor)
    same = g is f or (g.grid.same_as(f.grid) and np.array_equal(g.values, f.values))
    symmetrized = symmetrized_dissipation(f, ws, floor=floor) if same else None
    return DissipationReport(direct=direct, symmetrized=symmetrized, floor=_floor(floor))
