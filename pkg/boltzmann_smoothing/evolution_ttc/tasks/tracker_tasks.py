"""
Regularity tracking along a trajectory: mollified norms, weighted Sobolev norms and the
Fourier-tail decay exponent.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from boltzmann_smoothing import config
from boltzmann_smoothing.evolution_ttc.tools.trajectory_tools import TrackerReport, Trajectory
from boltzmann_smoothing.functionals_ttc.tasks.norm_tasks import (
    weighted_lp_norm,
    weighted_sobolev_norm,
)
from boltzmann_smoothing.grid_ttc.tools.fourier_tools import forward_transform
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution
from boltzmann_smoothing.mollifier_ttc.tasks.symbol_tasks import apply_mollifier
from boltzmann_smoothing.mollifier_ttc.tools.symbol_tools import MollifierSchedule, make_schedule
from boltzmann_smoothing.utils import log

STAGE_TOLERANCE = 1e-12


def shell_spectrum(f: Distribution) -> tuple[np.ndarray, np.ndarray]:
    """
    Shell-averaged |f^| over the retained modes.

    Shell k collects the paired modes with round(|xi| / dxi) = k for 1 <= k <= N/2 - 1.
    Returns the shell radii and averages of the nonempty shells.
    """
    grid = f.grid
    magnitude = np.abs(forward_transform(f).coefficients)
    shell = np.rint(grid.frequency_norm / grid.frequency_step).astype(int)
    top = grid.n_points // 2 - 1
    keep = (~grid.nyquist_mask) & (shell >= 1) & (shell <= top)
    counts = np.bincount(shell[keep], minlength=top + 1)
    sums = np.bincount(shell[keep], weights=magnitude[keep], minlength=top + 1)
    filled = np.nonzero(counts)[0]
    return filled * grid.frequency_step, sums[filled] / counts[filled]


def tail_exponent(f: Distribution) -> float:
    """
    -slope of log(shell average) against log|xi| over the upper half of the resolved radii.

    NaN when fewer than two shells with nonzero averages remain.
    """
    radii, averages = shell_spectrum(f)
    xi_max = (f.grid.n_points // 2 - 1) * f.grid.frequency_step
    use = (radii >= 0.5 * xi_max) & (averages > 0.0)
    if np.count_nonzero(use) < 2:
        return math.nan
    slope, _ = np.polyfit(np.log(radii[use]), np.log(averages[use]), 1)
    return float(-slope)


def bootstrap_stages(
    start: float,
    boundaries: Sequence[float],
    *,
    s: float,
    gamma: float,
    delta: float = 0.0,
) -> list[MollifierSchedule]:
    """
    Chained schedules over [t_0, t_1], [t_1, t_2], ...

    Stage k gains 1 - s orders over its interval (rate (1 - s) / (t_{k+1} - t_k)) and starts
    where the previous stage ended; n0 follows the default rule for each stage start.
    """
    if len(boundaries) < 2:
        raise ValueError("bootstrap_stages needs at least two boundaries")
    stages: list[MollifierSchedule] = []
    lam = float(start)
    for t0, t1 in zip(boundaries, boundaries[1:]):
        if t1 <= t0:
            raise ValueError("stage boundaries must be strictly increasing")
        rate = (1.0 - s) / (t1 - t0)
        stages.append(
            make_schedule(rate, lam, delta=delta, gamma=gamma, s=s, t_start=t0, t_end=t1)
        )
        lam += 1.0 - s
    return stages


def _stage_for(t: float, stages: Sequence[MollifierSchedule]) -> int | None:
    for index, stage in enumerate(stages):
        tol = STAGE_TOLERANCE * max(1.0, abs(stage.t_end))
        if stage.t_start - tol <= t <= stage.t_end + tol:
            return index
    return None


def regularity_tracker(
    traj: Trajectory,
    sched: MollifierSchedule | Sequence[MollifierSchedule],
    orders: Sequence[tuple[float, float]] = (),
    *,
    deltas: Sequence[float] = config.DEFAULT_TRACKER_DELTAS,
) -> TrackerReport:
    """
    Per checkpoint: ||M_{lambda(t)}^delta f(t)|| for each delta, ||f(t)||_{H^k_ell} for each
    requested (k, ell), and the Fourier-tail decay exponent.

    With a list of schedules each checkpoint uses the first stage whose interval contains it;
    checkpoints outside every stage get NaN mollified norms.
    """
    stages = [sched] if isinstance(sched, MollifierSchedule) else list(sched)
    if not stages:
        raise ValueError("regularity_tracker needs at least one schedule")
    for stage in stages:
        stage.validate()
    rows = []
    for t, f in zip(traj.times, traj.states):
        index = _stage_for(t, stages)
        if index is None:
            lam = math.nan
            mollified = {f"delta={d:g}": math.nan for d in deltas}
        else:
            stage = stages[index]
            lam = stage.lam(t)
            mollified = {
                f"delta={d:g}": weighted_lp_norm(apply_mollifier(f, stage.symbol_at(t, d)))
                for d in deltas
            }
        sobolev = {f"H^{k:g}_{ell:g}": weighted_sobolev_norm(f, k, ell) for k, ell in orders}
        exponent = tail_exponent(f)
        rows.append(
            {
                "t": float(t),
                "stage": index,
                "lambda": lam,
                "tail_exponent": exponent,
                "mollified": mollified,
                "sobolev": sobolev,
            }
        )
        log(f"🧮 t={t:.4g} lambda={lam:.4g} tail exponent {exponent:.4f}", "DEBUG")
    report = TrackerReport(
        rows=tuple(rows),
        deltas=tuple(float(d) for d in deltas),
        orders=tuple((float(k), float(ell)) for k, ell in orders),
    )
    log(f"🧮 tail exponent {rows[0]['tail_exponent']:.4f} -> {rows[-1]['tail_exponent']:.4f}")
    return report
