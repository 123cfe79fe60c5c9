"""
Explicit time stepping of f_t = Q(f, f) and checkpointed simulation.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import Any

import numpy as np

from boltzmann_smoothing.collision_ttc.tasks.operator_tasks import apply_q, loss_rate
from boltzmann_smoothing.collision_ttc.tools.workspace_tools import CollisionWorkspace
from boltzmann_smoothing.errors import NumericalError
from boltzmann_smoothing.evolution_ttc.tools.trajectory_tools import (
    SCHEMES,
    CheckpointSpec,
    StepResult,
    Trajectory,
)
from boltzmann_smoothing.functionals_ttc.tasks.dissipation_tasks import symmetrized_dissipation
from boltzmann_smoothing.functionals_ttc.tasks.norm_tasks import moment_series, moments
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution, check_same_grid
from boltzmann_smoothing.utils import log

STABILITY_FACTOR = 0.1
ENTROPY_STEP_TOLERANCE = 1e-8


def _rhs(f: Distribution, ws: CollisionWorkspace, project: bool) -> Distribution:
    return apply_q(f, f, ws, project=project)


def step_report(
    f: Distribution,
    dt: float,
    scheme: str,
    ws: CollisionWorkspace,
    *,
    project: bool = False,
    clip: bool = False,
) -> StepResult:
    """
    One explicit step; ``clip`` zeroes negative values afterwards and reports the removed mass
    (no renormalization).
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {', '.join(SCHEMES)}")
    if not (math.isfinite(dt) and dt > 0):
        raise ValueError(f"dt must be a positive real, got {dt}")
    check_same_grid(ws.grid, f.grid)
    if scheme == "euler":
        values = f.values + dt * _rhs(f, ws, project).values
    elif scheme == "rk2":
        k1 = _rhs(f, ws, project)
        k2 = _rhs(f.plus(k1, dt), ws, project)
        values = f.values + 0.5 * dt * (k1.values + k2.values)
    else:
        k1 = _rhs(f, ws, project)
        k2 = _rhs(f.plus(k1, 0.5 * dt), ws, project)
        k3 = _rhs(f.plus(k2, 0.5 * dt), ws, project)
        k4 = _rhs(f.plus(k3, dt), ws, project)
        values = f.values + (dt / 6.0) * (
            k1.values + 2.0 * k2.values + 2.0 * k3.values + k4.values
        )
    if not np.all(np.isfinite(values)):
        bad = int(np.count_nonzero(~np.isfinite(values)))
        raise NumericalError(
            f"blow-up in {scheme} step (dt={dt:g}): {bad} non-finite values; reduce dt"
        )
    state = Distribution(grid=f.grid, values=values, label=f.label)
    if not clip:
        return StepResult(state=state)
    clipped, removed = state.clipped()
    if removed < 0.0:
        log(f"⚠️ clipped {-removed:.3e} of negative mass", "DEBUG")
    return StepResult(state=clipped, clipped_mass=removed)


def step(
    f: Distribution,
    dt: float,
    scheme: str,
    ws: CollisionWorkspace,
    *,
    project: bool = False,
    clip: bool = False,
) -> Distribution:
    return step_report(f, dt, scheme, ws, project=project, clip=clip).state


def estimate_stable_dt(
    f: Distribution, ws: CollisionWorkspace, factor: float = STABILITY_FACTOR
) -> float:
    """factor / ||nu||_inf with nu the loss rate generated by f; inf when f produces no loss."""
    rate = float(np.max(np.abs(loss_rate(f, ws).values)))
    if not math.isfinite(rate):
        raise NumericalError("loss rate is not finite")
    return factor / rate if rate > 0 else math.inf


def _time_grid(t_end: float, dt: float, spec: CheckpointSpec) -> tuple[list[float], set[int]]:
    """Step end times and the indices (into the time list) that are checkpoints."""
    if spec.times:
        targets = sorted({t for t in spec.times if 0.0 < t <= t_end} | {t_end})
        times = [0.0]
        marks = {0}
        for target in targets:
            span = target - times[-1]
            if span <= 1e-14 * max(1.0, t_end):
                marks.add(len(times) - 1)
                continue
            count = max(1, math.ceil(span / dt - 1e-9))
            base = times[-1]
            times.extend(base + span * (i + 1) / count for i in range(count))
            times[-1] = target
            marks.add(len(times) - 1)
        return times, marks
    count = max(1, math.ceil(t_end / dt - 1e-9))
    times = [t_end * i / count for i in range(count + 1)]
    every = spec.every or 1
    marks = {i for i in range(0, count + 1, every)} | {count}
    return times, marks


def simulate(
    f0: Distribution,
    t_end: float,
    dt: float,
    scheme: str,
    checkpoints: CheckpointSpec,
    ws: CollisionWorkspace,
    *,
    project: bool = False,
    clip: bool = False,
    dissipation: bool = True,
    moment_orders: Sequence[float] = (),
    provenance: dict[str, Any] | None = None,
) -> Trajectory:
    """
    Integrate from f0 to t_end and record checkpoints with their diagnostics.

    Steps are shortened uniformly so every checkpoint time (and t_end) is hit exactly. The
    entropy is expected to be nonincreasing; increases beyond the per-step tolerance are logged.
    """
    if not (math.isfinite(t_end) and t_end > 0):
        raise ValueError(f"t_end must be a positive real, got {t_end}")
    if not (math.isfinite(dt) and dt > 0):
        raise ValueError(f"dt must be a positive real, got {dt}")
    checkpoints.validate()
    stable = estimate_stable_dt(f0, ws)
    if dt > stable:
        log(f"⚠️ dt={dt:g} exceeds the estimated stability bound {stable:.3g}", "WARN")
    times, marks = _time_grid(t_end, dt, checkpoints)
    log(f"⏱️ {scheme} over [0, {t_end:g}] in {len(times) - 1} steps, {len(marks)} checkpoints")

    record_times: list[float] = []
    states: list[Distribution] = []
    ledger_moments = []
    dissipations: list[float] = []
    clipped: list[float] = []
    series: list[dict[str, float]] = []
    removed_since = 0.0

    def record(t: float, f: Distribution) -> None:
        nonlocal removed_since
        record_times.append(t)
        states.append(f)
        ledger_moments.append(moments(f))
        clipped.append(removed_since)
        removed_since = 0.0
        if moment_orders:
            series.append(moment_series(f, moment_orders))
        if dissipation:
            # negative dips are floored with the rest
            dissipations.append(symmetrized_dissipation(f, ws))
        m = ledger_moments[-1]
        log(
            f"⏱️ t={t:.4g} mass={m.mass:.12g} energy={m.energy:.12g} entropy={m.entropy:.12g}",
            "DEBUG",
        )

    f = f0
    record(0.0, f)
    for i in range(1, len(times)):
        result = step_report(f, times[i] - times[i - 1], scheme, ws, project=project, clip=clip)
        f = result.state
        removed_since += result.clipped_mass
        if i in marks:
            record(times[i], f)

    trajectory = Trajectory(
        times=tuple(record_times),
        states=tuple(states),
        provenance={
            **(provenance or {}),
            "scheme": scheme,
            "dt": dt,
            "steps": len(times) - 1,
            "project": project,
            "clip": clip,
            "grid": f0.grid.to_dict(),
            "cross_section": ws.xs.to_dict(),
        },
        moments=tuple(ledger_moments),
        dissipation=tuple(dissipations),
        clipped_mass=tuple(clipped),
        moment_series=tuple(series),
    )
    increase = trajectory.entropy_increase()
    if increase > ENTROPY_STEP_TOLERANCE:
        log(f"⚠️ entropy increased by {increase:.3e} between checkpoints", "WARN")
    drift = trajectory.conservation_drift()
    log(
        f"⏱️ done: mass drift {drift['mass']:.2e}, energy drift {drift['energy']:.2e}, "
        f"max entropy increase {increase:.2e}"
    )
    return trajectory


def entropy_dissipation_integral(traj: Trajectory, ws: CollisionWorkspace | None = None) -> float:
    """
    int D(f, f) dt over the trajectory by composite trapezoid.

    Uses the recorded dissipation series; when it is missing, ``ws`` is needed to compute it.
    """
    values = list(traj.dissipation)
    if not values:
        if ws is None:
            raise ValueError("trajectory carries no dissipation series; pass a workspace")
        values = [symmetrized_dissipation(state, ws) for state in traj.states]
    if len(values) < 2:
        return 0.0
    return float(np.trapezoid(np.asarray(values, dtype=float), np.asarray(traj.times, dtype=float)))
