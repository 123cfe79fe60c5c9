"""
Mollified energy identity along a trajectory and the a-priori estimate fitted from it.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate

from boltzmann_smoothing.collision_ttc.tasks.operator_tasks import (
    apply_q,
    apply_q_report,
    commutator_pairing,
)
from boltzmann_smoothing.collision_ttc.tools.workspace_tools import CollisionWorkspace
from boltzmann_smoothing.errors import NumericalError
from boltzmann_smoothing.evolution_ttc.tools.trajectory_tools import LedgerReport, Trajectory
from boltzmann_smoothing.functionals_ttc.tasks.norm_tasks import weighted_sobolev_norm
from boltzmann_smoothing.grid_ttc.tasks.quadrature_tasks import inner_product
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution, check_same_grid
from boltzmann_smoothing.mollifier_ttc.tasks.symbol_tasks import apply_mollifier, log_bracket_root
from boltzmann_smoothing.mollifier_ttc.tools.symbol_tools import MollifierSchedule
from boltzmann_smoothing.utils import log
from boltzmann_smoothing.veritas_ttc.tools.fit_tools import fit_two_term

TIME_TOLERANCE = 1e-12


def _check_range(traj: Trajectory, sched: MollifierSchedule) -> None:
    tol = TIME_TOLERANCE * max(1.0, abs(sched.t_end))
    if traj.times[0] < sched.t_start - tol or traj.times[-1] > sched.t_end + tol:
        raise NumericalError(
            f"trajectory spans [{traj.times[0]:g}, {traj.times[-1]:g}] but the schedule covers "
            f"[{sched.t_start:g}, {sched.t_end:g}]"
        )


def _projection_term(
    f: Distribution, Mf: Distribution, sched: MollifierSchedule, t: float, ws: CollisionWorkspace
) -> float:
    """(M (Q_projected - Q_raw), M f): the share of the conservative correction."""
    report = apply_q_report(f, f, ws, project=True)
    raw = report.compact.plus(report.tail)
    correction = report.total.plus(raw, -1.0)
    return inner_product(apply_mollifier(correction, sched.symbol_at(t)), Mf)


def _cumulative(values: list[float], times: np.ndarray) -> np.ndarray:
    return integrate.cumulative_trapezoid(np.asarray(values, dtype=float), times, initial=0.0)


def energy_ledger(
    traj: Trajectory,
    sched: MollifierSchedule,
    ws: CollisionWorkspace,
    *,
    min_checkpoints: int = 2,
) -> LedgerReport:
    """
    Evaluate every term of the mollified energy identity at the trajectory checkpoints.

    The residual at t is |(E(t) - E(0)) - (log + pairing + commutator + projection integrals)|
    with E = 1/2 ||M f||^2, relative to the largest of those terms. The a-priori estimate
    ||M f(t)||^2 + c int ||M f||^2_{H^s_{gamma/2}} <= ||M f(0)||^2 + C int ||f||^2 is fitted on
    the checkpoints t > 0.
    """
    sched.validate()
    check_same_grid(ws.grid, traj.grid)
    if len(traj.times) < min_checkpoints:
        raise ValueError(
            f"energy ledger needs at least {min_checkpoints} checkpoints, got {len(traj.times)}"
        )
    _check_range(traj, sched)
    xs = ws.xs
    times = np.asarray(traj.times, dtype=float)
    lambdas: list[float] = []
    energy: list[float] = []
    log_rate: list[float] = []
    pairing: list[float] = []
    commutator: list[float] = []
    projection: list[float] = []
    coercive: list[float] = []
    l2: list[float] = []
    for t, f in zip(traj.times, traj.states):
        M = sched.symbol_at(t)
        Mf = apply_mollifier(f, M)
        lambdas.append(M.lam)
        energy.append(0.5 * inner_product(Mf, Mf))
        root = log_bracket_root(f, M)
        log_rate.append(sched.rate * inner_product(root, root))
        pairing.append(inner_product(apply_q(f, Mf, ws), Mf))
        commutator.append(commutator_pairing(f, f, Mf, M, ws))
        projection.append(_projection_term(f, Mf, sched, t, ws) if traj.project else 0.0)
        coercive.append(weighted_sobolev_norm(Mf, xs.s, 0.5 * xs.gamma) ** 2)
        l2.append(inner_product(f, f))

    log_int = _cumulative(log_rate, times)
    pairing_int = _cumulative(pairing, times)
    commutator_int = _cumulative(commutator, times)
    projection_int = _cumulative(projection, times)
    coercive_int = _cumulative(coercive, times)
    l2_int = _cumulative(l2, times)
    residual: list[float] = []
    relative: list[float] = []
    for i in range(len(times)):
        change = energy[i] - energy[0]
        rhs = log_int[i] + pairing_int[i] + commutator_int[i] + projection_int[i]
        value = abs(change - rhs)
        largest = max(
            abs(energy[i]),
            abs(energy[0]),
            abs(log_int[i]),
            abs(pairing_int[i]),
            abs(commutator_int[i]),
            abs(projection_int[i]),
        )
        residual.append(value)
        relative.append(value / largest if largest > 0 else 0.0)

    estimate: dict[str, float | str | bool] = {}
    decrease = [2.0 * (energy[0] - e) for e in energy[1:]]
    if any(a > 0 for a in coercive_int[1:]):
        fit = fit_two_term(decrease, coercive_int[1:], l2_int[1:])
        estimate = fit.to_dict()

    if not all(math.isfinite(v) for v in energy + log_rate + pairing + commutator):
        raise NumericalError("energy ledger produced non-finite terms")
    report = LedgerReport(
        times=tuple(float(t) for t in times),
        lambdas=tuple(lambdas),
        energy=tuple(energy),
        log_integral=tuple(log_int.tolist()),
        pairing_integral=tuple(pairing_int.tolist()),
        commutator_integral=tuple(commutator_int.tolist()),
        projection_integral=tuple(projection_int.tolist()),
        coercive_integral=tuple(coercive_int.tolist()),
        l2_integral=tuple(l2_int.tolist()),
        residual=tuple(residual),
        relative_residual=tuple(relative),
        estimate_fit=estimate,
    )
    log(
        f"🧮 energy ledger over {len(times)} checkpoints: max residual {report.max_residual:.3e} "
        f"({report.max_relative_residual:.2%} of the largest term)"
    )
    return report
