"""
Bounds on the collision operator: the trilinear upper bound, the mollifier commutator (full and
smooth part) and the Maxwellian-molecule fourth-moment oracle.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from boltzmann_smoothing.collision_ttc.tasks.operator_tasks import (
    apply_q,
    commutator_pairing,
    tail_commutator_check,
)
from boltzmann_smoothing.collision_ttc.tools.workspace_tools import CollisionWorkspace
from boltzmann_smoothing.evolution_ttc.tools.trajectory_tools import Trajectory
from boltzmann_smoothing.functionals_ttc.tasks.norm_tasks import (
    weighted_lp_norm,
    weighted_sobolev_norm,
)
from boltzmann_smoothing.grid_ttc.tasks.quadrature_tasks import Weight, inner_product, quadrature
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution
from boltzmann_smoothing.mollifier_ttc.tasks.bound_tasks import DEFAULT_DELTAS
from boltzmann_smoothing.mollifier_ttc.tasks.symbol_tasks import apply_mollifier
from boltzmann_smoothing.mollifier_ttc.tools.symbol_tools import MollifierSymbol
from boltzmann_smoothing.utils import log
from boltzmann_smoothing.veritas_ttc.tools.family_tools import FunctionFamily
from boltzmann_smoothing.veritas_ttc.tools.fit_tools import (
    FAIL,
    FitCase,
    FitReport,
    TrailLevel,
    decide,
)
from boltzmann_smoothing.veritas_ttc.tools.inequality_tools import (
    COMMUTATOR,
    MOMENT_BKW,
    TAIL_COMMUTATOR,
    UPPER_BOUND,
)
from boltzmann_smoothing.veritas_ttc.tools.oracle_tools import (
    angular_relaxation_constant,
    bkw_profile,
    fourth_moment_rate,
    fourth_moment_relaxation_rate,
)
from boltzmann_smoothing.veritas_ttc.tools.request_tools import sample_trail, thinned_indices

COMMUTATOR_CASES = (1, 2)
BKW_TOLERANCE = 0.02


def _triples(
    f_members: Sequence[Distribution],
    g_members: Sequence[Distribution],
    h_members: Sequence[Distribution],
    max_cases: int | None,
    seed: int,
) -> list[tuple[int, int, int]]:
    shape = (len(f_members), len(g_members), len(h_members))
    total = shape[0] * shape[1] * shape[2]
    if total == 0:
        raise ValueError("families must not be empty")
    flat = thinned_indices(total, max_cases, seed)
    return [tuple(int(x) for x in np.unravel_index(i, shape)) for i in flat]  # type: ignore[misc]


def _members(*families: FunctionFamily, ws: CollisionWorkspace) -> list[list[Distribution]]:
    out = []
    for family in families:
        family.validate()
        out.append(family.generate(ws.grid))
    return out


def check_upper_bound(
    f_family: FunctionFamily,
    g_family: FunctionFamily,
    h_family: FunctionFamily,
    ws: CollisionWorkspace,
    *,
    r: float,
    ell: float,
    max_cases: int | None = None,
) -> FitReport:
    """
    |(Q(f, g), h)| <= C ||f||_{L^1_{gamma+2s}} ||g||_{H^r_{gamma+2s-ell}} ||h||_{H^{2s-r}_ell}
    for r in [2s - 1, 2s] and ell in [0, gamma + 2s].
    """
    xs = ws.xs
    order = xs.gamma + 2.0 * xs.s
    if order <= 0.0:
        raise ValueError(f"upper bound needs gamma + 2s > 0, got {order:g}")
    if not 2.0 * xs.s - 1.0 <= r <= 2.0 * xs.s:
        raise ValueError(f"r={r} outside [2s - 1, 2s] = [{2 * xs.s - 1:g}, {2 * xs.s:g}]")
    if not 0.0 <= ell <= order:
        raise ValueError(f"ell={ell} outside [0, gamma + 2s] = [0, {order:g}]")
    fs, gs, hs = _members(f_family, g_family, h_family, ws=ws)
    f_norm = [weighted_lp_norm(f, 1.0, order) for f in fs]
    g_norm = [weighted_sobolev_norm(g, r, order - ell) for g in gs]
    h_norm = [weighted_sobolev_norm(h, 2.0 * xs.s - r, ell) for h in hs]
    collisions: dict[tuple[int, int], Distribution] = {}
    cases: list[FitCase] = []
    for i, j, k in _triples(fs, gs, hs, max_cases, f_family.seed):
        if (i, j) not in collisions:
            collisions[(i, j)] = apply_q(fs[i], gs[j], ws)
        lhs = abs(inner_product(collisions[(i, j)], hs[k]))
        cases.append(
            FitCase(
                lhs=lhs,
                rhs=f_norm[i] * g_norm[j] * h_norm[k],
                terms={"f": f_norm[i], "g": g_norm[j], "h": h_norm[k]},
                label=f"{fs[i].label}|{gs[j].label}|{hs[k].label}",
            )
        )
    trail = sample_trail([case.ratio for case in cases])
    constant = max(case.ratio for case in cases)
    verdict = decide(trail, extra_ok=math.isfinite(constant))
    return FitReport(
        inequality=UPPER_BOUND,
        cases=tuple(cases),
        constants={"C": constant},
        trail=tuple(trail),
        verdict=verdict,
        parameters={"gamma": xs.gamma, "s": xs.s, "r": r, "ell": ell, "cases": len(cases)},
        seeds=(f_family.seed, g_family.seed, h_family.seed),
    )


def commutator_hypotheses(
    gamma: float, s: float, s_prime: float, lam: float, n0: float
) -> list[str]:
    """Violated hypotheses of the commutator estimate (empty when all hold)."""
    problems = []
    if gamma + 2.0 * s <= 0.0:
        problems.append("gamma + 2s > 0")
    if not 0.0 < s_prime < s:
        problems.append("0 < s' < s")
    if gamma + 2.0 * s_prime <= 0.0:
        problems.append("gamma + 2s' > 0")
    if 2.0 * s_prime < max(2.0 * s - 1.0, 0.0):
        problems.append("2s' >= (2s - 1)+")
    restriction = 5.0 + gamma >= 2.0 * (n0 - lam)
    slight = s > 0.5 and gamma > -1.0 and 4.0 + gamma + 2.0 * s > 2.0 * (n0 - lam)
    if not (restriction or slight):
        problems.append("5 + gamma >= 2 (n0 - lambda) (or its s > 1/2 relaxation)")
    return problems


def check_commutator(
    f_family: FunctionFamily,
    g_family: FunctionFamily,
    h_family: FunctionFamily,
    ws: CollisionWorkspace,
    *,
    lam: float,
    n0: float,
    s_prime: float,
    deltas: Sequence[float] = DEFAULT_DELTAS,
    case: int | None = None,
    max_cases: int | None = None,
) -> FitReport:
    """
    |(M Q(f, g) - Q(f, M g), h)|
        <= C (||f||_{L^1_w} [+ ||f||_{H^{(lam+s'-3)+}}]) ||M g||_{H^{s'}_w} ||h||_{H^{s'}}
    with w = gamma+ + (2s - 1)+; the bracketed term enters when s' + lam >= 3/2.

    The fitted constant must not depend on delta: the trail records C per delta in decreasing
    order. Unmet hypotheses give an inconclusive verdict, never a failure.
    """
    xs = ws.xs
    natural = 1 if s_prime + lam < 1.5 else 2
    chosen = natural if case is None else int(case)
    if chosen not in COMMUTATOR_CASES:
        raise ValueError(f"commutator case must be 1 or 2, got {case}")
    violated = commutator_hypotheses(xs.gamma, xs.s, s_prime, lam, n0)
    notes = [f"hypothesis violated: {p}" for p in violated]
    if chosen != natural:
        notes.append(f"case {chosen} requested but s' + lambda selects case {natural}")
    weight = max(xs.gamma, 0.0) + max(2.0 * xs.s - 1.0, 0.0)
    fs, gs, hs = _members(f_family, g_family, h_family, ws=ws)
    f_norm = [weighted_lp_norm(f, 1.0, weight) for f in fs]
    if chosen == 2:
        extra = max(lam + s_prime - 3.0, 0.0)
        f_norm = [a + weighted_sobolev_norm(f, extra, 0.0) for a, f in zip(f_norm, fs)]
    h_norm = [weighted_sobolev_norm(h, s_prime, 0.0) for h in hs]
    triples = _triples(fs, gs, hs, max_cases, f_family.seed)
    ordered = sorted((float(d) for d in deltas), reverse=True)
    cases: list[FitCase] = []
    per_delta: dict[float, float] = {}
    worst_by_case = np.zeros(len(triples))
    for delta in ordered:
        M = MollifierSymbol(lam=lam, delta=delta, n0=n0)
        M.validate()
        mollified = [apply_mollifier(g, M) for g in gs]
        g_norm = [weighted_sobolev_norm(mg, s_prime, weight) for mg in mollified]
        ratios = []
        for index, (i, j, k) in enumerate(triples):
            lhs = abs(commutator_pairing(fs[i], gs[j], hs[k], M, ws))
            item = FitCase(
                lhs=lhs,
                rhs=f_norm[i] * g_norm[j] * h_norm[k],
                terms={"delta": delta},
                label=f"delta={delta:g}|{fs[i].label}|{gs[j].label}|{hs[k].label}",
            )
            cases.append(item)
            ratios.append(item.ratio)
            worst_by_case[index] = max(worst_by_case[index], item.ratio)
        per_delta[delta] = max(ratios)
        log(f"🧮 commutator delta={delta:g}: sup ratio {per_delta[delta]:.4g}", "DEBUG")
    trail = [TrailLevel("delta", d, c, len(triples)) for d, c in per_delta.items()]
    trail.extend(sample_trail(worst_by_case.tolist()))
    constant = max(per_delta.values())
    verdict = decide(trail, hypotheses_met=not notes, extra_ok=math.isfinite(constant))
    return FitReport(
        inequality=COMMUTATOR,
        cases=tuple(cases),
        constants={"C": constant, **{f"C[delta={d:g}]": c for d, c in per_delta.items()}},
        trail=tuple(trail),
        verdict=verdict,
        parameters={
            "gamma": xs.gamma,
            "s": xs.s,
            "s_prime": s_prime,
            "lambda": lam,
            "n0": n0,
            "case": chosen,
            "weight": weight,
            "deltas": ordered,
        },
        seeds=(f_family.seed, g_family.seed, h_family.seed),
        notes=tuple(notes),
    )


def check_tail_commutator(
    f_family: FunctionFamily,
    g_family: FunctionFamily,
    h_family: FunctionFamily,
    ws: CollisionWorkspace,
    *,
    M: MollifierSymbol,
    order_gap: float = 2.0,
    eps: float = 0.1,
    max_cases: int | None = None,
) -> FitReport:
    """The smooth-part commutator bound, fitted as a sup ratio over the family triples."""
    fs, gs, hs = _members(f_family, g_family, h_family, ws=ws)
    cases = []
    for i, j, k in _triples(fs, gs, hs, max_cases, f_family.seed):
        result = tail_commutator_check(fs[i], gs[j], hs[k], M, ws, order_gap=order_gap, eps=eps)
        cases.append(
            FitCase(
                lhs=result["lhs"],
                rhs=result["rhs"],
                label=f"{fs[i].label}|{gs[j].label}|{hs[k].label}",
            )
        )
    trail = sample_trail([case.ratio for case in cases])
    constant = max(case.ratio for case in cases)
    return FitReport(
        inequality=TAIL_COMMUTATOR,
        cases=tuple(cases),
        constants={"C": constant},
        trail=tuple(trail),
        verdict=decide(trail, extra_ok=math.isfinite(constant)),
        parameters={
            "gamma": ws.xs.gamma,
            "s": ws.xs.s,
            "symbol": M.to_dict(),
            "order_gap": order_gap,
            "eps": eps,
        },
        seeds=(f_family.seed, g_family.seed, h_family.seed),
    )


def fourth_moment_production(f: Distribution, ws: CollisionWorkspace) -> float:
    """int |v|^4 Q(f, f) dv from the discrete operator."""
    return quadrature(apply_q(f, f, ws), Weight("speed_power", ell=4.0))


def moment_relaxation_rate(traj: Trajectory) -> float:
    """
    Decay rate of M4 - 5 E2^2 / (3 rho) along a trajectory, by a least-squares fit of its log.

    NaN when the deviation is not positive at two checkpoints or more.
    """
    times, logs = [], []
    for t, f in zip(traj.times, traj.states):
        rho = quadrature(f, "one")
        e2 = quadrature(f, "speed_squared")
        gap = quadrature(f, Weight("speed_power", ell=4.0)) - 5.0 * e2 * e2 / (3.0 * rho)
        if gap > 0.0:
            times.append(t)
            logs.append(math.log(gap))
    if len(times) < 2:
        return math.nan
    slope, _ = np.polyfit(np.asarray(times), np.asarray(logs), 1)
    return float(-slope)


def check_moment_bkw(
    ws: CollisionWorkspace,
    *,
    shapes: Sequence[float] = (0.6, 0.7, 0.8, 0.9),
    tolerance: float = BKW_TOLERANCE,
    trajectory: Trajectory | None = None,
) -> FitReport:
    """
    Fourth-moment production of the discrete Q on BKW profiles against the closed form
    (beta/2)(-rho M4 + 2 E2^2 - sum P^2) and the exact BKW derivative 7.5 beta (1 - K)^2.

    With a trajectory, its fitted relaxation rate is also compared with beta rho / 2.
    """
    xs = ws.xs
    notes: list[str] = []
    hypotheses = xs.gamma == 0.0
    if not hypotheses:
        notes.append("the fourth-moment oracle holds for gamma = 0 only")
    beta = angular_relaxation_constant(xs)
    cases: list[FitCase] = []
    for K in shapes:
        f = bkw_profile(ws.grid, K)
        production = fourth_moment_production(f, ws)
        oracle = fourth_moment_rate(f, xs) if hypotheses else math.nan
        exact = 7.5 * beta * (1.0 - K) ** 2
        cases.append(
            FitCase(
                lhs=abs(production - oracle) if hypotheses else 0.0,
                rhs=abs(oracle) if hypotheses else 1.0,
                terms={"production": production, "oracle": oracle, "exact": exact},
                label=f"bkw[K={K:g}]",
            )
        )
    constants = {"relative_error": max(case.ratio for case in cases), "beta": beta}
    if trajectory is not None:
        observed = moment_relaxation_rate(trajectory)
        expected = fourth_moment_relaxation_rate(xs, quadrature(trajectory.states[0], "one"))
        constants["observed_rate"] = observed
        constants["expected_rate"] = expected
        cases.append(
            FitCase(
                lhs=abs(observed - expected),
                rhs=abs(expected),
                terms={"observed": observed, "expected": expected},
                label="relaxation",
            )
        )
        constants["relative_error"] = max(case.ratio for case in cases)
    error = constants["relative_error"]
    trail = [TrailLevel("grid", ws.grid.n_points, error, len(cases))]
    verdict = decide(trail, hypotheses_met=hypotheses, extra_ok=error <= tolerance)
    if hypotheses and not error <= tolerance:
        verdict = FAIL
    return FitReport(
        inequality=MOMENT_BKW,
        cases=tuple(cases),
        constants=constants,
        trail=tuple(trail),
        verdict=verdict,
        parameters={"shapes": list(shapes), "tolerance": tolerance, "theta_min": xs.rule.theta_min},
        notes=tuple(notes),
    )
