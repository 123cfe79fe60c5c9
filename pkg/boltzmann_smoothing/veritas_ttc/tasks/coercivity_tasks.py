"""
Coercivity checks: the uniform lower bound of -(Q(g, f), f), its entropy-dissipation form and
the L^q bound that finite dissipation implies.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

from boltzmann_smoothing import config
from boltzmann_smoothing.collision_ttc.tasks.velocity_tasks import coercive_pairing
from boltzmann_smoothing.collision_ttc.tools.workspace_tools import CollisionWorkspace
from boltzmann_smoothing.evolution_ttc.tools.trajectory_tools import Trajectory
from boltzmann_smoothing.functionals_ttc.tasks.dissipation_tasks import symmetrized_dissipation
from boltzmann_smoothing.functionals_ttc.tasks.norm_tasks import (
    lq_weight_norm,
    sqrt_sobolev,
    weighted_lp_norm,
    weighted_sobolev_norm,
)
from boltzmann_smoothing.functionals_ttc.tools.request_tools import UniformClassParams
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution
from boltzmann_smoothing.utils import log
from boltzmann_smoothing.veritas_ttc.tools.family_tools import FunctionFamily
from boltzmann_smoothing.veritas_ttc.tools.fit_tools import (
    FitCase,
    FitReport,
    LinearFit,
    TrailLevel,
    decide,
    fit_two_term,
)
from boltzmann_smoothing.veritas_ttc.tools.inequality_tools import (
    COERCIVITY,
    COERCIVITY_LQ,
    DISSIPATION_LQ,
    ENTROPY_COERCIVITY,
)
from boltzmann_smoothing.veritas_ttc.tools.request_tools import sample_trail

COERCIVITY_VARIANTS = ("base", "lq")


def _lq_exponent(gamma: float, s_prime: float) -> float:
    return 3.0 / (3.0 + gamma + 2.0 * s_prime)


def _coercivity_cases(
    g_members: Sequence[Distribution],
    f_members: Sequence[Distribution],
    ws: CollisionWorkspace,
    variant: str,
    s_prime: float | None,
) -> tuple[list[float], list[float], list[float], list[str]]:
    xs = ws.xs
    half_gamma = 0.5 * xs.gamma
    lhs: list[float] = []
    gain: list[float] = []
    remainder: list[float] = []
    labels: list[str] = []
    f_gain = [weighted_sobolev_norm(f, xs.s, half_gamma) ** 2 for f in f_members]
    if variant == "base":
        low = max(-half_gamma, 0.0)
        f_rest = [weighted_sobolev_norm(f, low, half_gamma) ** 2 for f in f_members]
    else:
        assert s_prime is not None
        f_rest = [weighted_sobolev_norm(f, s_prime, half_gamma) ** 2 for f in f_members]
    for g in g_members:
        factor = 1.0
        if variant == "lq":
            assert s_prime is not None
            factor += lq_weight_norm(g, _lq_exponent(xs.gamma, s_prime), -xs.gamma)
        for f, a, b in zip(f_members, f_gain, f_rest):
            pairing, _ = coercive_pairing(g, f, ws)
            lhs.append(pairing)
            gain.append(a)
            remainder.append(factor * b)
            labels.append(f"{g.label}|{f.label}")
    return lhs, gain, remainder, labels


def _cases(
    fit: LinearFit,
    lhs: Sequence[float],
    A: Sequence[float],
    B: Sequence[float],
    labels: Sequence[str],
) -> tuple[FitCase, ...]:
    """Cases in the form c A <= lhs + C B, so a holding case has ratio <= 1."""
    return tuple(
        FitCase(
            lhs=fit.c * a,
            rhs=value + fit.C * b,
            terms={"pairing": value, "gain": a, "remainder": b},
            label=label,
        )
        for value, a, b, label in zip(lhs, A, B, labels)
    )


def _usable(fit: LinearFit) -> bool:
    return fit.feasible and math.isfinite(fit.c) and fit.c > 0.0


def check_coercivity(
    g_family: FunctionFamily,
    f_family: FunctionFamily,
    ws: CollisionWorkspace,
    *,
    params: UniformClassParams | None = None,
    variant: str = "base",
    s_prime: float | None = None,
    subfamilies: int = 2,
    refinements: Sequence[CollisionWorkspace] = (),
) -> FitReport:
    """
    Fit c0 A - C B <= -(Q(g, f), f) with A = ||<v>^{gamma/2} f||^2_{H^s} and
    B = ||<v>^{gamma/2} f||^2_{H^{(-gamma/2)+}}.

    The lq variant replaces B by
        (1 + ||g||_{L^{3/(3+gamma+2s')}_{-gamma}}) ||<v>^{gamma/2} f||^2_{H^{s'}}
    (one shared remainder constant). Uniformity in g: the g members are split into disjoint
    subfamilies and refitted under the cap of the full fit; their c0 must agree within the
    drift factor.
    """
    if variant not in COERCIVITY_VARIANTS:
        raise ValueError(f"unknown coercivity variant {variant!r}")
    g_family.validate()
    f_family.validate()
    params = params or UniformClassParams(D0=1.0, E0=4.0)
    xs = ws.xs
    notes: list[str] = []
    hypotheses = True
    if variant == "lq":
        if s_prime is None or not 0.0 < s_prime < xs.s:
            raise ValueError(f"lq variant needs 0 < s' < s={xs.s}, got s'={s_prime}")
        if xs.gamma + 2.0 * xs.s > 0.0:
            hypotheses = False
            notes.append("lq variant applies to gamma + 2s <= 0 only")

    g_members = g_family.generate_in_class(ws.grid, params)
    f_members = f_family.generate(ws.grid)
    lhs, A, B, labels = _coercivity_cases(g_members, f_members, ws, variant, s_prime)
    fit = fit_two_term(lhs, A, B)
    trail: list[TrailLevel] = []

    per_g = len(f_members)
    parts = max(1, min(subfamilies, len(g_members)))
    size = len(g_members) // parts
    sub_c: list[float] = []
    for k in range(parts):
        rows = slice(k * size * per_g, (k + 1) * size * per_g)
        sub = fit_two_term(lhs[rows], A[rows], B[rows], cap=fit.cap)
        sub_c.append(sub.c)
        trail.append(TrailLevel("subfamily", k, sub.c, size * per_g))
    uniform = all(c > 0.0 and math.isfinite(c) for c in sub_c) and (
        max(sub_c) / min(sub_c) < config.DRIFT_FACTOR if sub_c and min(sub_c) > 0 else False
    )
    if not uniform:
        notes.append(f"subfamily c0 values {sub_c} disagree beyond the drift factor")

    trail.append(TrailLevel("refinement", ws.grid.n_points, fit.c, len(lhs)))
    for finer in refinements:
        g_fine = g_family.generate_in_class(finer.grid, params)
        f_fine = f_family.generate(finer.grid)
        r_lhs, r_A, r_B, _ = _coercivity_cases(g_fine, f_fine, finer, variant, s_prime)
        refit = fit_two_term(r_lhs, r_A, r_B, cap=fit.cap)
        trail.append(TrailLevel("refinement", finer.grid.n_points, refit.c, len(r_lhs)))

    verdict = decide(trail, hypotheses_met=hypotheses, extra_ok=_usable(fit) and uniform)
    report = FitReport(
        inequality=COERCIVITY if variant == "base" else COERCIVITY_LQ,
        cases=_cases(fit, lhs, A, B, labels),
        constants={
            "c0": fit.c,
            "C": fit.C,
            "cap": fit.cap,
            **{f"c0_sub{k}": c for k, c in enumerate(sub_c)},
        },
        trail=tuple(trail),
        verdict=verdict,
        parameters={
            "variant": variant,
            "gamma": xs.gamma,
            "s": xs.s,
            "s_prime": s_prime,
            "class": params.to_dict(),
            "g_family": g_family.to_dict(),
            "f_family": f_family.to_dict(),
            "fit_method": fit.method,
        },
        seeds=(g_family.seed, f_family.seed),
        notes=tuple(notes),
    )
    mark = "✅" if report.passed else "⚠️"
    log(f"{mark} coercivity ({variant}): c0={fit.c:.4g}, C={fit.C:.4g} -> {verdict}")
    return report


def check_entropy_coercivity(
    source: Trajectory | FunctionFamily,
    ws: CollisionWorkspace,
    *,
    floor: float | None = None,
    refinements: Sequence[CollisionWorkspace] = (),
) -> FitReport:
    """
    Fit c_f ||sqrt f||^2_{H^s_{gamma/2}} <= D(f, f) + C_f ||f||_{L^1_{gamma+}} pointwise in time
    (trajectory checkpoints) or over a positive family.
    """
    xs = ws.xs
    if isinstance(source, Trajectory):
        members = list(source.states)
        seeds: tuple[int, ...] = ()
        origin = {"trajectory": list(source.times)}
    else:
        source.validate()
        if source.signed:
            raise ValueError("entropy coercivity needs a nonnegative family")
        members = source.generate(ws.grid)
        seeds = (source.seed,)
        origin = {"family": source.to_dict()}

    def terms(
        fields: Sequence[Distribution], space: CollisionWorkspace
    ) -> tuple[list[float], list[float], list[float]]:
        d = [symmetrized_dissipation(f, space, floor=floor) for f in fields]
        a = [sqrt_sobolev(f, xs.s, 0.5 * xs.gamma) for f in fields]
        b = [weighted_lp_norm(f, 1.0, max(xs.gamma, 0.0)) for f in fields]
        return d, a, b

    lhs, A, B = terms(members, ws)
    fit = fit_two_term(lhs, A, B)
    half = max(1, len(lhs) // 2)
    trail: list[TrailLevel] = []
    if len(lhs) > half:
        first = fit_two_term(lhs[:half], A[:half], B[:half], cap=fit.cap)
        trail.append(TrailLevel("sample", half, first.c, half))
    trail.append(TrailLevel("sample", len(lhs), fit.c, len(lhs)))
    for finer in refinements:
        if isinstance(source, Trajectory):
            break
        r_lhs, r_A, r_B = terms(source.generate(finer.grid), finer)
        refit = fit_two_term(r_lhs, r_A, r_B, cap=fit.cap)
        trail.append(TrailLevel("refinement", finer.grid.n_points, refit.c, len(r_lhs)))
    labels = [f.label or f"member{i}" for i, f in enumerate(members)]
    verdict = decide(trail, extra_ok=_usable(fit))
    report = FitReport(
        inequality=ENTROPY_COERCIVITY,
        cases=tuple(
            FitCase(
                lhs=fit.c * a,
                rhs=d + fit.C * b,
                terms={"dissipation": d, "sqrt_sobolev": a, "l1": b},
                label=label,
            )
            for d, a, b, label in zip(lhs, A, B, labels)
        ),
        constants={"c_f": fit.c, "C_f": fit.C, "cap": fit.cap},
        trail=tuple(trail),
        verdict=verdict,
        parameters={"gamma": xs.gamma, "s": xs.s, **origin},
        seeds=seeds,
    )
    mark = "✅" if report.passed else "⚠️"
    log(f"{mark} entropy coercivity: c_f={fit.c:.4g}, C_f={fit.C:.4g} -> {verdict}")
    return report


def check_dissipation_lq(
    g_family: FunctionFamily,
    ws: CollisionWorkspace,
    *,
    s_prime: float,
    moment_order: float = 4.0,
    floor: float | None = None,
) -> FitReport:
    """
    ||g||_{L^{3/(3+gamma+2s')}_{-gamma}} <= C (D(g, g) + ||g||_{L^1_ell}) with ell = moment_order.

    Finite dissipation and enough moments control the L^q factor of the lq coercivity variant
    when gamma + 4s > 0.
    """
    xs = ws.xs
    g_family.validate()
    if g_family.signed:
        raise ValueError("dissipation-lq needs a nonnegative family")
    if not 0.0 < s_prime < xs.s:
        raise ValueError(f"needs 0 < s' < s={xs.s}, got s'={s_prime}")
    notes: list[str] = []
    hypotheses = xs.gamma + 4.0 * xs.s > 0.0
    if not hypotheses:
        notes.append("gamma + 4s <= 0: finite dissipation gives no L^q control")
    q = _lq_exponent(xs.gamma, s_prime)
    cases: list[FitCase] = []
    for g in g_family.generate(ws.grid):
        d = symmetrized_dissipation(g, ws, floor=floor)
        moment = weighted_lp_norm(g, 1.0, moment_order)
        cases.append(
            FitCase(
                lhs=lq_weight_norm(g, q, -xs.gamma),
                rhs=d + moment,
                terms={"dissipation": d, "moment": moment},
                label=g.label,
            )
        )
    trail = sample_trail([case.ratio for case in cases])
    constant = max(case.ratio for case in cases)
    verdict = decide(trail, hypotheses_met=hypotheses, extra_ok=math.isfinite(constant))
    return FitReport(
        inequality=DISSIPATION_LQ,
        cases=tuple(cases),
        constants={"C": constant},
        trail=tuple(trail),
        verdict=verdict,
        parameters={
            "gamma": xs.gamma,
            "s": xs.s,
            "s_prime": s_prime,
            "q": q,
            "moment_order": moment_order,
            "g_family": g_family.to_dict(),
        },
        seeds=(g_family.seed,),
        notes=tuple(notes),
    )
