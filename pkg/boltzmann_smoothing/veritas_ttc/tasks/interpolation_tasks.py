"""
Interpolation inequalities: weighted Sobolev interpolation (fitted constant) and the weighted
L^q bound with its explicit constant 2 (asserted, not fitted).
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from boltzmann_smoothing.functionals_ttc.tasks.norm_tasks import weighted_sobolev_norm
from boltzmann_smoothing.grid_ttc.tasks.quadrature_tasks import Weight, weight_values
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution, VelocityGrid
from boltzmann_smoothing.utils import log, reduce_sum
from boltzmann_smoothing.veritas_ttc.tools.family_tools import FunctionFamily
from boltzmann_smoothing.veritas_ttc.tools.fit_tools import (
    FAIL,
    PASS,
    FitCase,
    FitReport,
    TrailLevel,
    decide,
)
from boltzmann_smoothing.veritas_ttc.tools.inequality_tools import INTERP_LQ, INTERP_SOBOLEV
from boltzmann_smoothing.veritas_ttc.tools.request_tools import sample_trail

LQ_CONSTANT = 2.0
LQ_TOLERANCE = 1e-8


def check_interpolation_sobolev(
    family: FunctionFamily,
    grid: VelocityGrid,
    *,
    k: float,
    p: float,
    delta: float,
    refinements: Sequence[VelocityGrid] = (),
) -> FitReport:
    """
    ||f||^2_{H^k_p} <= C_delta ||f||_{H^{k-delta}_{2p}} ||f||_{H^{k+delta}}.

    For p = 0 the bound is Cauchy-Schwarz in frequency, so every ratio is at most 1.
    """
    if p < 0.0:
        raise ValueError(f"weight p must be >= 0, got {p}")
    if not delta > 0.0:
        raise ValueError(f"interpolation gap must be > 0, got {delta}")
    family.validate()

    def cases_on(space: VelocityGrid) -> list[FitCase]:
        out = []
        for f in family.generate(space):
            middle = weighted_sobolev_norm(f, k, p)
            low = weighted_sobolev_norm(f, k - delta, 2.0 * p)
            high = weighted_sobolev_norm(f, k + delta, 0.0)
            out.append(
                FitCase(
                    lhs=middle**2,
                    rhs=low * high,
                    terms={"low": low, "high": high},
                    label=f.label,
                )
            )
        return out

    cases = cases_on(grid)
    trail = sample_trail([case.ratio for case in cases])
    constant = max(case.ratio for case in cases)
    for finer in refinements:
        refined = max(case.ratio for case in cases_on(finer))
        trail.append(TrailLevel("grid", finer.n_points, refined, family.count))
        constant = max(constant, refined)
    verdict = decide(trail, extra_ok=math.isfinite(constant))
    log(f"🧮 sobolev interpolation k={k:g} p={p:g} delta={delta:g}: C={constant:.4g}", "DEBUG")
    return FitReport(
        inequality=INTERP_SOBOLEV,
        cases=tuple(cases),
        constants={"C_delta": constant},
        trail=tuple(trail),
        verdict=verdict,
        parameters={"k": k, "p": p, "delta": delta, "family": family.to_dict()},
        seeds=(family.seed,),
    )


def lq_exponents(p: float, q: float, ell: float) -> dict[str, float]:
    """Exponents of ||f||_{L^q_ell} <= 2 ||f||_{L^p}^a ||f||_{L^1_m}^b."""
    if not 1.0 < q < p:
        raise ValueError(f"needs 1 < q < p, got q={q}, p={p}")
    return {
        "a": p * (q - 1.0) / (q * (p - 1.0)),
        "b": (p - q) / (q * (p - 1.0)),
        "m": ell * q * (p - 1.0) / (p - q),
    }


def lq_terms(f: Distribution, p: float, q: float, ell: float) -> dict[str, float]:
    """
    Both sides of the L^q bound and the two pieces of the level split.

    Weights are (1 + |v|)^ell, as in weighted_lp_norm. The split is taken at
    |f|^(p-q) = mu^-1 (1 + |v|)^(ell q) with
    mu = ||f||_{L^1_m}^((p-q)/(p-1)) ||f||_{L^p}^(-p(p-q)/(p-1)); the low piece is bounded by
    mu ||f||_p^p and the high piece by mu^((q-1)/(q-p)) ||f||_{L^1_m}.
    """
    exps = lq_exponents(p, q, ell)
    grid = f.grid
    cell = grid.cell_volume
    magnitude = np.abs(f.values)
    affine = weight_values(grid, Weight("affine", ell=1.0))
    density = magnitude**q * affine ** (ell * q)
    lq = (cell * reduce_sum(density)) ** (1.0 / q)
    lp_power = cell * reduce_sum(magnitude**p)
    l1m = cell * reduce_sum(magnitude * affine ** exps["m"])
    lp = lp_power ** (1.0 / p)
    rhs = LQ_CONSTANT * lp ** exps["a"] * l1m ** exps["b"]
    terms = {"lq": lq, "lp": lp, "l1m": l1m, "rhs": rhs}
    if lp_power <= 0.0:
        terms.update(mu=math.nan, low=0.0, low_bound=0.0, high=0.0, high_bound=0.0)
        return terms
    mu = l1m ** ((p - q) / (p - 1.0)) * lp ** (-p * (p - q) / (p - 1.0))
    low_set = affine ** (ell * q) <= mu * magnitude ** (p - q)
    terms.update(
        mu=mu,
        low=cell * reduce_sum(np.where(low_set, density, 0.0)),
        low_bound=mu * lp_power,
        high=cell * reduce_sum(np.where(low_set, 0.0, density)),
        high_bound=mu ** ((q - 1.0) / (q - p)) * l1m,
    )
    return terms


def _within(value: float, bound: float) -> bool:
    return value - bound <= LQ_TOLERANCE * max(abs(bound), 1.0)


def check_interpolation_lq(
    family: FunctionFamily,
    grid: VelocityGrid,
    *,
    p: float,
    q: float,
    ell: float,
) -> FitReport:
    """
    ||f||_{L^q_ell} <= 2 ||f||_{L^p}^{p(q-1)/(q(p-1))} ||f||_{L^1_m}^{(p-q)/(q(p-1))}
    with m = ell q (p - 1) / (p - q) and (1 + |v|) weights.

    The constant is asserted: every case must hold up to the quadrature tolerance, and so must
    both pieces of the level split.
    """
    exps = lq_exponents(p, q, ell)
    family.validate()
    cases: list[FitCase] = []
    failures: list[str] = []
    for f in family.generate(grid):
        terms = lq_terms(f, p, q, ell)
        # rhs already carries the constant 2
        cases.append(FitCase(lhs=terms["lq"], rhs=terms["rhs"], terms=terms, label=f.label))
        if not _within(terms["lq"], terms["rhs"]):
            failures.append(f"{f.label}: {terms['lq']:.6g} > {terms['rhs']:.6g}")
        if not _within(terms["low"], terms["low_bound"]):
            failures.append(f"{f.label}: low piece above mu ||f||_p^p")
        if not _within(terms["high"], terms["high_bound"]):
            failures.append(f"{f.label}: high piece above its bound")
    worst = max(case.ratio for case in cases)
    verdict = PASS if not failures else FAIL
    mark = "✅" if verdict == PASS else "❌"
    log(f"{mark} L^q bound p={p:g} q={q:g} ell={ell:g}: worst ratio {worst:.6f} of constant 2")
    return FitReport(
        inequality=INTERP_LQ,
        cases=tuple(cases),
        constants={"C": LQ_CONSTANT, "worst_ratio": worst},
        trail=tuple(sample_trail([case.ratio for case in cases])),
        verdict=verdict,
        parameters={"p": p, "q": q, "ell": ell, **exps, "family": family.to_dict()},
        seeds=(family.seed,),
        notes=tuple(failures),
    )


def check_interpolation_lq_sweep(
    family: FunctionFamily,
    grid: VelocityGrid,
    *,
    ps: Sequence[float] = (2.0, 3.0, 4.0),
    ells: Sequence[float] = (0.0, 1.0, 2.0),
    q_points: int = 3,
) -> FitReport:
    """
    The L^q bound over a (p, q, ell) grid; q takes ``q_points`` interior values of (1, p).
    """
    if q_points < 1:
        raise ValueError(f"q_points must be >= 1, got {q_points}")
    cases: list[FitCase] = []
    notes: list[str] = []
    for p in ps:
        for q in np.linspace(1.0, p, q_points + 2)[1:-1]:
            for ell in ells:
                report = check_interpolation_lq(family, grid, p=p, q=float(q), ell=ell)
                tag = f"p={p:g},q={q:g},ell={ell:g}"
                cases.extend(
                    FitCase(case.lhs, case.rhs, case.terms, f"{tag}|{case.label}")
                    for case in report.cases
                )
                notes.extend(f"{tag}: {note}" for note in report.notes)
    worst = max(case.ratio for case in cases)
    return FitReport(
        inequality=INTERP_LQ,
        cases=tuple(cases),
        constants={"C": LQ_CONSTANT, "worst_ratio": worst},
        trail=tuple(sample_trail([case.ratio for case in cases])),
        verdict=PASS if not notes else FAIL,
        parameters={
            "ps": list(ps),
            "ells": list(ells),
            "q_points": q_points,
            "family": family.to_dict(),
        },
        seeds=(family.seed,),
        notes=tuple(notes),
    )
