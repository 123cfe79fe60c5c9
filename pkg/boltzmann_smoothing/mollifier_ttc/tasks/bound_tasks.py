"""
Pointwise symbol inequalities: derivative bounds and the difference bound.

Constants are fitted as sup ratios over random samples and reported per (lambda, n0, p);
they are never pooled across parameter sets.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from itertools import combinations_with_replacement
from typing import Any

import numpy as np

from boltzmann_smoothing import config
from boltzmann_smoothing.mollifier_ttc.tools.sweep_tools import (
    REGIONS,
    FrequencySample,
    SweepReport,
    step_drift,
)
from boltzmann_smoothing.mollifier_ttc.tools.symbol_tools import MollifierSymbol, bracket
from boltzmann_smoothing.utils import log

SQRT2 = math.sqrt(2.0)
DEFAULT_DELTAS: tuple[float, ...] = (1.0, 1e-1, 1e-2, 1e-3)
FD_STEP = 1e-4
"""Relative finite-difference step, scaled by <xi>."""


def _values(M: MollifierSymbol, points: np.ndarray) -> np.ndarray:
    return M.evaluate(np.linalg.norm(points, axis=-1))


def _first_derivatives(M: MollifierSymbol, points: np.ndarray, step: np.ndarray) -> np.ndarray:
    out = np.empty(points.shape)
    for i in range(3):
        e = np.zeros(3)
        e[i] = 1.0
        shift = step[:, None] * e
        out[:, i] = (_values(M, points + shift) - _values(M, points - shift)) / (2.0 * step)
    return out


def _second_derivatives(M: MollifierSymbol, points: np.ndarray, step: np.ndarray) -> np.ndarray:
    """All six second derivatives d_i d_j (i <= j) by central differences."""
    centre = _values(M, points)
    columns = []
    for i, j in combinations_with_replacement(range(3), 2):
        ei = np.zeros(3)
        ei[i] = 1.0
        ej = np.zeros(3)
        ej[j] = 1.0
        a = step[:, None] * ei
        b = step[:, None] * ej
        if i == j:
            value = (_values(M, points + a) - 2.0 * centre + _values(M, points - a)) / step**2
        else:
            value = (
                _values(M, points + a + b)
                - _values(M, points + a - b)
                - _values(M, points - a + b)
                + _values(M, points - a - b)
            ) / (4.0 * step**2)
        columns.append(value)
    return np.stack(columns, axis=1)


def derivative_ratios(M: MollifierSymbol, points: np.ndarray) -> dict[int, np.ndarray]:
    """max_alpha |d^alpha M| <xi>^|alpha| / M at each point, for |alpha| = 1 and 2."""
    M.validate()
    norms = np.linalg.norm(points, axis=-1)
    weight = bracket(norms)
    step = FD_STEP * weight
    values = _values(M, points)
    first = np.abs(_first_derivatives(M, points, step)).max(axis=1)
    second = np.abs(_second_derivatives(M, points, step)).max(axis=1)
    return {1: first * weight / values, 2: second * weight**2 / values}


def symbol_derivative_bound_check(
    M: MollifierSymbol,
    sample: FrequencySample,
    *,
    deltas: Sequence[float] = DEFAULT_DELTAS + (0.0,),
) -> dict[str, Any]:
    """
    Fitted C_alpha in |d^alpha M(xi)| <= C_alpha M(xi) <xi>^{-|alpha|} for |alpha| <= 2.

    The symbol's lambda and n0 are kept; delta runs over ``deltas``. The sample includes the
    origin unless told otherwise.
    """
    sample.validate()
    if not deltas:
        raise ValueError("symbol_derivative_bound_check needs at least one delta")
    points = sample.draw()
    per_delta: dict[float, dict[int, float]] = {}
    for delta in deltas:
        ratios = derivative_ratios(M.with_delta(delta), points)
        per_delta[float(delta)] = {order: float(r.max()) for order, r in ratios.items()}
    report: dict[str, Any] = {
        "symbol": M.to_dict(),
        "sample": sample.to_dict(),
        "deltas": [float(d) for d in deltas],
        "constants": {repr(d): {f"C{k}": v for k, v in c.items()} for d, c in per_delta.items()},
    }
    ordered = sorted(per_delta, reverse=True)
    for order in (1, 2):
        values = [per_delta[d][order] for d in ordered]
        report[f"C{order}"] = max(values)
        report[f"delta_drift_{order}"] = step_drift(values)
    report["stable"] = all(
        math.isfinite(report[f"C{k}"]) and report[f"delta_drift_{k}"] < config.DRIFT_FACTOR
        for k in (1, 2)
    )
    return report


def classify_regions(xi: np.ndarray, xi_star: np.ndarray) -> np.ndarray:
    """Region index 0 (far), 1 (comparable) or 2 (near); ties go to the earlier region."""
    size = np.linalg.norm(np.asarray(xi, dtype=float), axis=-1)
    star = bracket(np.linalg.norm(np.asarray(xi_star, dtype=float), axis=-1))
    return np.where(star >= SQRT2 * size, 0, np.where(star >= 0.5 * size, 1, 2))


def _difference_terms(
    xi: np.ndarray, xi_star: np.ndarray, M: MollifierSymbol, p: float | None
) -> tuple[np.ndarray, np.ndarray, np.ndarray | None, np.ndarray]:
    xi = np.asarray(xi, dtype=float)
    xi_star = np.asarray(xi_star, dtype=float)
    gap = xi - xi_star
    size = np.linalg.norm(xi, axis=-1)
    b_xi = bracket(size)
    b_star = bracket(np.linalg.norm(xi_star, axis=-1))
    b_gap = bracket(np.linalg.norm(gap, axis=-1))
    m_xi = M.evaluate(size)
    m_gap = M.evaluate(np.linalg.norm(gap, axis=-1))
    m_star = M.evaluate(np.linalg.norm(xi_star, axis=-1))
    region = classify_regions(xi, xi_star)
    far, comparable, near = (region == 0), (region == 1), (region == 2)
    lhs = np.abs(m_xi - m_gap)
    exchange = m_star * (1.0 + M.delta * b_gap) ** M.n0 / b_gap**M.lam
    quotient = b_star / b_xi
    rhs_indicator = (
        b_xi**M.lam * far
        + m_gap * ((far | comparable) + quotient * near)
        + m_gap * exchange * comparable
    )
    rhs_power = None
    if p is not None:
        rhs_power = m_gap * (quotient**p * far + (exchange + 1.0) * comparable + quotient * near)
    return lhs, rhs_indicator, rhs_power, region


def difference_bound_check(
    xi: np.ndarray, xi_star: np.ndarray, M: MollifierSymbol, p: float
) -> tuple[float, float, float, str]:
    """
    |M(xi) - M(xi - xi*)| with both right-hand sides assembled at C = 1.

    Returns (lhs, rhs_power, rhs_indicator, region): rhs_power is the bound with the
    (<xi*>/<xi>)^p far-field term, valid for p >= n0 - lambda; rhs_indicator the bound with
    the <xi>^lambda far-field term.
    """
    M.validate()
    if p < M.n0 - M.lam:
        raise ValueError(f"p={p} violates p >= n0 - lambda = {M.n0 - M.lam}")
    lhs, rhs_indicator, rhs_power, region = _difference_terms(
        np.atleast_2d(xi), np.atleast_2d(xi_star), M, p
    )
    assert rhs_power is not None
    return float(lhs[0]), float(rhs_power[0]), float(rhs_indicator[0]), REGIONS[int(region[0])]


def _sup_ratio(lhs: np.ndarray, rhs: np.ndarray) -> float:
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(lhs == 0.0, 0.0, lhs / rhs)
    return float(np.max(ratio)) if ratio.size else 0.0


def difference_bound_sweep(
    lam: float,
    n0: float,
    sample: FrequencySample,
    *,
    p: float | None = None,
    deltas: Sequence[float] = DEFAULT_DELTAS,
    doublings: int = 1,
    form: str = "power",
) -> SweepReport:
    """
    Monte-Carlo fit of the difference bound over random (xi, xi*) pairs.

    ``form="power"`` fits the (<xi*>/<xi>)^p variant (p defaults to n0 - lambda);
    ``form="indicator"`` the <xi>^lambda variant. Each doubling draws a fresh sample of twice
    the size; the trail keeps the running sup.
    """
    if form not in ("power", "indicator"):
        raise ValueError(f"unknown difference-bound form {form!r}")
    if not deltas:
        raise ValueError("difference_bound_sweep needs at least one delta")
    sample.validate()
    exponent = (n0 - lam) if p is None else float(p)
    if form == "power" and exponent < n0 - lam:
        raise ValueError(f"p={exponent} violates p >= n0 - lambda = {n0 - lam}")
    trail: dict[float, list[float]] = {float(d): [] for d in deltas}
    region_sup: dict[float, dict[str, float]] = {
        float(d): dict.fromkeys(REGIONS, 0.0) for d in deltas
    }
    sizes: list[int] = []
    level = sample
    for stage in range(doublings + 1):
        xi = level.draw(stream=2 * stage)
        xi_star = level.draw(stream=2 * stage + 1)
        sizes.append(level.count)
        for delta in deltas:
            M = MollifierSymbol(lam=lam, delta=float(delta), n0=n0)
            M.validate()
            lhs, rhs_indicator, rhs_power, region = _difference_terms(
                xi, xi_star, M, exponent if form == "power" else None
            )
            rhs = rhs_power if form == "power" else rhs_indicator
            assert rhs is not None
            running = trail[float(delta)][-1] if trail[float(delta)] else 0.0
            trail[float(delta)].append(max(running, _sup_ratio(lhs, rhs)))
            for index, name in enumerate(REGIONS):
                mask = region == index
                if np.any(mask):
                    region_sup[float(delta)][name] = max(
                        region_sup[float(delta)][name], _sup_ratio(lhs[mask], rhs[mask])
                    )
        level = level.doubled()
    report = SweepReport(
        name=f"difference-{form}",
        parameters={"lambda": lam, "n0": n0, "p": exponent if form == "power" else None},
        deltas=tuple(float(d) for d in deltas),
        sample_sizes=tuple(sizes),
        trail=trail,
        region_sup=region_sup,
        drift_limit=config.DRIFT_FACTOR,
    )
    log(
        f"🧮 difference bound ({form}) lambda={lam:g} n0={n0:g}: C={report.constant:.4g}, "
        f"sample drift {report.sample_drift:.3g}, delta drift {report.delta_drift:.3g}",
        "DEBUG",
    )
    return report
