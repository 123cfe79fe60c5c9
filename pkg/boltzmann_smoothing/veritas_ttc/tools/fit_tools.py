"""
Constant fitting for inequalities of the forms

    lhs <= C rhs                      (one-sided, C = sup lhs / rhs)
    c A - C B <= lhs                  (two-term: a coercive gain c against a remainder C)

and the FitReport / verdict contract shared by every check.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy.optimize import linprog

from boltzmann_smoothing import config
from boltzmann_smoothing.utils import log

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
VERDICTS = (PASS, FAIL, INCONCLUSIVE)

REMAINDER_SLACK = 2.0
"""Default cap on the remainder constant, as a multiple of its natural scale."""


def ratio(lhs: float, rhs: float) -> float:
    """lhs / rhs with 0/0 = 0 and x/0 = inf."""
    if lhs <= 0.0:
        return 0.0 if rhs >= 0.0 or lhs == 0.0 else math.inf
    if rhs <= 0.0:
        return math.inf
    return lhs / rhs


def sup_ratio(lhs: Sequence[float], rhs: Sequence[float]) -> float:
    values = [ratio(a, b) for a, b in zip(lhs, rhs)]
    return max(values) if values else 0.0


@dataclass(frozen=True)
class LinearFit:
    """Fitted (c, C) for c A - C B <= lhs."""

    c: float
    C: float
    cap: float
    method: str
    feasible: bool = True

    def to_dict(self) -> dict[str, Any]:
        return {
            "c": self.c,
            "C": self.C,
            "cap": self.cap,
            "method": self.method,
            "feasible": self.feasible,
        }


def remainder_needed(c: float, lhs: np.ndarray, A: np.ndarray, B: np.ndarray) -> float:
    """Smallest C >= 0 with c A - C B <= lhs; inf when a case with B = 0 is violated."""
    excess = c * A - lhs
    positive_b = B > 0.0
    if np.any(excess[~positive_b] > 1e-14 * (np.abs(lhs[~positive_b]) + 1.0)):
        return math.inf
    if not np.any(positive_b):
        return 0.0
    return max(0.0, float(np.max(excess[positive_b] / B[positive_b])))


def remainder_scale(A: np.ndarray, B: np.ndarray) -> float:
    """max A_i / B_i over the cases with B_i > 0 (0 when there are none)."""
    positive = B > 0.0
    if not np.any(positive):
        return 0.0
    return float(np.max(A[positive] / B[positive]))


def _sweep_fit(lhs: np.ndarray, A: np.ndarray, B: np.ndarray, cap: float) -> LinearFit:
    """Largest c with remainder_needed(c) <= cap by bisection (remainder_needed is monotone)."""
    base = remainder_needed(0.0, lhs, A, B)
    if base > cap:
        return LinearFit(c=0.0, C=base, cap=cap, method="sweep", feasible=False)
    low, high = 0.0, 1.0
    while remainder_needed(high, lhs, A, B) <= cap and high < 1e300:
        low, high = high, 2.0 * high
    for _ in range(200):
        mid = 0.5 * (low + high)
        if remainder_needed(mid, lhs, A, B) <= cap:
            low = mid
        else:
            high = mid
    return LinearFit(c=low, C=remainder_needed(low, lhs, A, B), cap=cap, method="sweep")


def fit_two_term(
    lhs: Sequence[float],
    A: Sequence[float],
    B: Sequence[float],
    *,
    cap: float | None = None,
) -> LinearFit:
    """
    Maximize c, then minimize C, subject to c A_i - C B_i <= lhs_i, c >= 0, 0 <= C <= cap.

    ``cap`` defaults to REMAINDER_SLACK times the larger of the remainder needed at c = 0 and
    max A_i / B_i (the remainder that offsets a unit gain); pass the cap of a reference fit to
    compare subfamilies on equal terms. Solved with two linear programs; the
    bisection sweep is the fallback when the solver does not report success.
    """
    lhs_a = np.asarray(lhs, dtype=float)
    a_a = np.asarray(A, dtype=float)
    b_a = np.asarray(B, dtype=float)
    if lhs_a.size == 0:
        raise ValueError("fit_two_term needs at least one case")
    if np.any(a_a < 0.0) or np.any(b_a < 0.0):
        raise ValueError("fit_two_term needs nonnegative A and B")
    base = remainder_needed(0.0, lhs_a, a_a, b_a)
    if cap is None:
        cap = REMAINDER_SLACK * max(base, remainder_scale(a_a, b_a))
    if not math.isfinite(base) or base > cap * (1.0 + 1e-12) + 1e-300:
        return LinearFit(c=0.0, C=base, cap=cap, method="none", feasible=False)
    # variables x = (c, C); constraints A c - B C <= lhs
    # each row scaled by its own magnitude
    scale = np.maximum(np.maximum(np.abs(lhs_a), a_a), np.maximum(b_a, 1e-300))
    matrix = np.stack([a_a, -b_a], axis=1) / scale[:, None]
    bound = lhs_a / scale
    first = linprog(
        c=[-1.0, 0.0], A_ub=matrix, b_ub=bound, bounds=[(0.0, None), (0.0, cap)], method="highs"
    )
    if first.status == 3:
        # unbounded c: every case with A > 0 also has B > 0 and the cap is never binding
        return LinearFit(c=math.inf, C=cap, cap=cap, method="linprog")
    if not first.success:
        log(f"⚠️ linprog failed ({first.message}); falling back to the sweep", "WARN")
        return _sweep_fit(lhs_a, a_a, b_a, cap)
    best_c = float(first.x[0])
    floor_c = best_c * (1.0 - 1e-9)
    second = linprog(
        c=[0.0, 1.0],
        A_ub=matrix,
        b_ub=bound,
        bounds=[(floor_c, floor_c), (0.0, cap)],
        method="highs",
    )
    if not second.success:
        return LinearFit(c=best_c, C=cap, cap=cap, method="linprog")
    return LinearFit(c=best_c, C=float(second.x[1]), cap=cap, method="linprog")


@dataclass(frozen=True)
class FitCase:
    """One evaluated case: lhs, the assembled rhs (at unit constants) and their ratio."""

    lhs: float
    rhs: float
    terms: dict[str, float] = field(default_factory=dict)
    label: str = ""

    @property
    def ratio(self) -> float:
        return ratio(self.lhs, self.rhs)

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ratio": self.ratio,
            "terms": dict(self.terms),
        }


@dataclass(frozen=True)
class TrailLevel:
    """One refinement level: what was refined and the constant fitted there."""

    refinement: str
    level: Any
    constant: float
    cases: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "refinement": self.refinement,
            "level": self.level,
            "constant": self.constant,
            "cases": self.cases,
        }


@dataclass(frozen=True)
class FitReport:
    """Result of one inequality check."""

    inequality: str
    cases: tuple[FitCase, ...]
    constants: dict[str, float]
    trail: tuple[TrailLevel, ...]
    verdict: str
    parameters: dict[str, Any] = field(default_factory=dict)
    seeds: tuple[int, ...] = ()
    notes: tuple[str, ...] = ()

    def validate(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def sup_ratio(self) -> float:
        return max((case.ratio for case in self.cases), default=0.0)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> dict[str, Any]:
        return {
            "inequality": self.inequality,
            "verdict": self.verdict,
            "sup_ratio": self.sup_ratio,
            "constants": dict(self.constants),
            "parameters": dict(self.parameters),
            "seeds": list(self.seeds),
            "trail": [level.to_dict() for level in self.trail],
            "cases": [case.to_dict() for case in self.cases],
            "notes": list(self.notes),
        }


def trail_drift(trail: Sequence[TrailLevel]) -> float:
    """Largest ratio between consecutive positive constants of one refinement kind."""
    worst = 1.0
    by_kind: dict[str, list[float]] = {}
    for level in trail:
        by_kind.setdefault(level.refinement, []).append(level.constant)
    for values in by_kind.values():
        if any(not math.isfinite(v) for v in values):
            return math.inf
        positive = [v for v in values if v > 0.0]
        for a, b in zip(positive, positive[1:]):
            worst = max(worst, max(a, b) / min(a, b))
    return worst


def decide(
    trail: Sequence[TrailLevel],
    *,
    hypotheses_met: bool = True,
    extra_ok: bool = True,
    drift_limit: float | None = None,
) -> str:
    """
    Verdict from a refinement trail.

    pass: hypotheses met, every constant finite, drift below the limit, ``extra_ok``.
    fail: a constant that is non-finite or keeps growing by at least the limit at the last
    refinement step. Anything else is inconclusive.
    """
    limit = config.DRIFT_FACTOR if drift_limit is None else drift_limit
    if not hypotheses_met:
        return INCONCLUSIVE
    drift = trail_drift(trail)
    if drift < limit and extra_ok:
        return PASS
    constants = [level.constant for level in trail]
    if any(math.isinf(v) for v in constants):
        return FAIL
    if len(constants) >= 2 and constants[-2] > 0 and constants[-1] / constants[-2] >= limit:
        return FAIL
    return INCONCLUSIVE
