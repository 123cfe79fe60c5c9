"""Mollifier symbol and schedule contracts."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np

from boltzmann_smoothing.grid_ttc.tools.lattice_tools import VelocityGrid

RESTRICTION = "restriction"
SLIGHT = "slight"
CONSTRAINT_TAGS = (RESTRICTION, SLIGHT)


def bracket(xi_norm: np.ndarray | float) -> np.ndarray:
    """<xi> = (1 + |xi|^2)^{1/2}."""
    return np.sqrt(1.0 + np.asarray(xi_norm, dtype=float) ** 2)


@dataclass(frozen=True)
class MollifierSymbol:
    """M(xi) = <xi>^lam / (1 + delta <xi>)^n0."""

    lam: float
    delta: float = 0.0
    n0: float = 0.0

    def validate(self) -> None:
        if not math.isfinite(self.lam):
            raise ValueError(f"lambda must be finite, got {self.lam}")
        if not 0.0 <= self.delta <= 1.0:
            raise ValueError(f"delta={self.delta} violates 0 <= delta <= 1")
        if not math.isfinite(self.n0) or self.n0 < 0:
            raise ValueError(f"n0={self.n0} violates n0 >= 0")

    @property
    def is_identity(self) -> bool:
        return self.lam == 0.0 and (self.n0 == 0.0 or self.delta == 0.0)

    def evaluate(self, xi_norm: np.ndarray | float) -> np.ndarray:
        """Symbol at |xi| (array in, array out)."""
        b = bracket(xi_norm)
        return b**self.lam / (1.0 + self.delta * b) ** self.n0

    def on_lattice(self, grid: VelocityGrid) -> np.ndarray:
        """Symbol on the dual lattice, canonical FFT order."""
        return self.evaluate(grid.frequency_norm)

    def with_delta(self, delta: float) -> MollifierSymbol:
        return MollifierSymbol(lam=self.lam, delta=float(delta), n0=self.n0)

    def with_lambda(self, lam: float) -> MollifierSymbol:
        return MollifierSymbol(lam=float(lam), delta=self.delta, n0=self.n0)

    def to_dict(self) -> dict[str, Any]:
        return {"lambda": self.lam, "delta": self.delta, "n0": self.n0}


def make_symbol(lam: float, delta: float = 0.0, n0: float = 0.0) -> MollifierSymbol:
    symbol = MollifierSymbol(lam=float(lam), delta=float(delta), n0=float(n0))
    symbol.validate()
    return symbol


@dataclass(frozen=True)
class MollifierSchedule:
    """
    lambda(t) = N (t - t_start) + a with fixed delta and n0 (N t + a for a schedule starting at 0).

    ``tags`` records which of the two order constraints holds over [t_start, t_end] for the
    configured (gamma, s):
        restriction: 5 + gamma >= 2 (n0 - lambda(t))
        slight:      4 + gamma + 2 s > 2 (n0 - lambda(t))
    """

    rate: float
    start: float
    delta: float = 0.0
    n0: float = 0.0
    gamma: float = 0.0
    s: float = 0.5
    t_start: float = 0.0
    t_end: float = 1.0
    tags: tuple[str, ...] = field(default=())

    def validate(self) -> None:
        if not math.isfinite(self.rate) or self.rate < 0:
            raise ValueError(f"schedule rate N={self.rate} must be >= 0")
        if not math.isfinite(self.start):
            raise ValueError("schedule start a must be finite")
        if self.t_end < self.t_start:
            raise ValueError(f"schedule range [{self.t_start}, {self.t_end}] is empty")
        self.symbol_at(self.t_start).validate()
        unknown = set(self.tags) - set(CONSTRAINT_TAGS)
        if unknown:
            raise ValueError(f"unknown constraint tags {sorted(unknown)}")

    def lam(self, t: float) -> float:
        return self.rate * (t - self.t_start) + self.start

    def symbol_at(self, t: float, delta: float | None = None) -> MollifierSymbol:
        return MollifierSymbol(
            lam=self.lam(t), delta=self.delta if delta is None else float(delta), n0=self.n0
        )

    def time_derivative(self, t: float, xi_norm: np.ndarray) -> np.ndarray:
        """d/dt M_{lambda(t)}(xi) = N log<xi> M_{lambda(t)}(xi)."""
        return self.rate * np.log(bracket(xi_norm)) * self.symbol_at(t).evaluate(xi_norm)

    def restriction_holds(self) -> bool:
        # lambda is nondecreasing, so the binding time is t_start
        return 5.0 + self.gamma >= 2.0 * (self.n0 - self.lam(self.t_start)) - 1e-12

    def slight_holds(self) -> bool:
        return 4.0 + self.gamma + 2.0 * self.s > 2.0 * (self.n0 - self.lam(self.t_start))

    def derived_tags(self) -> tuple[str, ...]:
        tags = []
        if self.restriction_holds():
            tags.append(RESTRICTION)
        if self.slight_holds():
            tags.append(SLIGHT)
        return tuple(tags)

    def to_dict(self) -> dict[str, Any]:
        return {
            "N": self.rate,
            "a": self.start,
            "delta": self.delta,
            "n0": self.n0,
            "gamma": self.gamma,
            "s": self.s,
            "t_start": self.t_start,
            "t_end": self.t_end,
            "tags": list(self.tags),
        }


def make_schedule(
    rate: float,
    start: float,
    *,
    delta: float = 0.0,
    n0: float | None = None,
    gamma: float = 0.0,
    s: float = 0.5,
    t_start: float = 0.0,
    t_end: float = 1.0,
) -> MollifierSchedule:
    """Build a schedule; n0 defaults to max(0, a + (5 + gamma)/2) and the tags are derived."""
    if n0 is None:
        n0 = max(0.0, start + 0.5 * (5.0 + gamma))
    draft = MollifierSchedule(
        rate=float(rate),
        start=float(start),
        delta=float(delta),
        n0=float(n0),
        gamma=float(gamma),
        s=float(s),
        t_start=float(t_start),
        t_end=float(t_end),
    )
    schedule = replace(draft, tags=draft.derived_tags())
    schedule.validate()
    return schedule
