"""Frequency sampling and sweep reports for the symbol inequality checks."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

REGIONS = ("far", "comparable", "near")
"""
far: <xi*> >= sqrt2 |xi|; comparable: sqrt2 |xi| > <xi*> >= |xi|/2; near: |xi|/2 > <xi*>.
Ties go to the earlier region.
"""


@dataclass(frozen=True)
class FrequencySample:
    """
    Random frequencies in the ball |xi| <= radius.

    Magnitudes are log-uniform in [0, radius] (r = expm1(U log1p(radius))) so every
    scale is visited; directions are uniform on the sphere.
    """

    count: int = 256
    radius: float = 64.0
    seed: int = 0
    include_origin: bool = True

    def validate(self) -> None:
        if self.count < 1:
            raise ValueError(f"sample count must be >= 1, got {self.count}")
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"sample radius must be a positive real, got {self.radius}")

    def draw(self, count: int | None = None, stream: int = 0) -> np.ndarray:
        """(count, 3) frequencies; ``stream`` separates independent draws of one seed."""
        self.validate()
        n = self.count if count is None else int(count)
        rng = np.random.default_rng([self.seed, stream])
        directions = rng.standard_normal((n, 3))
        directions /= np.maximum(np.linalg.norm(directions, axis=1, keepdims=True), 1e-300)
        radii = np.expm1(rng.uniform(0.0, 1.0, n) * math.log1p(self.radius))
        points = directions * radii[:, None]
        if self.include_origin and n > 0:
            points[0] = 0.0
        return points

    def doubled(self) -> FrequencySample:
        return FrequencySample(
            count=2 * self.count,
            radius=self.radius,
            seed=self.seed,
            include_origin=self.include_origin,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "count": self.count,
            "radius": self.radius,
            "seed": self.seed,
            "include_origin": self.include_origin,
        }


@dataclass(frozen=True)
class SweepReport:
    """
    Sup ratios of a symbol inequality over a sample-doubling trail, one trail per delta.

    ``trail[delta]`` lists the sup ratio after each sample level; ``stable`` is the
    fitted-constant rule: finite sups that move by less than ``drift_limit`` under sample
    doubling and across the delta set.
    """

    name: str
    parameters: dict[str, Any]
    deltas: tuple[float, ...]
    sample_sizes: tuple[int, ...]
    trail: dict[float, list[float]]
    region_sup: dict[float, dict[str, float]] = field(default_factory=dict)
    drift_limit: float = 2.0

    @property
    def fitted(self) -> dict[float, float]:
        return {d: (values[-1] if values else 0.0) for d, values in self.trail.items()}

    @property
    def constant(self) -> float:
        fitted = list(self.fitted.values())
        return max(fitted) if fitted else 0.0

    @property
    def sample_drift(self) -> float:
        worst = 1.0
        for values in self.trail.values():
            worst = max(worst, step_drift(values))
        return worst

    @property
    def delta_drift(self) -> float:
        ordered = sorted(self.fitted.items(), key=lambda item: -item[0])
        return step_drift([value for _, value in ordered])

    @property
    def stable(self) -> bool:
        finite = all(math.isfinite(v) for v in self.fitted.values())
        return (
            finite
            and self.sample_drift < self.drift_limit
            and self.delta_drift < self.drift_limit
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "parameters": dict(self.parameters),
            "deltas": list(self.deltas),
            "sample_sizes": list(self.sample_sizes),
            "trail": {repr(d): list(v) for d, v in self.trail.items()},
            "region_sup": {repr(d): dict(v) for d, v in self.region_sup.items()},
            "constant": self.constant,
            "sample_drift": self.sample_drift,
            "delta_drift": self.delta_drift,
            "stable": self.stable,
        }


def step_drift(values: Sequence[float]) -> float:
    """
    Largest ratio between consecutive refinement levels.

    Levels with a zero value carry no scale and are skipped; any non-finite value gives inf.
    """
    if any(not math.isfinite(v) for v in values):
        return math.inf
    positive = [v for v in values if v > 0.0]
    worst = 1.0
    for a, b in zip(positive, positive[1:]):
        worst = max(worst, max(a, b) / min(a, b))
    return worst
