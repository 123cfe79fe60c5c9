"""Verification request contract and the trail helpers shared by the checks."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from boltzmann_smoothing.collision_ttc.tools.workspace_tools import CollisionWorkspace
from boltzmann_smoothing.veritas_ttc.tools.fit_tools import TrailLevel


@dataclass(frozen=True, eq=False)
class VerifyRequest:
    """
    Everything a registered check needs: the inequality id, a workspace (the grid comes
    with it), the base seed, family sizes and free-form parameters.
    """

    inequality: str
    ws: CollisionWorkspace
    seed: int = 0
    family_size: int = 8
    sample_count: int = 256
    parameters: dict[str, Any] = field(default_factory=dict)

    def validate(self) -> None:
        if self.family_size < 1:
            raise ValueError(f"family_size must be >= 1, got {self.family_size}")
        if self.sample_count < 1:
            raise ValueError(f"sample_count must be >= 1, got {self.sample_count}")
        self.ws.validate()

    def get(self, name: str, default: Any = None) -> Any:
        return self.parameters.get(name, default)

    def to_dict(self) -> dict[str, Any]:
        return {
            "inequality": self.inequality,
            "seed": self.seed,
            "family_size": self.family_size,
            "sample_count": self.sample_count,
            "parameters": dict(self.parameters),
            "workspace": self.ws.to_dict(),
        }


def sample_trail(ratios: Sequence[float], refinement: str = "sample") -> list[TrailLevel]:
    """
    Running sup after the first half of the cases and after all of them.

    Cases are generated in seed order, so the half level is a genuine sub-sample.
    """
    values = np.asarray(ratios, dtype=float)
    if values.size == 0:
        return []
    half = max(1, values.size // 2)
    levels = [TrailLevel(refinement, half, float(values[:half].max()), half)]
    if values.size > half:
        count = int(values.size)
        levels.append(TrailLevel(refinement, count, float(values.max()), count))
    return levels


def thinned_indices(total: int, limit: int | None, seed: int) -> list[int]:
    """All of range(total), or ``limit`` of them drawn without replacement and sorted."""
    if limit is None or total <= limit:
        return list(range(total))
    rng = np.random.default_rng([seed, total, limit])
    return sorted(int(i) for i in rng.choice(total, size=limit, replace=False))
