"""
Seeded generators of test distributions for the inequality sweeps.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from boltzmann_smoothing.functionals_ttc.tasks.uniform_class_tasks import uniform_class_check
from boltzmann_smoothing.functionals_ttc.tools.request_tools import UniformClassParams
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution, VelocityGrid

Params = dict[str, Any]
Generator = Callable[[VelocityGrid, np.random.Generator, Params], np.ndarray]

DEFAULT_PARAMETERS: dict[str, dict[str, Any]] = {
    "gaussian_mixture": {
        "components": (1, 3),
        "width": (0.5, 1.0),
        "center": 1.0,
        "mass": (0.5, 1.5),
    },
    "bump_sum": {"components": (1, 3), "radius": (0.8, 1.6), "center": 1.0, "height": (0.2, 1.0)},
    "indicator_smoothed": {"radius": (0.8, 1.4), "edge": (0.1, 0.3), "mass": (0.8, 1.2)},
    "random_band_limited": {"modes": 2, "envelope": 1.2, "amplitude": 1.0},
}


def _gaussian_mixture(grid: VelocityGrid, rng: np.random.Generator, p: Params) -> np.ndarray:
    v = grid.velocities
    low, high = p["components"]
    values = np.zeros(grid.shape)
    count = int(rng.integers(low, high + 1))
    weights = rng.dirichlet(np.ones(count)) * rng.uniform(*p["mass"])
    for weight in weights:
        width = rng.uniform(*p["width"])
        center = rng.uniform(-p["center"], p["center"], 3)
        r2 = np.sum((v - center[:, None, None, None]) ** 2, axis=0)
        values += weight * (2.0 * math.pi * width**2) ** -1.5 * np.exp(-0.5 * r2 / width**2)
    return values


def _bump_sum(grid: VelocityGrid, rng: np.random.Generator, p: Params) -> np.ndarray:
    v = grid.velocities
    low, high = p["components"]
    values = np.zeros(grid.shape)
    for _ in range(int(rng.integers(low, high + 1))):
        radius = rng.uniform(*p["radius"])
        center = rng.uniform(-p["center"], p["center"], 3)
        r2 = np.sum((v - center[:, None, None, None]) ** 2, axis=0) / radius**2
        inside = r2 < 1.0
        bump = np.zeros(grid.shape)
        bump[inside] = np.exp(1.0 - 1.0 / (1.0 - r2[inside]))
        values += rng.uniform(*p["height"]) * bump
    return values


def _indicator_smoothed(grid: VelocityGrid, rng: np.random.Generator, p: Params) -> np.ndarray:
    radius = rng.uniform(*p["radius"])
    edge = rng.uniform(*p["edge"])
    profile = 0.5 * (1.0 - np.tanh((grid.speed - radius) / edge))
    total = profile.sum() * grid.cell_volume
    return profile * (rng.uniform(*p["mass"]) / total)


def _random_band_limited(grid: VelocityGrid, rng: np.random.Generator, p: Params) -> np.ndarray:
    """Gaussian envelope times a random trigonometric polynomial of low lattice modes."""
    v = grid.velocities
    modes = int(p["modes"])
    dxi = grid.frequency_step
    values = np.zeros(grid.shape)
    for kx in range(-modes, modes + 1):
        for ky in range(-modes, modes + 1):
            for kz in range(-modes, modes + 1):
                phase = dxi * (kx * v[0] + ky * v[1] + kz * v[2])
                a, b = rng.standard_normal(2)
                values += a * np.cos(phase) + b * np.sin(phase)
    envelope = np.exp(-0.5 * grid.speed**2 / p["envelope"] ** 2)
    scale = float(p["amplitude"]) / max(float(np.abs(values).max()), 1e-300)
    return scale * values * envelope


GENERATORS: dict[str, Generator] = {
    "gaussian_mixture": _gaussian_mixture,
    "bump_sum": _bump_sum,
    "indicator_smoothed": _indicator_smoothed,
    "random_band_limited": _random_band_limited,
}
SIGNED_GENERATORS = frozenset({"random_band_limited"})


@dataclass(frozen=True)
class FunctionFamily:
    """
    ``count`` seeded members of one generator.

    ``parameters`` overrides entries of the generator's default ranges. Member i draws from
    ``np.random.default_rng([seed, i])``, so subfamilies are reproducible slices.
    """

    generator: str
    count: int = 8
    seed: int = 0
    parameters: dict[str, Any] = field(default_factory=dict)

    def validate(self) -> None:
        if self.generator not in GENERATORS:
            known = ", ".join(GENERATORS)
            raise ValueError(f"unknown generator {self.generator!r}; known: {known}")
        if self.count < 1:
            raise ValueError(f"family count must be >= 1, got {self.count}")
        unknown = set(self.parameters) - set(DEFAULT_PARAMETERS[self.generator])
        if unknown:
            raise ValueError(f"unknown {self.generator} parameters {sorted(unknown)}")

    @property
    def signed(self) -> bool:
        return self.generator in SIGNED_GENERATORS

    def merged_parameters(self) -> dict[str, Any]:
        return {**DEFAULT_PARAMETERS[self.generator], **self.parameters}

    def member(self, grid: VelocityGrid, index: int) -> Distribution:
        self.validate()
        rng = np.random.default_rng([self.seed, index])
        values = GENERATORS[self.generator](grid, rng, self.merged_parameters())
        return Distribution(
            grid=grid,
            values=values,
            nonnegative=not self.signed,
            label=f"{self.generator}[{self.seed}:{index}]",
        )

    def generate(self, grid: VelocityGrid) -> list[Distribution]:
        return [self.member(grid, i) for i in range(self.count)]

    def generate_in_class(
        self, grid: VelocityGrid, params: UniformClassParams, *, max_tries: int = 20
    ) -> list[Distribution]:
        """Members inside U(D0, E0), rejecting draws that fall outside (indices continue)."""
        if self.signed:
            raise ValueError("class members must be nonnegative; use a nonnegative generator")
        members: list[Distribution] = []
        index = 0
        while len(members) < self.count:
            if index >= self.count * max_tries:
                raise ValueError(
                    f"only {len(members)} of {self.count} {self.generator} draws fell inside "
                    f"U({params.D0:g}, {params.E0:g})"
                )
            candidate = self.member(grid, index)
            index += 1
            inside, _ = uniform_class_check(candidate, params, max_centers=64)
            if inside:
                members.append(candidate)
        return members

    def to_dict(self) -> dict[str, Any]:
        return {
            "generator": self.generator,
            "count": self.count,
            "seed": self.seed,
            "parameters": {
                k: list(v) if isinstance(v, tuple) else v for k, v in self.parameters.items()
            },
        }


def class_family_parameters() -> dict[str, Any]:
    """Narrow gaussian mixtures with mass just above 1, mostly inside U(1, 4)."""
    return {"components": (1, 2), "width": (0.4, 0.55), "center": 0.3, "mass": (1.0, 1.05)}
