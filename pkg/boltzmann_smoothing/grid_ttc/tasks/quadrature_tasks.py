"""
Weighted lattice quadrature and inner products.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import numpy as np

from boltzmann_smoothing.grid_ttc.tools.lattice_tools import (
    Distribution,
    Spectrum,
    VelocityGrid,
    check_same_grid,
)
from boltzmann_smoothing.utils import reduce_complex_sum, reduce_sum

WeightFunction = Callable[[VelocityGrid, "Weight"], np.ndarray]


@dataclass(frozen=True)
class Weight:
    """Analytic weight descriptor: a registered family plus its parameters."""

    family: str = "one"
    ell: float = 0.0
    axis: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {"family": self.family, "ell": self.ell, "axis": self.axis}


def _one(grid: VelocityGrid, weight: Weight) -> np.ndarray:
    return np.ones(grid.shape)


def _coordinate(grid: VelocityGrid, weight: Weight) -> np.ndarray:
    if weight.axis not in (0, 1, 2):
        raise ValueError(f"coordinate weight needs axis in 0..2, got {weight.axis}")
    return grid.velocities[weight.axis]


def _speed_squared(grid: VelocityGrid, weight: Weight) -> np.ndarray:
    return grid.speed**2


def _bracket(grid: VelocityGrid, weight: Weight) -> np.ndarray:
    return (1.0 + grid.speed**2) ** (0.5 * weight.ell)


def _affine(grid: VelocityGrid, weight: Weight) -> np.ndarray:
    return (1.0 + grid.speed) ** weight.ell


def _speed_power(grid: VelocityGrid, weight: Weight) -> np.ndarray:
    if weight.ell < 0:
        raise ValueError("speed_power weight needs ell >= 0 (singular at the origin otherwise)")
    return grid.speed**weight.ell


WEIGHT_FAMILIES: dict[str, WeightFunction] = {
    "one": _one,
    "coordinate": _coordinate,
    "speed_squared": _speed_squared,
    "bracket": _bracket,
    "affine": _affine,
    "speed_power": _speed_power,
}


def register_weight(name: str, fn: WeightFunction) -> None:
    """Add a weight family to the registry."""
    if not name:
        raise ValueError("weight family name must be non-empty")
    WEIGHT_FAMILIES[name] = fn


def weight_values(grid: VelocityGrid, weight: Weight | str) -> np.ndarray:
    """Evaluate a registered weight on the lattice."""
    descriptor = Weight(family=weight) if isinstance(weight, str) else weight
    fn = WEIGHT_FAMILIES.get(descriptor.family)
    if fn is None:
        raise ValueError(
            f"unregistered weight family {descriptor.family!r}; "
            f"known: {', '.join(sorted(WEIGHT_FAMILIES))}"
        )
    return fn(grid, descriptor)


def quadrature(f: Distribution, weight: Weight | str = "one") -> float:
    """h^3 * sum f(v) w(v) over the lattice."""
    w = weight_values(f.grid, weight)
    return f.grid.cell_volume * reduce_sum(f.values * w)


def inner_product(f: Distribution, g: Distribution) -> float:
    """Velocity-side L^2 inner product h^3 * sum f g."""
    grid = check_same_grid(f.grid, g.grid)
    return grid.cell_volume * reduce_sum(f.values * g.values)


def spectral_inner_product(F: Spectrum, G: Spectrum) -> complex:
    """Frequency-side inner product (2L)^{-3} * sum F conj(G)."""
    grid = check_same_grid(F.grid, G.grid)
    return reduce_complex_sum(F.coefficients * np.conj(G.coefficients)) / grid.box_volume
