"""Velocity lattice, discrete fields and their spectra."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import numpy as np

from boltzmann_smoothing import config


@dataclass(frozen=True)
class VelocityGrid:
    """Periodic lattice on [-L, L)^3 with spacing h = 2L/N and its dual frequency lattice."""

    n_points: int
    half_width: float

    def validate(self) -> None:
        if isinstance(self.n_points, bool) or int(self.n_points) != self.n_points:
            raise ValueError(f"n_points must be an integer, got {self.n_points!r}")
        if self.n_points < 4:
            raise ValueError(f"n_points must be >= 4, got {self.n_points}")
        if self.n_points % 2:
            raise ValueError(f"n_points must be even, got {self.n_points}")
        if not math.isfinite(self.half_width) or self.half_width <= 0:
            raise ValueError(f"half_width must be a positive finite real, got {self.half_width}")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / self.n_points

    @property
    def cell_volume(self) -> float:
        return self.spacing**3

    @property
    def box_volume(self) -> float:
        return (2.0 * self.half_width) ** 3

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.n_points, self.n_points, self.n_points)

    @property
    def size(self) -> int:
        return self.n_points**3

    @property
    def frequency_step(self) -> float:
        """Spacing pi/L of the dual lattice."""
        return math.pi / self.half_width

    @cached_property
    def axis(self) -> np.ndarray:
        """1-D velocity nodes v_j = -L + h j."""
        return -self.half_width + self.spacing * np.arange(self.n_points)

    @cached_property
    def index_axis(self) -> np.ndarray:
        """Signed DFT indices in canonical FFT order (Nyquist index is -N/2)."""
        return np.fft.fftfreq(self.n_points, d=1.0 / self.n_points).round().astype(np.int64)

    @cached_property
    def frequency_axis(self) -> np.ndarray:
        """1-D wavenumbers (pi/L) k in canonical FFT order."""
        return self.frequency_step * self.index_axis.astype(float)

    @cached_property
    def velocities(self) -> np.ndarray:
        """Velocity coordinates, shape (3, N, N, N)."""
        return np.stack(np.meshgrid(self.axis, self.axis, self.axis, indexing="ij"))

    @cached_property
    def speed(self) -> np.ndarray:
        return np.sqrt(np.sum(self.velocities**2, axis=0))

    @cached_property
    def frequencies(self) -> np.ndarray:
        """Wavenumbers, shape (3, N, N, N), canonical FFT order."""
        k = self.frequency_axis
        return np.stack(np.meshgrid(k, k, k, indexing="ij"))

    @cached_property
    def frequency_norm(self) -> np.ndarray:
        return np.sqrt(np.sum(self.frequencies**2, axis=0))

    @cached_property
    def frequency_bracket(self) -> np.ndarray:
        """<xi> = (1 + |xi|^2)^{1/2} on the lattice."""
        return np.sqrt(1.0 + self.frequency_norm**2)

    @cached_property
    def nyquist_mask(self) -> np.ndarray:
        """True on the unpaired modes (any component index equal to -N/2)."""
        nyq = self.index_axis == -(self.n_points // 2)
        return nyq[:, None, None] | nyq[None, :, None] | nyq[None, None, :]

    @cached_property
    def sign_pattern(self) -> np.ndarray:
        """(-1)^(k1+k2+k3), the phase that moves the DFT origin from v = -L to v = 0."""
        s = np.where(self.index_axis % 2 == 0, 1.0, -1.0)
        return s[:, None, None] * s[None, :, None] * s[None, None, :]

    def same_as(self, other: VelocityGrid) -> bool:
        return self.n_points == other.n_points and self.half_width == other.half_width

    def to_dict(self) -> dict[str, Any]:
        return {"n_points": int(self.n_points), "half_width": float(self.half_width)}


def make_grid(n_points_per_axis: int, half_width: float) -> VelocityGrid:
    """Build a validated velocity grid."""
    if int(n_points_per_axis) != n_points_per_axis:
        raise ValueError(f"n_points must be an integer, got {n_points_per_axis!r}")
    grid = VelocityGrid(n_points=int(n_points_per_axis), half_width=float(half_width))
    grid.validate()
    return grid


def check_same_grid(*grids: VelocityGrid) -> VelocityGrid:
    """Return the common grid or raise when two fields live on different lattices."""
    first = grids[0]
    for other in grids[1:]:
        if not first.same_as(other):
            raise ValueError(
                f"grid mismatch: N={first.n_points}, L={first.half_width} vs "
                f"N={other.n_points}, L={other.half_width}"
            )
    return first


@dataclass(frozen=True, eq=False)
class Distribution:
    """Real field f(v) sampled on a VelocityGrid."""

    grid: VelocityGrid
    values: np.ndarray
    nonnegative: bool = False
    label: str = ""

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(np.asarray(self.values, dtype=np.float64))
        if arr.size != self.grid.size:
            raise ValueError(f"expected {self.grid.size} values for the grid, got {arr.size}")
        object.__setattr__(self, "values", arr.reshape(self.grid.shape))
        self.validate()

    def validate(self) -> None:
        if self.nonnegative and self.values.size:
            low = float(self.values.min())
            if low < -config.NEGATIVITY_TOLERANCE:
                raise ValueError(
                    f"field flagged nonnegative has min {low:.3e} below "
                    f"-{config.NEGATIVITY_TOLERANCE:.1e}"
                )

    @classmethod
    def from_function(
        cls,
        grid: VelocityGrid,
        fn: Callable[[np.ndarray], np.ndarray],
        *,
        nonnegative: bool = False,
        label: str = "",
    ) -> Distribution:
        """Sample ``fn`` at the lattice velocities (``fn`` receives shape (3, N, N, N))."""
        values = np.broadcast_to(np.asarray(fn(grid.velocities), dtype=float), grid.shape)
        return cls(grid=grid, values=values.copy(), nonnegative=nonnegative, label=label)

    @classmethod
    def zeros(cls, grid: VelocityGrid, *, label: str = "") -> Distribution:
        return cls(grid=grid, values=np.zeros(grid.shape), nonnegative=True, label=label)

    def with_values(self, values: np.ndarray, *, nonnegative: bool | None = None) -> Distribution:
        return Distribution(
            grid=self.grid,
            values=values,
            nonnegative=self.nonnegative if nonnegative is None else nonnegative,
            label=self.label,
        )

    def scaled(self, factor: float) -> Distribution:
        return self.with_values(self.values * factor, nonnegative=self.nonnegative and factor >= 0)

    def plus(self, other: Distribution, factor: float = 1.0) -> Distribution:
        check_same_grid(self.grid, other.grid)
        return Distribution(grid=self.grid, values=self.values + factor * other.values)

    def clipped(self) -> tuple[Distribution, float]:
        """Zero out every negative value; returns the field and the (nonpositive) mass removed."""
        mask = self.values < 0.0
        removed = float(self.values[mask].sum()) * self.grid.cell_volume
        out = np.where(mask, 0.0, self.values)
        return Distribution(grid=self.grid, values=out, nonnegative=True, label=self.label), removed

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.values)))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Fourier coefficients on the dual lattice, canonical FFT order."""

    grid: VelocityGrid
    coefficients: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.coefficients, dtype=np.complex128)
        if arr.size != self.grid.size:
            raise ValueError(f"expected {self.grid.size} coefficients for the grid, got {arr.size}")
        object.__setattr__(self, "coefficients", arr.reshape(self.grid.shape))

    def hermitian_defect(self) -> float:
        """max |F(-xi) - conj F(xi)| over the paired modes."""
        flipped = np.roll(np.flip(self.coefficients, axis=(0, 1, 2)), 1, axis=(0, 1, 2))
        defect = np.abs(flipped - np.conj(self.coefficients))
        defect[self.grid.nyquist_mask] = 0.0
        return float(defect.max()) if defect.size else 0.0

    def scaled(self, factor: complex | np.ndarray) -> Spectrum:
        return Spectrum(grid=self.grid, coefficients=self.coefficients * factor)
