"""Collision workspace: retained frequency modes, the frequency kernel and operation budgets."""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np

from boltzmann_smoothing import config
from boltzmann_smoothing.errors import BudgetExceededError
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import VelocityGrid
from boltzmann_smoothing.kernel_ttc.tasks.geometry_tasks import sigma_nodes, xi_minus
from boltzmann_smoothing.kernel_ttc.tasks.kinetic_tasks import RadialTable, phi_c_hat_table
from boltzmann_smoothing.kernel_ttc.tools.cross_section_tools import CrossSection
from boltzmann_smoothing.utils import log

INTERPOLATIONS = ("spectral", "linear", "cubic")


def check_budget(operation: str, cost: int, budget: int | None = None) -> None:
    """Raise BudgetExceededError when ``cost`` pair-sigma operations exceed the budget."""
    cap = config.OPERATION_BUDGET if budget is None else budget
    if cost > cap:
        raise BudgetExceededError(operation, int(cost), int(cap))


@dataclass(frozen=True, eq=False)
class CollisionWorkspace:
    """
    Immutable evaluation context for Q on one grid and cross section.

    The frequency kernel K(xi, xi*) = sum_sigma w b [Phi_c^(|xi* - xi-|) - Phi_c^(|xi*|)]
    over the retained modes is built once and shared; rows at xi = 0 vanish identically.
    """

    grid: VelocityGrid
    xs: CrossSection
    retained_radius: float | None = None
    interpolation: str = "spectral"
    u_max: float | None = None
    budget: int | None = None

    def validate(self) -> None:
        self.xs.validate()
        if self.interpolation not in INTERPOLATIONS:
            raise ValueError(
                f"interpolation must be one of {INTERPOLATIONS}, got {self.interpolation!r}"
            )
        if self.retained_radius is not None and self.retained_radius <= 0:
            raise ValueError("retained_radius must be positive when set")
        if self.u_max is not None and self.u_max <= 0:
            raise ValueError("u_max must be positive when set")

    @property
    def operation_budget(self) -> int:
        return config.OPERATION_BUDGET if self.budget is None else int(self.budget)

    @property
    def relative_speed_cap(self) -> float:
        """Largest |v - v*| kept in velocity-side sums (default L)."""
        return self.grid.half_width if self.u_max is None else float(self.u_max)

    @cached_property
    def retained_mask(self) -> np.ndarray:
        """Modes entering the frequency sums: paired modes inside the retained ball."""
        mask = ~self.grid.nyquist_mask
        if self.retained_radius is not None:
            mask &= self.grid.frequency_norm <= self.retained_radius + 1e-12
        return mask

    @cached_property
    def mode_index(self) -> np.ndarray:
        """Flat lattice indices of the retained modes, shape (M,)."""
        return np.flatnonzero(self.retained_mask.ravel())

    @cached_property
    def mode_positions(self) -> np.ndarray:
        """Array positions (0..N-1 per axis) of the retained modes, shape (M, 3)."""
        return np.stack(np.unravel_index(self.mode_index, self.grid.shape), axis=1)

    @cached_property
    def mode_xi(self) -> np.ndarray:
        """Wavenumbers of the retained modes, shape (M, 3)."""
        return self.grid.frequency_axis[self.mode_positions]

    @property
    def mode_count(self) -> int:
        return int(self.mode_index.size)

    @property
    def sigma_count(self) -> int:
        return self.xs.rule.size

    @property
    def trilinear_cost(self) -> int:
        return self.mode_count * self.mode_count * self.sigma_count

    @cached_property
    def phi_hat(self) -> RadialTable:
        # |xi* - xi-| <= |xi*| + |xi|
        rho_max = 2.0 * float(np.max(np.linalg.norm(self.mode_xi, axis=1), initial=0.0)) + 1.0
        return phi_c_hat_table(self.xs, rho_max)

    def xi_minus_map(self, rows: slice) -> np.ndarray:
        """xi- for the retained modes ``rows`` at every sigma node, shape (B, S, 3)."""
        xi = self.mode_xi[rows]
        return xi_minus(xi, sigma_nodes(xi, self.xs.rule))

    def _kernel_rows(self, rows: slice) -> np.ndarray:
        star = self.mode_xi
        q = np.sum(star**2, axis=1)
        base = self.phi_hat(np.sqrt(q))
        xm = self.xi_minus_map(rows)
        dots = xm @ star.T
        dist2 = q[None, None, :] - 2.0 * dots + np.sum(xm**2, axis=2)[:, :, None]
        values = self.phi_hat(np.sqrt(np.maximum(dist2, 0.0))) - base[None, None, :]
        block = np.einsum("s,bsm->bm", self.xs.sigma_weights, values)
        zero_rows = np.all(self.mode_xi[rows] == 0.0, axis=1)
        block[zero_rows] = 0.0
        return block

    def _row_chunk(self) -> int:
        per_row = max(1, self.mode_count * self.sigma_count)
        return max(1, config.PAIR_CHUNK_ENTRIES // per_row)

    @property
    def stores_kernel_matrix(self) -> bool:
        return self.mode_count**2 <= config.KERNEL_MATRIX_MAX_ENTRIES

    @cached_property
    def kernel_matrix(self) -> np.ndarray:
        """Dense K(xi, xi*) over the retained modes, shape (M, M)."""
        check_budget("frequency kernel", self.trilinear_cost, self.operation_budget)
        if not self.stores_kernel_matrix:
            raise BudgetExceededError(
                "dense frequency kernel", self.mode_count**2, config.KERNEL_MATRIX_MAX_ENTRIES
            )
        log(
            f"🧮 Building frequency kernel: {self.mode_count} modes x "
            f"{self.sigma_count} sigma nodes",
            "DEBUG",
        )
        out = np.empty((self.mode_count, self.mode_count))
        step = self._row_chunk()
        for start in range(0, self.mode_count, step):
            rows = slice(start, min(start + step, self.mode_count))
            out[rows] = self._kernel_rows(rows)
        return out

    def kernel_blocks(self) -> Iterator[tuple[slice, np.ndarray]]:
        """Yield (rows, K[rows]) from the stored matrix or rebuilt chunk by chunk."""
        check_budget("trilinear sum", self.trilinear_cost, self.operation_budget)
        if self.stores_kernel_matrix:
            matrix = self.kernel_matrix
            step = max(1, config.PAIR_CHUNK_ENTRIES // max(1, self.mode_count))
            for start in range(0, self.mode_count, step):
                rows = slice(start, min(start + step, self.mode_count))
                yield rows, matrix[rows]
            return
        step = self._row_chunk()
        for start in range(0, self.mode_count, step):
            rows = slice(start, min(start + step, self.mode_count))
            yield rows, self._kernel_rows(rows)

    def difference_index(self, rows: slice) -> np.ndarray:
        """Flat lattice index of xi - xi* (wrapped mod N) for rows x all retained xi*, (B, M)."""
        n = self.grid.n_points
        diff = (self.mode_positions[rows, None, :] - self.mode_positions[None, :, :]) % n
        return (diff[..., 0] * n + diff[..., 1]) * n + diff[..., 2]

    def to_dict(self) -> dict[str, Any]:
        return {
            "grid": self.grid.to_dict(),
            "cross_section": self.xs.to_dict(),
            "retained_radius": self.retained_radius,
            "interpolation": self.interpolation,
            "u_max": self.relative_speed_cap,
            "modes": self.mode_count,
            "sigma_nodes": self.sigma_count,
        }


def make_workspace(
    grid: VelocityGrid,
    xs: CrossSection,
    *,
    retained_radius: float | None = None,
    interpolation: str = "spectral",
    u_max: float | None = None,
    budget: int | None = None,
) -> CollisionWorkspace:
    """Build and validate a collision workspace (kernel tables are built lazily)."""
    ws = CollisionWorkspace(
        grid=grid,
        xs=xs,
        retained_radius=retained_radius,
        interpolation=interpolation,
        u_max=u_max,
        budget=budget,
    )
    ws.validate()
    box_diagonal = math.sqrt(3) * grid.half_width
    if math.isfinite(ws.relative_speed_cap) and ws.relative_speed_cap > box_diagonal:
        log("⚠️ u_max exceeds the box diagonal; offsets are capped by the lattice", "WARN")
    return ws
