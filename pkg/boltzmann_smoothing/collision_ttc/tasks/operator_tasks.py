"""
Full collision operator Q = Q_c + Q_cbar, its diagnostics and the mollifier commutator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy import integrate

from boltzmann_smoothing.collision_ttc.tasks.spectral_tasks import (
    apply_qc,
    spectral_commutator,
    spectral_loss,
)
from boltzmann_smoothing.collision_ttc.tasks.velocity_tasks import (
    cancellation_integral,
    velocity_collision,
    velocity_loss_rate,
    velocity_q,
)
from boltzmann_smoothing.collision_ttc.tools.workspace_tools import CollisionWorkspace
from boltzmann_smoothing.errors import NumericalError
from boltzmann_smoothing.functionals_ttc.tasks.norm_tasks import (
    weighted_lp_norm,
    weighted_sobolev_norm,
)
from boltzmann_smoothing.grid_ttc.tasks.quadrature_tasks import inner_product
from boltzmann_smoothing.grid_ttc.tools.fourier_tools import (
    apply_multiplier,
    forward_transform,
    nyquist_filtered,
)
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import (
    Distribution,
    VelocityGrid,
    check_same_grid,
)
from boltzmann_smoothing.kernel_ttc.tools.cross_section_tools import HALF_PI, CrossSection
from boltzmann_smoothing.mollifier_ttc.tools.symbol_tools import MollifierSymbol
from boltzmann_smoothing.utils import log


@dataclass(frozen=True, eq=False)
class CollisionResult:
    """Q(g, f) with its compact and tail parts and the conservative correction applied."""

    total: Distribution
    compact: Distribution
    tail: Distribution
    correction_norm: float = 0.0
    projected: bool = False
    production: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "projected": self.projected,
            "correction_norm": self.correction_norm,
            "production": dict(self.production),
        }


def _invariant_basis(grid: VelocityGrid) -> np.ndarray:
    v = grid.velocities
    return np.stack([np.ones(grid.shape), v[0], v[1], v[2], grid.speed**2]).reshape(5, -1)


def production_moments(q: Distribution) -> dict[str, float]:
    """int Q psi for psi in {1, v1, v2, v3, |v|^2}."""
    basis = _invariant_basis(q.grid)
    values = q.grid.cell_volume * (basis @ q.values.ravel())
    return dict(zip(("mass", "momentum_x", "momentum_y", "momentum_z", "energy"), values.tolist()))


def conservative_projection(q: Distribution) -> tuple[Distribution, float]:
    """
    Smallest L^2 correction removing mass, momentum and energy production.

    Solves the 5x5 normal system of the collision invariants; returns the corrected field
    and the L^2 norm of the correction.
    """
    basis = _invariant_basis(q.grid)
    gram = basis @ basis.T
    coefficients = np.linalg.solve(gram, basis @ q.values.ravel())
    correction = (coefficients @ basis).reshape(q.grid.shape)
    norm = math.sqrt(q.grid.cell_volume * float(np.sum(correction**2)))
    return q.with_values(q.values - correction, nonnegative=False), norm


def apply_q_report(
    g: Distribution,
    f: Distribution,
    ws: CollisionWorkspace,
    *,
    project: bool = False,
) -> CollisionResult:
    """Q(g, f) = Q_c (frequency side) + Q_cbar (velocity side), Nyquist modes removed."""
    check_same_grid(ws.grid, g.grid, f.grid)
    if ws.xs.has_compact_part:
        compact = apply_qc(g, f, ws)
    else:
        compact = Distribution(grid=ws.grid, values=np.zeros(ws.grid.shape))
    tail = nyquist_filtered(velocity_q(g, f, ws, part="tail"))
    total = compact.plus(tail)
    correction = 0.0
    if project:
        total, correction = conservative_projection(total)
    if not total.is_finite():
        raise NumericalError("collision operator produced non-finite values")
    return CollisionResult(
        total=total,
        compact=compact,
        tail=tail,
        correction_norm=correction,
        projected=project,
        production=production_moments(total),
    )


def apply_q(
    g: Distribution, f: Distribution, ws: CollisionWorkspace, *, project: bool = False
) -> Distribution:
    """The field Q(g, f); ``project`` applies the conservative correction."""
    return apply_q_report(g, f, ws, project=project).total


def loss_rate(g: Distribution, ws: CollisionWorkspace) -> Distribution:
    """Collision frequency nu(v) generated by g over both kinetic parts (loss = nu f)."""
    check_same_grid(ws.grid, g.grid)
    rate = velocity_loss_rate(g, ws, part="tail")
    if ws.xs.has_compact_part:
        ones = Distribution(grid=ws.grid, values=np.ones(ws.grid.shape))
        rate = rate.plus(spectral_loss(g, ones, ws))
    return rate


def gain_loss_split(
    g: Distribution, f: Distribution, ws: CollisionWorkspace
) -> dict[str, Distribution]:
    """Gain, loss and total fields with total = gain - loss."""
    check_same_grid(ws.grid, g.grid, f.grid)
    total = apply_q(g, f, ws)
    _, tail_loss = velocity_collision(g, f, ws, part="tail")
    loss = tail_loss
    if ws.xs.has_compact_part:
        loss = loss.plus(spectral_loss(g, f, ws))
    return {"gain": total.plus(loss), "loss": loss, "total": total}


def collision_diagnostics(
    g: Distribution, f: Distribution, ws: CollisionWorkspace
) -> dict[str, Any]:
    """Conservation residuals relative to the loss magnitude and gain/loss norms."""
    parts = gain_loss_split(g, f, ws)
    loss_scale = weighted_lp_norm(parts["loss"], 1.0, 0.0)
    production = production_moments(parts["total"])
    relative = {
        k: (abs(v) / loss_scale if loss_scale > 0 else abs(v)) for k, v in production.items()
    }
    return {
        "production": production,
        "relative_to_loss": relative,
        "norms": {name: weighted_lp_norm(d, 2.0, 0.0) for name, d in parts.items()},
        "loss_l1": loss_scale,
    }


def _tail_commutator(
    f: Distribution, g: Distribution, h: Distribution, symbol: np.ndarray, ws: CollisionWorkspace
) -> float:
    mollified_g = apply_multiplier(g, symbol)
    first = apply_multiplier(nyquist_filtered(velocity_q(f, g, ws, part="tail")), symbol)
    second = nyquist_filtered(velocity_q(f, mollified_g, ws, part="tail"))
    return inner_product(first, h) - inner_product(second, h)


def commutator_pairing(
    f: Distribution,
    g: Distribution,
    h: Distribution,
    M: MollifierSymbol,
    ws: CollisionWorkspace,
) -> float:
    """
    (M Q(f, g) - Q(f, M g), h) with f in the starred slot.

    The compact part carries M(xi) - M(xi - xi*) inside the frequency sum; the tail part
    applies M on both sides of the velocity-side evaluation.
    """
    check_same_grid(ws.grid, f.grid, g.grid, h.grid)
    M.validate()
    symbol = M.on_lattice(ws.grid)
    value = 0.0
    if ws.xs.has_compact_part:
        value += spectral_commutator(
            forward_transform(f), forward_transform(g), forward_transform(h), symbol, ws
        )
    return value + _tail_commutator(f, g, h, symbol, ws)


def tail_commutator_check(
    f: Distribution,
    g: Distribution,
    h: Distribution,
    M: MollifierSymbol,
    ws: CollisionWorkspace,
    *,
    order_gap: float = 2.0,
    eps: float = 0.1,
) -> dict[str, float]:
    """
    |(M Q_cbar(f, g) - Q_cbar(f, M g), h)| against the smooth-part commutator bound.

    For s < 1/2 the bound is
        ||f||_{L^1_{gamma+}} (||M g||_{L^2_{gamma+}} + ||g||_{H^{lam-n}_{gamma+}}) ||h||_{L^2};
    for s >= 1/2 the weight becomes (2s + gamma - 1)+ and M g is measured in
    H^{2s-1+eps}. ``order_gap`` is the n of the low-order term.
    """
    check_same_grid(ws.grid, f.grid, g.grid, h.grid)
    M.validate()
    xs = ws.xs
    symbol = M.on_lattice(ws.grid)
    lhs = abs(_tail_commutator(f, g, h, symbol, ws))
    gamma_plus = max(xs.gamma, 0.0)
    mollified = apply_multiplier(g, symbol)
    if xs.s < 0.5:
        weight = gamma_plus
        smooth = weighted_lp_norm(mollified, 2.0, weight)
    else:
        weight = max(2.0 * xs.s + xs.gamma - 1.0, 0.0)
        smooth = weighted_sobolev_norm(mollified, 2.0 * xs.s - 1.0 + eps, weight)
    low = weighted_sobolev_norm(g, M.lam - order_gap, gamma_plus)
    rhs = weighted_lp_norm(f, 1.0, weight) * (smooth + low) * weighted_lp_norm(h, 2.0, 0.0)
    ratio = lhs / rhs if rhs > 0 else (0.0 if lhs == 0 else math.inf)
    return {"lhs": lhs, "rhs": rhs, "ratio": ratio}


def cancellation_kernel(
    z: np.ndarray | float, xs: CrossSection, *, part: str = "full"
) -> np.ndarray:
    """
    Radial kernel S(|z|) of the cancellation identity over the resolved angles:
        S(|z|) = 2 pi int_{theta_min}^{pi/2} sin(theta) b
                 [Phi(|z| / cos(theta/2)) / cos^3(theta/2) - Phi(|z|)] d theta
    With part="full" this is |z|^gamma times a constant.
    """
    if part != "full":
        raise ValueError("cancellation_kernel is available for the full kinetic factor only")
    gamma = xs.gamma

    def integrand(theta: float) -> float:
        c = math.cos(0.5 * theta)
        return math.sin(theta) * float(xs.b(np.array([theta]))[0]) * (c ** (-3.0 - gamma) - 1.0)

    value, _ = integrate.quad(integrand, xs.rule.theta_min, HALF_PI, limit=200)
    r = np.asarray(z, dtype=float)
    with np.errstate(divide="ignore"):
        at_zero = 1.0 if gamma == 0 else (0.0 if gamma > 0 else np.inf)
        radial = np.where(r > 0, np.abs(r) ** gamma, at_zero)
    return 2.0 * math.pi * value * radial


def cancellation_diagnostics(
    g: Distribution, F: Distribution, ws: CollisionWorkspace
) -> dict[str, float]:
    """
    Cancellation integral with its bound ratio against
    ||g||_{L^1_{|gamma|}} ||sqrt(F)||^2_{H^{(-gamma/2)+}_{gamma/2}}.
    """
    value = cancellation_integral(g, F, ws)
    gamma = ws.xs.gamma
    root = F.with_values(np.sqrt(np.maximum(F.values, 0.0)), nonnegative=True)
    bound = weighted_lp_norm(g, 1.0, abs(gamma)) * weighted_sobolev_norm(
        root, max(-0.5 * gamma, 0.0), 0.5 * gamma
    ) ** 2
    ratio = abs(value) / bound if bound > 0 else (0.0 if value == 0 else math.inf)
    if not math.isfinite(ratio):
        log("⚠️ cancellation bound vanished with a nonzero integral", "WARN")
    return {"value": value, "bound": bound, "ratio": ratio}
