"""
Velocity-side quadrature of the collision operator.

Sums run over relative velocities u = v - v* from an OffsetRule and over the sigma nodes of the
cross section. Post-collisional values come from a FieldSampler, so a test function given as a
callable is evaluated exactly at v' and v'*.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np

from boltzmann_smoothing import config
from boltzmann_smoothing.collision_ttc.tools.shift_tools import (
    FieldSampler,
    FieldSource,
    OffsetRule,
    PairChunk,
    iter_pair_chunks,
    lattice_offsets,
    pair_slices,
    spherical_offsets,
    trig_sum,
)
from boltzmann_smoothing.collision_ttc.tools.workspace_tools import (
    CollisionWorkspace,
    check_budget,
)
from boltzmann_smoothing.grid_ttc.tools.fourier_tools import raw_forward, raw_inverse
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution, check_same_grid
from boltzmann_smoothing.utils import reduce_sum

OFFSET_KINDS = ("lattice", "spherical")
KINETIC_PARTS = ("full", "compact", "tail")

TestFunction = Distribution | Callable[[np.ndarray], np.ndarray]


def make_offsets(
    ws: CollisionWorkspace,
    part: str = "full",
    offsets: str = "lattice",
    **spherical: int,
) -> OffsetRule:
    """Offset rule of the requested kind for one kinetic part."""
    if part not in KINETIC_PARTS:
        raise ValueError(f"kinetic must be one of {KINETIC_PARTS}, got {part!r}")
    if offsets == "lattice":
        return lattice_offsets(ws.grid, ws.xs, part, ws.relative_speed_cap)
    if offsets == "spherical":
        return spherical_offsets(ws.grid, ws.xs, part, u_max=ws.relative_speed_cap, **spherical)
    raise ValueError(f"offsets must be one of {OFFSET_KINDS}, got {offsets!r}")


def _check_cost(ws: CollisionWorkspace, rule: OffsetRule, operation: str) -> None:
    check_budget(operation, rule.size * ws.sigma_count * ws.grid.size, ws.operation_budget)


def _sampler(ws: CollisionWorkspace, source: FieldSource) -> FieldSampler:
    if isinstance(source, Distribution):
        check_same_grid(ws.grid, source.grid)
    return FieldSampler(ws.grid, source, ws.interpolation)


def starred_values(sampler: FieldSampler, rule: OffsetRule, chunk: PairChunk) -> np.ndarray:
    """g(v - u) for every offset of the chunk, shape (B, N, N, N)."""
    count = chunk.vectors.shape[0]
    if rule.lattice_shifts is not None and not sampler.is_exact:
        shifts = rule.lattice_shifts[chunk.start : chunk.start + count]
        return np.stack([sampler.shifted_by_lattice(-m) for m in shifts])
    return sampler.at(-chunk.vectors)


def _loss_convolution(ws: CollisionWorkspace, rule: OffsetRule, gs: FieldSampler) -> np.ndarray:
    """(sum_sigma w b) sum_u w_u g(v - u): the collision frequency generated by g."""
    grid = ws.grid
    total = float(np.sum(ws.xs.sigma_weights))
    if rule.lattice_shifts is not None:
        # circular convolution with the offset weights placed at their lattice shifts
        stencil = np.zeros(grid.shape)
        index = tuple((rule.lattice_shifts % grid.n_points).T)
        np.add.at(stencil, index, rule.weights)
        return total * raw_inverse(raw_forward(gs.values) * raw_forward(stencil)).real
    conv = np.zeros(grid.shape)
    for sl in pair_slices(rule.size):
        conv += np.einsum("p,pabc->abc", rule.weights[sl], gs.at(-rule.vectors[sl]))
    return total * conv


def velocity_loss_rate(
    g: Distribution, ws: CollisionWorkspace, *, part: str = "tail", offsets: str = "lattice"
) -> Distribution:
    """Collision frequency nu(v) of the velocity-side part, so that loss = nu f."""
    check_same_grid(ws.grid, g.grid)
    rule = make_offsets(ws, part, offsets)
    if rule.size == 0:
        return Distribution.zeros(ws.grid)
    return Distribution(grid=ws.grid, values=_loss_convolution(ws, rule, _sampler(ws, g)))


def velocity_collision(
    g: Distribution,
    f: Distribution,
    ws: CollisionWorkspace,
    *,
    part: str = "tail",
    offsets: str = "lattice",
) -> tuple[Distribution, Distribution]:
    """
    Gain and loss fields of Q_part(g, f) by direct (u, sigma) quadrature.

    The gain is written in the pre-collisional parametrization: for a pre-collisional pair with
    relative velocity u scattering into v,
        Q+(v) = sum_{u, sigma} w b g(v + d2) f(v - d1),
    so its lattice sum equals the loss sum term by term and mass is conserved to round-off for
    the spectral sampler.
    """
    check_same_grid(ws.grid, g.grid, f.grid)
    grid = ws.grid
    rule = make_offsets(ws, part, offsets)
    gain = np.zeros(grid.shape)
    if rule.size == 0:
        zero = Distribution.zeros(grid)
        return zero, zero
    _check_cost(ws, rule, f"velocity-side Q ({part})")
    gs = _sampler(ws, g)
    fs = _sampler(ws, f)
    for chunk in iter_pair_chunks(rule, ws.xs):
        for sl in pair_slices(chunk.size):
            terms = gs.at(chunk.d2[sl]) * fs.at(-chunk.d1[sl])
            gain += np.einsum("p,pabc->abc", chunk.weights[sl], terms)
    loss = _loss_convolution(ws, rule, gs) * fs.values
    return Distribution(grid=grid, values=gain), Distribution(grid=grid, values=loss)


def velocity_q(
    g: Distribution,
    f: Distribution,
    ws: CollisionWorkspace,
    *,
    part: str = "tail",
    offsets: str = "lattice",
) -> Distribution:
    """Q_part(g, f) = gain - loss from :func:`velocity_collision`."""
    gain, loss = velocity_collision(g, f, ws, part=part, offsets=offsets)
    return gain.plus(loss, -1.0)


def _pair_sums_trig(
    ws: CollisionWorkspace,
    products: np.ndarray,
    psi_hat: np.ndarray,
    displacements: np.ndarray,
    per_u: int,
) -> np.ndarray:
    # sum_v P(v) psi(v + d) = N^-3 sum_k conj(P^_k) psi^_k e^{i xi_k . d}
    amplitudes = np.conj(raw_forward(products)) * psi_hat[None] / ws.grid.size
    out = np.empty(displacements.shape[0])
    for j in range(products.shape[0]):
        rows = slice(j * per_u, (j + 1) * per_u)
        out[rows] = trig_sum(ws.grid, amplitudes[j], displacements[rows]).real
    return out


def _pair_sums_direct(
    products: np.ndarray, sampler: FieldSampler, displacements: np.ndarray, owner: np.ndarray
) -> np.ndarray:
    out = np.empty(displacements.shape[0])
    for sl in pair_slices(displacements.shape[0]):
        shifted = sampler.at(displacements[sl])
        out[sl] = np.einsum("pabc,pabc->p", products[owner[sl]], shifted)
    return out


def weak_form_pairing(
    g: Distribution,
    f: Distribution,
    psi: TestFunction,
    ws: CollisionWorkspace,
    *,
    symmetric: bool = True,
    kinetic: str = "full",
    offsets: str = "lattice",
    **spherical: int,
) -> float:
    """
    Weak form of Q(g, f) against a test function.

    symmetric=True:
        1/2 h^6 sum_{v, v*} sum_sigma w B g(v*) f(v) [psi(v') + psi(v'*) - psi(v) - psi(v*)]
    symmetric=False:
        h^6 sum_{v, v*} sum_sigma w B g(v*) f(v) [psi(v') - psi(v)] = (Q(g, f), psi)

    ``psi`` may be a Distribution (interpolated off-lattice by the workspace rule) or a
    callable evaluated exactly at the post-collisional velocities.

    Args:
        kinetic: Kinetic factor used in B: "full", "compact" or "tail".
        offsets: "lattice" (minimum-image v - v* on the grid) or "spherical" (continuous u).
        spherical: radial_nodes / polar_nodes / azimuth_nodes for spherical offsets.
    """
    check_same_grid(ws.grid, g.grid, f.grid)
    grid = ws.grid
    rule = make_offsets(ws, kinetic, offsets, **spherical)
    if rule.size == 0:
        return 0.0
    _check_cost(ws, rule, "weak-form pairing")
    gs = _sampler(ws, g)
    f_values = _sampler(ws, f).values
    ps = _sampler(ws, psi)
    trig = ps.method == "spectral"
    per_u = ws.sigma_count
    partial: list[float] = []
    for chunk in iter_pair_chunks(rule, ws.xs):
        products = starred_values(gs, rule, chunk) * f_values[None]
        base = np.einsum("uabc,abc->u", products, ps.values)
        if trig:
            s1 = _pair_sums_trig(ws, products, ps.raw_hat, chunk.d1, per_u)
        else:
            s1 = _pair_sums_direct(products, ps, chunk.d1, chunk.owner)
        if not symmetric:
            bracket = s1 - base[chunk.owner]
        else:
            if trig:
                s2 = _pair_sums_trig(ws, products, ps.raw_hat, chunk.d2, per_u)
            else:
                s2 = _pair_sums_direct(products, ps, chunk.d2, chunk.owner)
            behind = starred_values(ps, rule, chunk)
            back = np.einsum("uabc,uabc->u", products, behind)
            bracket = 0.5 * (s1 + s2 - base[chunk.owner] - back[chunk.owner])
        partial.append(float(np.dot(chunk.weights, bracket)))
    return grid.cell_volume * reduce_sum(np.asarray(partial))


def cancellation_integral(
    g: Distribution,
    F: Distribution,
    ws: CollisionWorkspace,
    *,
    kinetic: str = "full",
    offsets: str = "lattice",
) -> float:
    """sum B g(v*) [F(v') - F(v)]: the non-coercive remainder of the coercive splitting."""
    ones = Distribution(grid=ws.grid, values=np.ones(ws.grid.shape))
    return weak_form_pairing(g, ones, F, ws, symmetric=False, kinetic=kinetic, offsets=offsets)


def _require_nonnegative(g: Distribution, name: str = "g") -> None:
    low = float(g.values.min()) if g.values.size else 0.0
    if low < -config.NEGATIVITY_TOLERANCE:
        raise ValueError(f"{name} must be nonnegative (min {low:.3e})")


def coercive_terms(
    g: Distribution,
    f: Distribution,
    ws: CollisionWorkspace,
    *,
    offsets: str = "lattice",
) -> tuple[float, float, float]:
    """
    (-(Q(g, f), f), C_gamma(g, f), sum B g* (f'^2 - f^2)) from one set of post-collisional values.

    With f(f' - f) = -(f' - f)^2 / 2 + (f'^2 - f^2) / 2 the first entry equals
    C_gamma / 2 - cancellation / 2 up to rounding.
    """
    check_same_grid(ws.grid, g.grid, f.grid)
    _require_nonnegative(g)
    grid = ws.grid
    rule = make_offsets(ws, "full", offsets)
    if rule.size == 0:
        return 0.0, 0.0, 0.0
    _check_cost(ws, rule, "coercive pairing")
    gs = _sampler(ws, g)
    fs = _sampler(ws, f)
    f_values = fs.values
    pairing: list[float] = []
    coercive: list[float] = []
    cancel: list[float] = []
    for chunk in iter_pair_chunks(rule, ws.xs):
        starred = starred_values(gs, rule, chunk)
        for sl in pair_slices(chunk.size):
            after = fs.at(chunk.d1[sl])
            weighted = starred[chunk.owner[sl]]
            jump = after - f_values[None]
            w = chunk.weights[sl]
            pairing.append(-float(w @ np.einsum("pabc,pabc->p", weighted, f_values[None] * jump)))
            coercive.append(float(w @ np.einsum("pabc,pabc->p", weighted, jump**2)))
            cancel.append(
                float(w @ np.einsum("pabc,pabc->p", weighted, after**2 - f_values[None] ** 2))
            )
    h3 = grid.cell_volume
    return (
        h3 * reduce_sum(np.asarray(pairing)),
        h3 * reduce_sum(np.asarray(coercive)),
        h3 * reduce_sum(np.asarray(cancel)),
    )


def coercive_pairing(
    g: Distribution, f: Distribution, ws: CollisionWorkspace, *, offsets: str = "lattice"
) -> tuple[float, float]:
    """(-(Q(g, f), f), C_gamma(g, f)); g must be nonnegative."""
    pairing, c_gamma, _ = coercive_terms(g, f, ws, offsets=offsets)
    return pairing, c_gamma
