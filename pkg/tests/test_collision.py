import numpy as np
import pytest

from boltzmann_smoothing.collision import (
    apply_q,
    apply_q_report,
    cancellation_integral,
    coercive_pairing,
    coercive_terms,
    collision_diagnostics,
    commutator_pairing,
    conservative_projection,
    gain_loss_split,
    make_workspace,
    production_moments,
    trilinear_qc,
    weak_form_pairing,
)
from boltzmann_smoothing.errors import BudgetExceededError
from boltzmann_smoothing.grid import Distribution, forward_transform
from boltzmann_smoothing.mollifier import make_symbol
from conftest import maxwellian


def test_projection_removes_all_production(ws, gaussian) -> None:
    report = apply_q_report(gaussian, gaussian, ws, project=True)
    assert report.projected
    assert report.correction_norm >= 0.0
    for name, value in report.production.items():
        assert abs(value) < 1e-10, name


def test_projection_of_invariant_field_is_zero(grid) -> None:
    v = grid.velocities
    field = Distribution(grid=grid, values=1.0 + 0.5 * v[0] - 0.1 * np.sum(v**2, axis=0))
    corrected, norm = conservative_projection(field)
    assert norm > 0.0
    np.testing.assert_allclose(corrected.values, 0.0, atol=1e-10)


def test_compact_part_conserves_mass_exactly(ws, gaussian) -> None:
    report = apply_q_report(gaussian, gaussian, ws)
    assert abs(production_moments(report.compact)["mass"]) < 1e-12


def test_collision_is_bilinear(ws, gaussian, grid) -> None:
    other = maxwellian(grid, 1.2, (-0.4, 0.2, 0.0))
    base = apply_q(gaussian, other, ws)
    doubled = apply_q(gaussian, other.scaled(2.0), ws)
    np.testing.assert_allclose(doubled.values, 2.0 * base.values, atol=1e-12)
    summed = apply_q(gaussian.plus(other), other, ws)
    split = apply_q(gaussian, other, ws).plus(apply_q(other, other, ws))
    np.testing.assert_allclose(summed.values, split.values, atol=1e-10)


def test_gain_minus_loss_is_total(ws, gaussian) -> None:
    parts = gain_loss_split(gaussian, gaussian, ws)
    np.testing.assert_allclose(
        parts["gain"].values - parts["loss"].values, parts["total"].values, atol=1e-12
    )


def test_diagnostics_report_relative_residuals(ws, gaussian) -> None:
    diagnostics = collision_diagnostics(gaussian, gaussian, ws)
    assert diagnostics["loss_l1"] > 0.0
    assert set(diagnostics["norms"]) == {"gain", "loss", "total"}
    assert diagnostics["relative_to_loss"]["mass"] < 1e-6


def test_identity_symbol_has_no_commutator(ws, gaussian, grid) -> None:
    h = maxwellian(grid, 0.6)
    value = commutator_pairing(gaussian, gaussian, h, make_symbol(0.0), ws)
    assert abs(value) < 1e-10


def test_budget_is_enforced(grid, xs, gaussian) -> None:
    tight = make_workspace(grid, xs, budget=10)
    with pytest.raises(BudgetExceededError) as info:
        apply_q(gaussian, gaussian, tight)
    assert info.value.exit_code == 3


def test_workspace_validation(grid, xs) -> None:
    with pytest.raises(ValueError, match="interpolation"):
        make_workspace(grid, xs, interpolation="nearest")
    with pytest.raises(ValueError, match="retained_radius"):
        make_workspace(grid, xs, retained_radius=-1.0)


def test_weak_form_vanishes_for_constant_test_function(ws, gaussian, grid) -> None:
    other = maxwellian(grid, 1.1, (0.2, -0.3, 0.0))
    ones = Distribution(grid=grid, values=np.ones(grid.shape))
    assert abs(weak_form_pairing(other, gaussian, ones, ws)) < 1e-8


def test_weak_form_is_linear_in_g(ws, gaussian, grid) -> None:
    other = maxwellian(grid, 1.1, (0.2, -0.3, 0.0))
    psi = maxwellian(grid, 2.0)
    base = weak_form_pairing(other, gaussian, psi, ws)
    tripled = weak_form_pairing(other.scaled(3.0), gaussian, psi, ws)
    assert tripled == pytest.approx(3.0 * base, rel=1e-9, abs=1e-14)


def test_trilinear_form_is_zero_for_zero_field(ws, gaussian, grid) -> None:
    zero = forward_transform(Distribution(grid=grid, values=np.zeros(grid.shape)))
    g_hat = forward_transform(gaussian)
    h_hat = forward_transform(maxwellian(grid, 0.6))
    assert trilinear_qc(zero, g_hat, h_hat, ws) == 0.0


def test_trilinear_form_is_linear_in_f(ws, gaussian, grid) -> None:
    g_hat = forward_transform(maxwellian(grid, 1.1))
    h_hat = forward_transform(maxwellian(grid, 0.6))
    base = trilinear_qc(forward_transform(gaussian), g_hat, h_hat, ws)
    doubled = trilinear_qc(forward_transform(gaussian.scaled(2.0)), g_hat, h_hat, ws)
    assert doubled == pytest.approx(2.0 * base, rel=1e-9, abs=1e-14)


def test_cancellation_integral_trivial_cases(ws, gaussian, grid) -> None:
    constant = Distribution(grid=grid, values=np.full(grid.shape, 0.7))
    assert abs(cancellation_integral(gaussian, constant, ws)) < 1e-8
    zero = Distribution(grid=grid, values=np.zeros(grid.shape))
    assert cancellation_integral(zero, gaussian, ws) == 0.0


def test_coercive_splitting_identity(ws, gaussian, grid) -> None:
    f = maxwellian(grid, 0.5, (0.0, 0.4, 0.0))
    pairing, c_gamma, cancel = coercive_terms(gaussian, f, ws)
    assert c_gamma >= 0.0
    scale = c_gamma + abs(cancel)
    assert abs(pairing - (0.5 * c_gamma - 0.5 * cancel)) <= 1e-10 * scale
    assert coercive_pairing(gaussian, f, ws) == (pairing, c_gamma)


def test_coercive_pairing_of_constant_field(ws, gaussian, grid) -> None:
    constant = Distribution(grid=grid, values=np.full(grid.shape, 0.3))
    _, c_gamma = coercive_pairing(gaussian, constant, ws)
    assert abs(c_gamma) < 1e-12


def test_coercive_pairing_rejects_negative_g(ws, gaussian) -> None:
    with pytest.raises(ValueError, match="nonnegative"):
        coercive_pairing(gaussian.scaled(-1.0), gaussian, ws)


def test_energy_test_function_sampled_from_the_lattice(grid, xs, gaussian) -> None:
    energy = Distribution(grid=grid, values=np.sum(grid.velocities**2, axis=0))

    def exact(points: np.ndarray) -> np.ndarray:
        return np.sum(points**2, axis=0)

    values = {
        method: weak_form_pairing(
            gaussian, gaussian, energy, make_workspace(grid, xs, interpolation=method)
        )
        for method in ("spectral", "linear")
    }
    reference = weak_form_pairing(gaussian, gaussian, exact, make_workspace(grid, xs))
    assert abs(values["spectral"] - reference) < abs(values["linear"] - reference)
