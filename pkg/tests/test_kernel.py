import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boltzmann_smoothing.kernel import (
    angular_kernel,
    angular_moment,
    cell_average_origin,
    clear_tables,
    collision_geometry,
    cutoff_bump,
    jacobian_xi_plus,
    kinetic_on_lattice,
    kinetic_split,
    local_frames,
    make_angular_rule,
    make_cross_section,
    phi_c_hat,
    phi_c_hat_direct,
    phi_c_hat_values,
    sigma_nodes,
    xi_minus,
)
from conftest import coarse_cross_section


def test_gamma_below_minus_three_is_rejected() -> None:
    with pytest.raises(ValueError, match="gamma > -3"):
        make_cross_section(-3.5, 0.5)


@pytest.mark.parametrize("s", [0.0, 1.0, -0.2])
def test_singularity_order_range(s: float) -> None:
    with pytest.raises(ValueError, match="0 < s < 1"):
        make_cross_section(0.0, s)


def test_cutoff_radii_order() -> None:
    with pytest.raises(ValueError, match="r_in < r_out"):
        make_cross_section(0.0, 0.5, r_in=2.0, r_out=1.0)


def test_cutoff_bump_profile() -> None:
    r = np.array([0.0, 1.0, 1.5, 2.0, 3.0])
    values = cutoff_bump(r, 1.0, 2.0)
    assert values[0] == 1.0 and values[1] == 1.0
    assert values[2] == pytest.approx(math.exp(1.0 - 1.0 / 0.75))
    assert values[3] == 0.0 and values[4] == 0.0
    assert np.all(np.diff(values) <= 0)


@pytest.mark.parametrize("gamma", [-1.2, 0.0, 0.5, 1.0])
def test_kinetic_split_sums_to_power(gamma: float) -> None:
    xs = coarse_cross_section(gamma)
    for r in (0.3, 1.0, 1.4, 1.9, 2.5):
        compact, tail = kinetic_split(r, xs)
        assert compact + tail == pytest.approx(r**gamma, rel=1e-12)
    assert kinetic_split(3.0, xs)[0] == 0.0
    assert kinetic_split(0.5, xs)[1] == 0.0


def test_kinetic_split_rejects_negative_radius(xs) -> None:
    with pytest.raises(ValueError):
        kinetic_split(-1.0, xs)


def test_kinetic_on_lattice_fills_origin_with_cell_average() -> None:
    xs = coarse_cross_section(-1.5)
    values = kinetic_on_lattice(np.array([0.0, 1.0]), xs, spacing=0.5)
    assert values[0] == pytest.approx(cell_average_origin(0.5, -1.5))
    assert values[1] == pytest.approx(1.0)
    assert kinetic_on_lattice(np.array([0.0]), xs, 0.5, part="tail")[0] == 0.0
    with pytest.raises(ValueError, match="unknown kinetic part"):
        kinetic_on_lattice(np.array([1.0]), xs, 0.5, part="both")


def test_angular_kernel_domain(xs) -> None:
    assert angular_kernel(math.cos(0.5), xs) == pytest.approx(0.5 ** (-3.0))
    with pytest.raises(ValueError, match="pole"):
        angular_kernel(1.0, xs)
    with pytest.raises(ValueError, match="exceeds pi/2"):
        angular_kernel(-0.5, xs)
    with pytest.raises(ValueError):
        angular_kernel(1.5, xs)


def test_angular_moment_is_finite_and_positive() -> None:
    xs = make_cross_section(0.0, 0.5, theta_min=1e-3, theta_panels=6, azimuth_nodes=2)
    moment = angular_moment(xs)
    # 2 pi int_0^{pi/2} theta^{-1} sin(theta) dtheta, truncated at theta_min
    assert 0.0 < moment < 2.0 * math.pi * (math.pi / 2)


def test_angular_rule_rejects_bad_theta_min() -> None:
    with pytest.raises(ValueError, match="theta_min"):
        make_angular_rule(theta_min=2.0)


unit = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)


@settings(max_examples=50, deadline=None)
@given(
    v=st.tuples(unit, unit, unit),
    w=st.tuples(unit, unit, unit),
    theta=st.floats(min_value=0.0, max_value=math.pi),
    phi=st.floats(min_value=0.0, max_value=2 * math.pi),
)
def test_collision_conserves_momentum_and_energy(v, w, theta, phi) -> None:
    v, w = np.array(v), np.array(w)
    sigma = np.array(
        [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
    )
    sigma /= np.linalg.norm(sigma)
    vp, wp = collision_geometry(v, w, sigma)
    np.testing.assert_allclose(vp + wp, v + w, atol=1e-12)
    assert vp @ vp + wp @ wp == pytest.approx(v @ v + w @ w, abs=1e-10)


def test_collision_geometry_requires_unit_sigma() -> None:
    with pytest.raises(ValueError, match="unit vector"):
        collision_geometry(np.zeros(3), np.ones(3), np.array([0.0, 0.0, 2.0]))


def test_jacobian_range() -> None:
    assert jacobian_xi_plus(0.0) == pytest.approx(0.25)
    assert jacobian_xi_plus(math.pi / 2) == pytest.approx(0.125)
    with pytest.raises(ValueError):
        jacobian_xi_plus(2.0)


def test_local_frames_are_orthonormal() -> None:
    directions = np.array([[0.0, 0.0, 1.0], [1.0, 2.0, -0.5], [0.0, 0.0, 0.0], [0.3, -0.1, 0.0]])
    e1, e2, k = local_frames(directions)
    for a, b in ((e1, e2), (e1, k), (e2, k)):
        np.testing.assert_allclose(np.sum(a * b, axis=-1), 0.0, atol=1e-12)
    for a in (e1, e2, k):
        np.testing.assert_allclose(np.linalg.norm(a, axis=-1), 1.0, atol=1e-12)


def test_xi_minus_and_plus_split(xs) -> None:
    xi = np.array([[0.7, -1.2, 2.0]])
    sigma = sigma_nodes(xi, xs.rule)
    minus = xi_minus(xi, sigma)
    plus = xi[:, None, :] - minus
    np.testing.assert_allclose(
        np.linalg.norm(plus, axis=-1) ** 2 + np.linalg.norm(minus, axis=-1) ** 2,
        np.linalg.norm(xi) ** 2 * np.ones(sigma.shape[:-1]),
        rtol=1e-10,
    )


def test_phi_c_hat_at_origin_is_the_integral_of_the_compact_part() -> None:
    xs = coarse_cross_section(0.0)
    r = np.linspace(0.0, 2.0, 20001)
    integrand = 4.0 * math.pi * r**2 * cutoff_bump(r, 1.0, 2.0)
    assert phi_c_hat(0.0, xs) == pytest.approx(np.trapezoid(integrand, r), rel=1e-4)


def test_phi_c_hat_table_matches_direct_quadrature() -> None:
    clear_tables()
    xs = coarse_cross_section(-1.0)
    rho = np.linspace(0.0, 6.0, 37)
    np.testing.assert_allclose(
        phi_c_hat_values(rho, xs), phi_c_hat_direct(rho, xs), rtol=1e-5, atol=1e-7
    )
    with pytest.raises(ValueError):
        phi_c_hat(-1.0, xs)
