import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boltzmann_smoothing.grid import (
    Distribution,
    Weight,
    check_same_grid,
    forward_transform,
    inner_product,
    inverse_transform,
    make_grid,
    nyquist_filtered,
    quadrature,
    spectral_inner_product,
    weight_values,
)
from conftest import maxwellian


@pytest.mark.parametrize("n, width", [(3, 4.0), (7, 4.0), (8, 0.0), (8, -1.0), (8, math.inf)])
def test_make_grid_rejects_bad_parameters(n: int, width: float) -> None:
    with pytest.raises(ValueError):
        make_grid(n, width)


def test_grid_geometry() -> None:
    grid = make_grid(8, 4.0)
    assert grid.spacing == pytest.approx(1.0)
    assert grid.axis[0] == pytest.approx(-4.0)
    assert grid.frequency_step == pytest.approx(math.pi / 4.0)
    assert grid.index_axis.tolist() == [0, 1, 2, 3, -4, -3, -2, -1]
    assert int(grid.nyquist_mask.sum()) == 8**3 - 7**3


def test_check_same_grid_mismatch() -> None:
    with pytest.raises(ValueError, match="grid mismatch"):
        check_same_grid(make_grid(8, 4.0), make_grid(8, 5.0))


def test_nonnegative_flag_is_enforced(grid) -> None:
    values = np.zeros(grid.shape)
    values[0, 0, 0] = -1.0
    with pytest.raises(ValueError, match="nonnegative"):
        Distribution(grid=grid, values=values, nonnegative=True)


def test_clipped_reports_every_zeroed_value(grid) -> None:
    values = np.ones(grid.shape)
    values[0, 0, 0] = -0.5
    values[1, 0, 0] = -1e-14
    clipped, removed = Distribution(grid=grid, values=values).clipped()
    assert clipped.nonnegative
    assert float(clipped.values.min()) == 0.0
    assert removed == pytest.approx(-(0.5 + 1e-14) * grid.cell_volume, rel=1e-12)
    assert quadrature(clipped) - quadrature(Distribution(grid=grid, values=values)) == (
        pytest.approx(-removed, rel=1e-9)
    )


def test_maxwellian_mass_and_energy(fine_grid) -> None:
    f = maxwellian(fine_grid)
    assert quadrature(f) == pytest.approx(1.0, rel=1e-6)
    assert quadrature(f, "speed_squared") == pytest.approx(3.0, rel=1e-6)
    assert quadrature(f, Weight("coordinate", axis=1)) == pytest.approx(0.0, abs=1e-12)


def test_unknown_weight_family(grid) -> None:
    with pytest.raises(ValueError, match="unregistered weight family"):
        weight_values(grid, "nope")


def test_transform_of_gaussian_matches_continuum(fine_grid) -> None:
    spectrum = forward_transform(maxwellian(fine_grid))
    expected = np.exp(-0.5 * fine_grid.frequency_norm**2)
    paired = ~fine_grid.nyquist_mask
    assert np.max(np.abs(spectrum.coefficients[paired] - expected[paired])) < 1e-6
    assert spectrum.hermitian_defect() < 1e-12


def test_round_trip_of_filtered_field(gaussian) -> None:
    filtered = nyquist_filtered(gaussian)
    back = inverse_transform(forward_transform(filtered))
    np.testing.assert_allclose(back.values, filtered.values, atol=1e-12)


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_parseval(seed: int) -> None:
    grid = make_grid(8, 3.0)
    rng = np.random.default_rng(seed)
    f = Distribution(grid=grid, values=rng.normal(size=grid.shape))
    g = Distribution(grid=grid, values=rng.normal(size=grid.shape))
    velocity_side = inner_product(f, g)
    frequency_side = spectral_inner_product(forward_transform(f), forward_transform(g))
    assert frequency_side.real == pytest.approx(velocity_side, rel=1e-9, abs=1e-9)
    assert abs(frequency_side.imag) < 1e-9
