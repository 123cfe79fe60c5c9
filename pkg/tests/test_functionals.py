import math

import numpy as np
import pytest

from boltzmann_smoothing.functionals import (
    NormRequest,
    UniformClassParams,
    dissipation_report,
    embedding_ratio,
    entropy,
    moment_series,
    moments,
    norm,
    symmetrized_dissipation,
    time_continuity,
    uniform_class_check,
    uniform_class_radii,
    weighted_lp_norm,
    weighted_sobolev_norm,
)
from boltzmann_smoothing.grid import Distribution
from conftest import maxwellian


def test_maxwellian_moments(fine_grid) -> None:
    stats = moments(maxwellian(fine_grid))
    assert stats.mass == pytest.approx(1.0, rel=1e-6)
    assert stats.energy == pytest.approx(1.5, rel=1e-6)
    assert max(abs(p) for p in stats.momentum) < 1e-12
    assert stats.entropy == pytest.approx(-1.5 * (1.0 + math.log(2.0 * math.pi)), rel=1e-5)


def test_moments_of_signed_field_have_no_entropy(grid) -> None:
    values = np.zeros(grid.shape)
    values[1, 2, 3] = -1.0
    stats = moments(Distribution(grid=grid, values=values))
    assert math.isnan(stats.entropy)
    with pytest.raises(ValueError, match="entropy needs f >= 0"):
        entropy(Distribution(grid=grid, values=values))


@pytest.mark.parametrize(
    "request_",
    [
        NormRequest(family="bogus"),
        NormRequest(p=0.5),
        NormRequest(family="Sobolev_weighted", k=math.inf),
    ],
)
def test_norm_request_validation(grid, request_: NormRequest) -> None:
    with pytest.raises(ValueError):
        norm(Distribution.zeros(grid), request_)


def test_norm_dispatch(gaussian) -> None:
    assert norm(gaussian, NormRequest(p=1.0, ell=2.0)) == weighted_lp_norm(gaussian, 1.0, 2.0)
    sobolev = NormRequest(family="Sobolev_weighted", k=1.0, ell=1.0)
    assert norm(gaussian, sobolev) == weighted_sobolev_norm(gaussian, 1.0, 1.0)
    assert NormRequest(p=2.0, ell=1.0).label() == "L^2_1"


def test_sobolev_zero_order_is_l2(gaussian) -> None:
    assert weighted_sobolev_norm(gaussian) == pytest.approx(
        weighted_lp_norm(gaussian, 2.0, 0.0), rel=1e-12
    )


def test_moment_series_increases_with_order(gaussian) -> None:
    series = moment_series(gaussian, [0.0, 2.0, 4.0])
    assert list(series) == ["L1_0", "L1_2", "L1_4"]
    assert series["L1_0"] < series["L1_2"] < series["L1_4"]


def test_uniform_class_radii() -> None:
    R, M, r0 = uniform_class_radii(0.5, 10.0)
    assert R == pytest.approx(2.0 * math.sqrt(40.0))
    assert M == pytest.approx(math.expm1(160.0))
    assert r0 == pytest.approx((1.5 / (16.0 * math.pi * math.exp(160.0))) ** (1.0 / 3.0))
    with pytest.raises(ValueError, match="D0"):
        UniformClassParams(D0=0.0, E0=1.0)


def test_uniform_class_membership(fine_grid) -> None:
    f = maxwellian(fine_grid)
    member, witness = uniform_class_check(f, UniformClassParams(D0=0.5, E0=10.0))
    assert member
    assert witness.centers_checked > 0
    assert witness.truncated_min >= 0.25
    member, witness = uniform_class_check(f, UniformClassParams(D0=2.0, E0=10.0))
    assert not member and not witness.mass_ok


def test_unit_maxwellian_exceeds_energy_bound_four(fine_grid) -> None:
    # (1 + |v|)^2 weight: 1 + 2 E|v| + E|v|^2 = 4 + 2 sqrt(8 / pi)
    f = maxwellian(fine_grid)
    member, witness = uniform_class_check(f, UniformClassParams(D0=0.9, E0=4.0))
    assert not member
    assert witness.mass_ok and not witness.bound_ok
    assert witness.l1_2 == pytest.approx(4.0 + 2.0 * math.sqrt(8.0 / math.pi), rel=1e-2)
    member, _ = uniform_class_check(f, UniformClassParams(D0=0.9, E0=10.0))
    assert member


def test_uniform_class_rejects_negative_values(grid) -> None:
    values = np.zeros(grid.shape)
    values[0, 0, 0] = -1.0
    with pytest.raises(ValueError, match="g >= 0"):
        uniform_class_check(Distribution(grid=grid, values=values), UniformClassParams(1.0, 1.0))


def test_embedding_ratio_bounded_by_lattice_constant(gaussian) -> None:
    report = embedding_ratio(gaussian)
    assert 0.0 < report["ratio"] <= report["lattice_constant"] * (1.0 + 1e-12)
    assert report["continuum_constant"] > 0.0
    with pytest.raises(ValueError):
        embedding_ratio(gaussian, eps=0.0)


def test_time_continuity_rows(grid) -> None:
    states = [maxwellian(grid, t) for t in (1.0, 1.1, 1.3)]
    rows = time_continuity([0.0, 0.5, 1.0], states)
    assert len(rows) == 2
    assert rows[0]["rate"] == pytest.approx(rows[0]["difference"] / 0.5)
    with pytest.raises(ValueError):
        time_continuity([0.0], states)


def test_symmetrized_dissipation_is_nonnegative(ws, gaussian) -> None:
    assert symmetrized_dissipation(gaussian, ws) >= 0.0


def test_dissipation_report_symmetrizes_only_for_same_field(ws, gaussian, grid) -> None:
    assert dissipation_report(gaussian, gaussian, ws).symmetrized is not None
    other = maxwellian(grid, 1.3)
    assert dissipation_report(other, gaussian, ws).symmetrized is None
