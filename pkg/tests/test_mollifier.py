import math

import numpy as np
import pytest

from boltzmann_smoothing.functionals import weighted_sobolev_norm
from boltzmann_smoothing.mollifier import (
    RESTRICTION,
    SLIGHT,
    FrequencySample,
    apply_mollifier,
    classify_regions,
    default_n0,
    derivative_ratios,
    difference_bound_check,
    difference_bound_sweep,
    make_schedule,
    make_symbol,
    step_drift,
    symbol_value,
)


def test_symbol_formula() -> None:
    M = make_symbol(1.0, 0.1, 3.0)
    b = math.sqrt(5.0)
    assert float(M.evaluate(2.0)) == pytest.approx(b / (1.0 + 0.1 * b) ** 3)
    assert symbol_value(np.array([1.0, 2.0, 2.0]), M) == pytest.approx(
        math.sqrt(10.0) / (1.0 + 0.1 * math.sqrt(10.0)) ** 3
    )
    assert make_symbol(0.0, 0.5, 0.0).is_identity


@pytest.mark.parametrize(
    "lam, delta, n0", [(1.0, 1.5, 0.0), (1.0, -0.1, 0.0), (1.0, 0.1, -1.0), (math.inf, 0.0, 0.0)]
)
def test_symbol_validation(lam: float, delta: float, n0: float) -> None:
    with pytest.raises(ValueError):
        make_symbol(lam, delta, n0)


def test_symbol_value_needs_three_components() -> None:
    with pytest.raises(ValueError, match="length 3"):
        symbol_value(np.array([1.0, 2.0]), make_symbol(1.0))


def test_identity_mollifier_returns_a_copy(gaussian) -> None:
    out = apply_mollifier(gaussian, make_symbol(0.0))
    assert out is not gaussian
    np.testing.assert_array_equal(out.values, gaussian.values)


def test_mollifier_of_order_lambda_matches_sobolev_norm(gaussian) -> None:
    smoothed = apply_mollifier(gaussian, make_symbol(1.0))
    assert weighted_sobolev_norm(smoothed) == pytest.approx(
        weighted_sobolev_norm(gaussian, 1.0), rel=1e-10
    )


def test_default_n0() -> None:
    assert default_n0(1.0, -1.0) == pytest.approx(3.0)
    assert default_n0(1.0, -1.0, s_prime=0.6) == pytest.approx(3.1)


def test_schedule_defaults_and_tags() -> None:
    schedule = make_schedule(1.0, 0.5, gamma=0.0, s=0.5)
    assert schedule.n0 == pytest.approx(3.0)
    assert schedule.lam(2.0) == pytest.approx(2.5)
    # 5 + gamma = 2 (n0 - a) holds with equality; the strict one fails at s = 1/2
    assert schedule.tags == (RESTRICTION,)
    assert make_schedule(1.0, 0.5, gamma=0.0, s=0.7).tags == (RESTRICTION, SLIGHT)
    assert make_schedule(1.0, 0.5, n0=10.0).tags == ()


def test_schedule_validation() -> None:
    with pytest.raises(ValueError, match="rate"):
        make_schedule(-1.0, 0.0)
    with pytest.raises(ValueError, match="empty"):
        make_schedule(1.0, 0.0, t_start=1.0, t_end=0.5)


def test_schedule_time_derivative() -> None:
    schedule = make_schedule(2.0, 0.3, delta=0.1, gamma=-1.0, s=0.4)
    xi = np.array([0.0, 0.5, 3.0, 20.0])
    t, h = 0.4, 1e-6
    numeric = (
        schedule.symbol_at(t + h).evaluate(xi) - schedule.symbol_at(t - h).evaluate(xi)
    ) / (2.0 * h)
    np.testing.assert_allclose(schedule.time_derivative(t, xi), numeric, rtol=1e-6, atol=1e-9)


def test_classify_regions() -> None:
    xi = np.array([[1.0, 0.0, 0.0], [4.0, 0.0, 0.0], [10.0, 0.0, 0.0]])
    star = np.array([[5.0, 0.0, 0.0], [3.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
    assert classify_regions(xi, star).tolist() == [0, 1, 2]


def test_difference_bound_check() -> None:
    M = make_symbol(1.0, 0.1, 3.0)
    with pytest.raises(ValueError, match="p >= n0 - lambda"):
        difference_bound_check(np.array([1.0, 0, 0]), np.array([0.5, 0, 0]), M, p=1.0)
    lhs, rhs_power, rhs_indicator, region = difference_bound_check(
        np.array([10.0, 0, 0]), np.zeros(3), M, p=2.0
    )
    assert lhs == 0.0 and region == "near"
    assert rhs_power > 0.0 and rhs_indicator > 0.0


def test_frequency_sample_is_reproducible() -> None:
    sample = FrequencySample(count=32, radius=16.0, seed=7)
    first, second = sample.draw(), sample.draw()
    np.testing.assert_array_equal(first, second)
    assert np.all(first[0] == 0.0)
    assert np.all(np.linalg.norm(first, axis=1) <= 16.0 + 1e-9)
    assert not np.array_equal(first, sample.draw(stream=1))
    assert sample.doubled().count == 64
    with pytest.raises(ValueError):
        FrequencySample(count=0).draw()


def test_step_drift() -> None:
    assert step_drift([1.0, 2.0, 1.0]) == pytest.approx(2.0)
    assert step_drift([0.0, 1.0, 3.0]) == pytest.approx(3.0)
    assert step_drift([]) == 1.0
    assert math.isinf(step_drift([1.0, math.nan]))


def test_derivative_ratios_are_finite_at_the_origin() -> None:
    points = FrequencySample(count=16, radius=32.0, seed=1).draw()
    ratios = derivative_ratios(make_symbol(2.0, 0.01, 5.0), points)
    assert np.all(np.isfinite(ratios[1])) and np.all(np.isfinite(ratios[2]))


def test_difference_sweep_trail() -> None:
    sample = FrequencySample(count=16, radius=32.0, seed=2)
    report = difference_bound_sweep(1.0, 3.0, sample, deltas=(1.0, 0.1), doublings=1)
    assert report.sample_sizes == (16, 32)
    for values in report.trail.values():
        assert len(values) == 2 and values[0] <= values[1]
    assert math.isfinite(report.constant)
    with pytest.raises(ValueError, match="form"):
        difference_bound_sweep(1.0, 3.0, sample, form="other")
