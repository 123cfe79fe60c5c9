import math

import numpy as np
import pytest

from boltzmann_smoothing.collision import make_workspace
from boltzmann_smoothing.functionals import weighted_lp_norm
from boltzmann_smoothing.grid import Weight, quadrature
from boltzmann_smoothing.mollifier import FrequencySample, make_symbol
from boltzmann_smoothing.veritas import (
    FAIL,
    INCONCLUSIVE,
    INEQUALITIES,
    INEQUALITY_ALIASES,
    PARAMETER_KEYS,
    PASS,
    FitCase,
    FunctionFamily,
    TrailLevel,
    VerifyRequest,
    bkw_fourth_moment,
    bkw_profile,
    bkw_shape,
    check_interpolation_lq,
    check_interpolation_sobolev,
    check_moment_bkw,
    check_symbol_derivative,
    commutator_hypotheses,
    decide,
    fit_two_term,
    fourth_moment_rate,
    lq_exponents,
    lq_terms,
    regime_tag,
    regime_tags,
    register_inequality,
    resolve_inequality,
    run_check,
)
from conftest import coarse_cross_section


@pytest.mark.parametrize(
    "gamma, s, tag",
    [
        (0.5, 0.3, "hard"),
        (-0.5, 0.5, "moderately-soft"),
        (-1.2, 0.7, "very-soft"),
        (-2.5, 0.5, "outside"),
    ],
)
def test_regime_tag(gamma: float, s: float, tag: str) -> None:
    assert regime_tag(gamma, s) == tag


def test_hard_mild_tag() -> None:
    assert regime_tags(0.5, 0.3) == ("hard", "hard-mild")
    assert regime_tags(0.5, 0.7) == ("hard",)


def test_ratio_conventions() -> None:
    assert FitCase(lhs=0.0, rhs=0.0).ratio == 0.0
    assert math.isinf(FitCase(lhs=1.0, rhs=0.0).ratio)
    assert FitCase(lhs=-1.0, rhs=1.0).ratio == 0.0
    assert FitCase(lhs=1.0, rhs=4.0).ratio == pytest.approx(0.25)


def test_fit_two_term() -> None:
    fit = fit_two_term([2.0, 3.0], [1.0, 1.0], [1.0, 1.0])
    assert fit.feasible
    assert fit.cap == pytest.approx(2.0)
    assert fit.c == pytest.approx(4.0, rel=1e-6)
    assert fit.C == pytest.approx(2.0, rel=1e-6)


def test_fit_two_term_without_remainder() -> None:
    fit = fit_two_term([1.0], [2.0], [0.0])
    assert fit.c == pytest.approx(0.5, rel=1e-6)
    assert fit.C == pytest.approx(0.0, abs=1e-9)


def test_fit_two_term_rejects_bad_input() -> None:
    with pytest.raises(ValueError, match="nonnegative"):
        fit_two_term([1.0], [-1.0], [1.0])
    with pytest.raises(ValueError, match="at least one case"):
        fit_two_term([], [], [])


def _trail(*constants: float) -> list[TrailLevel]:
    return [TrailLevel("sample", i, c) for i, c in enumerate(constants)]


def test_decide() -> None:
    assert decide(_trail(1.0, 1.2)) == PASS
    assert decide(_trail(1.0, 3.0)) == FAIL
    assert decide(_trail(1.0, math.inf)) == FAIL
    assert decide(_trail(3.0, 1.0)) == INCONCLUSIVE
    assert decide(_trail(1.0, 1.2), hypotheses_met=False) == INCONCLUSIVE
    assert decide(_trail(1.0, 1.2), extra_ok=False) == INCONCLUSIVE


def test_family_is_reproducible(grid) -> None:
    family = FunctionFamily("bump_sum", count=3, seed=5)
    np.testing.assert_array_equal(family.member(grid, 2).values, family.member(grid, 2).values)
    members = family.generate(grid)
    assert len(members) == 3
    assert all(m.nonnegative for m in members)
    other = FunctionFamily("bump_sum", count=3, seed=6).member(grid, 0)
    assert not np.array_equal(members[0].values, other.values)


def test_family_validation(grid) -> None:
    with pytest.raises(ValueError, match="unknown generator"):
        FunctionFamily("spline").validate()
    with pytest.raises(ValueError, match="parameters"):
        FunctionFamily("bump_sum", parameters={"width": 1.0}).validate()
    signed = FunctionFamily("random_band_limited")
    assert signed.signed
    with pytest.raises(ValueError, match="nonnegative"):
        signed.generate_in_class(grid, None)  # type: ignore[arg-type]


def test_bkw_profile_moments(fine_grid) -> None:
    for K in (0.6, 0.8, 1.0):
        f = bkw_profile(fine_grid, K)
        assert quadrature(f) == pytest.approx(1.0, rel=1e-3)
        assert quadrature(f, Weight("speed_power", ell=4.0)) == pytest.approx(
            bkw_fourth_moment(K), rel=1e-3
        )
    with pytest.raises(ValueError):
        bkw_profile(fine_grid, 0.5)


def test_bkw_shape_relaxes_to_one() -> None:
    assert bkw_shape(0.0, 2.0) == pytest.approx(0.6)
    assert bkw_shape(100.0, 2.0) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        bkw_shape(0.0, 1.0, k0=0.2)


def test_fourth_moment_rate_needs_maxwellian_molecules(grid) -> None:
    with pytest.raises(ValueError, match="gamma = 0"):
        fourth_moment_rate(bkw_profile(grid, 0.8), coarse_cross_section(0.5))


def test_lq_exponents() -> None:
    exps = lq_exponents(2.0, 1.5, 1.0)
    assert exps["a"] == pytest.approx(2.0 / 3.0)
    assert exps["b"] == pytest.approx(1.0 / 3.0)
    assert exps["m"] == pytest.approx(3.0)
    with pytest.raises(ValueError):
        lq_exponents(2.0, 2.0, 0.0)


def test_lq_terms_use_affine_weights(fine_grid) -> None:
    f = FunctionFamily("gaussian_mixture", count=1, seed=6).generate(fine_grid)[0]
    terms = lq_terms(f, 2.0, 1.5, 1.0)
    m = lq_exponents(2.0, 1.5, 1.0)["m"]
    assert terms["lq"] == pytest.approx(weighted_lp_norm(f, 1.5, 1.0), rel=1e-10)
    assert terms["l1m"] == pytest.approx(weighted_lp_norm(f, 1.0, m), rel=1e-10)
    assert terms["lp"] == pytest.approx(weighted_lp_norm(f, 2.0, 0.0), rel=1e-10)
    assert terms["lq"] <= terms["rhs"]


def test_interpolation_lq_holds_with_constant_two(fine_grid) -> None:
    family = FunctionFamily("gaussian_mixture", count=3, seed=1)
    report = check_interpolation_lq(family, fine_grid, p=2.0, q=1.5, ell=1.0)
    assert report.verdict == PASS
    assert report.constants["C"] == 2.0
    assert report.constants["worst_ratio"] <= 1.0 + 1e-8
    assert report.notes == ()


def test_commutator_hypotheses() -> None:
    assert commutator_hypotheses(0.0, 0.5, 0.4, 1.0, 3.5) == []
    problems = commutator_hypotheses(-1.5, 0.5, 0.6, 1.0, 10.0)
    assert "gamma + 2s > 0" in problems
    assert "0 < s' < s" in problems


def test_moment_bkw_is_inconclusive_off_maxwellian_molecules(grid) -> None:
    ws = make_workspace(grid, coarse_cross_section(0.5))
    report = check_moment_bkw(ws, shapes=(0.8,))
    assert report.verdict == INCONCLUSIVE
    assert report.notes


def test_symbol_derivative_constants_are_finite() -> None:
    report = check_symbol_derivative(
        make_symbol(2.0, 0.0, 4.0), FrequencySample(count=32, radius=32.0, seed=3)
    )
    assert report.inequality == "symbol-3.2"
    assert math.isfinite(report.constants["C1"]) and math.isfinite(report.constants["C2"])


def test_registry_contents() -> None:
    assert len(INEQUALITIES) == 13
    assert {
        "coer-2.2",
        "coer-2.3",
        "entropy-2.6",
        "upper-3.5",
        "commutator-3.4",
        "interp-3.5",
        "interp-3.6",
        "mollifier-3.3",
        "mollifier-3.4",
        "symbol-3.2",
    } <= set(INEQUALITIES)
    assert set(INEQUALITY_ALIASES.values()) <= set(INEQUALITIES)
    assert "lambda" in PARAMETER_KEYS
    with pytest.raises(ValueError, match="already registered"):
        register_inequality("interp-3.6", INEQUALITIES["interp-3.6"])
    with pytest.raises(ValueError, match="already registered"):
        register_inequality("interp-lq", INEQUALITIES["interp-3.6"])


def test_aliases_resolve_to_canonical_ids() -> None:
    assert resolve_inequality("interp-lq") == "interp-3.6"
    assert resolve_inequality("coercivity-lq") == "coer-2.3"
    assert resolve_inequality("moment-bkw") == "moment-bkw"
    with pytest.raises(ValueError, match="unknown inequality"):
        resolve_inequality("interp-9.9")


def test_run_check_dispatch(ws) -> None:
    report = run_check(
        VerifyRequest("interp-3.6", ws, seed=2, family_size=2, parameters={"p": "2", "q": "1.5"})
    )
    assert report.inequality == "interp-3.6" and report.verdict == PASS
    assert report.constants["C"] == 2.0
    by_alias = run_check(
        VerifyRequest("interp-lq", ws, seed=2, family_size=2, parameters={"p": "2", "q": "1.5"})
    )
    assert by_alias.inequality == "interp-3.6"
    assert [c.ratio for c in by_alias.cases] == [c.ratio for c in report.cases]
    with pytest.raises(ValueError, match="unknown inequality"):
        run_check(VerifyRequest("nope", ws))
    with pytest.raises(ValueError, match="family_size"):
        run_check(VerifyRequest("interp-lq", ws, family_size=0))


def test_run_check_parses_list_parameters(ws) -> None:
    report = run_check(
        VerifyRequest(
            "mollifier-difference", ws, sample_count=16, parameters={"deltas": "1, 0.1"}
        )
    )
    assert report.inequality == "mollifier-3.3"
    assert {case.label for case in report.cases} == {"delta=1", "delta=0.1"}


def test_unweighted_sobolev_interpolation_is_cauchy_schwarz(grid) -> None:
    family = FunctionFamily("gaussian_mixture", count=3, seed=4)
    report = check_interpolation_sobolev(family, grid, k=1.0, p=0.0, delta=0.5)
    assert report.inequality == "interp-3.5"
    assert len(report.cases) == 3
    assert report.constants["C_delta"] <= 1.0 + 1e-10
    with pytest.raises(ValueError, match="gap"):
        check_interpolation_sobolev(family, grid, k=1.0, p=0.0, delta=0.0)
    with pytest.raises(ValueError, match="weight"):
        check_interpolation_sobolev(family, grid, k=1.0, p=-1.0, delta=0.5)


@pytest.mark.slow
@pytest.mark.parametrize(
    "inequality", ["coer-2.2", "entropy-2.6", "upper-3.5", "commutator-3.4"]
)
def test_collision_checks_produce_reports(ws, inequality: str) -> None:
    report = run_check(VerifyRequest(inequality, ws, seed=5, family_size=2, sample_count=4))
    assert report.inequality == inequality
    assert report.cases
    assert report.verdict in (PASS, FAIL, INCONCLUSIVE)
