"""
Compatibility wrapper for veritas API.
"""

from boltzmann_smoothing.veritas_ttc.codebase.api import (
    COERCIVITY_VARIANTS,
    FAIL,
    GENERATORS,
    INCONCLUSIVE,
    INEQUALITIES,
    INEQUALITY_ALIASES,
    LQ_CONSTANT,
    PARAMETER_KEYS,
    PASS,
    SIGNED_GENERATORS,
    VERDICTS,
    FitCase,
    FitReport,
    FunctionFamily,
    LinearFit,
    TrailLevel,
    VerifyRequest,
    angular_relaxation_constant,
    bkw_fourth_moment,
    bkw_profile,
    bkw_shape,
    canonical_inequality,
    check_coercivity,
    check_commutator,
    check_dissipation_lq,
    check_entropy_coercivity,
    check_interpolation_lq,
    check_interpolation_lq_sweep,
    check_interpolation_sobolev,
    check_mollifier_difference,
    check_moment_bkw,
    check_symbol_derivative,
    check_tail_commutator,
    check_upper_bound,
    class_family_parameters,
    commutator_hypotheses,
    decide,
    fit_two_term,
    fourth_moment_production,
    fourth_moment_rate,
    fourth_moment_relaxation_rate,
    lq_exponents,
    lq_terms,
    moment_relaxation_rate,
    regime_tag,
    regime_tags,
    register_inequality,
    resolve_inequality,
    run_check,
    trail_drift,
)

__all__ = [
    "PASS",
    "FAIL",
    "INCONCLUSIVE",
    "VERDICTS",
    "FitCase",
    "FitReport",
    "LinearFit",
    "TrailLevel",
    "decide",
    "fit_two_term",
    "trail_drift",
    "FunctionFamily",
    "GENERATORS",
    "SIGNED_GENERATORS",
    "class_family_parameters",
    "VerifyRequest",
    "COERCIVITY_VARIANTS",
    "check_coercivity",
    "check_entropy_coercivity",
    "check_dissipation_lq",
    "check_upper_bound",
    "check_commutator",
    "commutator_hypotheses",
    "check_tail_commutator",
    "check_moment_bkw",
    "fourth_moment_production",
    "moment_relaxation_rate",
    "LQ_CONSTANT",
    "lq_exponents",
    "lq_terms",
    "check_interpolation_sobolev",
    "check_interpolation_lq",
    "check_interpolation_lq_sweep",
    "check_mollifier_difference",
    "check_symbol_derivative",
    "angular_relaxation_constant",
    "bkw_shape",
    "bkw_profile",
    "bkw_fourth_moment",
    "fourth_moment_rate",
    "fourth_moment_relaxation_rate",
    "regime_tag",
    "regime_tags",
    "INEQUALITIES",
    "INEQUALITY_ALIASES",
    "PARAMETER_KEYS",
    "canonical_inequality",
    "register_inequality",
    "resolve_inequality",
    "run_check",
]
