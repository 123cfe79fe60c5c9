"""
Public API surface for veritas tasks.
"""

from boltzmann_smoothing.veritas_ttc.tasks.coercivity_tasks import (
    COERCIVITY_VARIANTS,
    check_coercivity,
    check_dissipation_lq,
    check_entropy_coercivity,
)
from boltzmann_smoothing.veritas_ttc.tasks.interpolation_tasks import (
    LQ_CONSTANT,
    check_interpolation_lq,
    check_interpolation_lq_sweep,
    check_interpolation_sobolev,
    lq_exponents,
    lq_terms,
)
from boltzmann_smoothing.veritas_ttc.tasks.operator_bound_tasks import (
    check_commutator,
    check_moment_bkw,
    check_tail_commutator,
    check_upper_bound,
    commutator_hypotheses,
    fourth_moment_production,
    moment_relaxation_rate,
)
from boltzmann_smoothing.veritas_ttc.tasks.registry_tasks import (
    INEQUALITIES,
    PARAMETER_KEYS,
    register_inequality,
    resolve_inequality,
    run_check,
)
from boltzmann_smoothing.veritas_ttc.tools.inequality_tools import (
    INEQUALITY_ALIASES,
    canonical_inequality,
)
from boltzmann_smoothing.veritas_ttc.tasks.symbol_check_tasks import (
    check_mollifier_difference,
    check_symbol_derivative,
)
from boltzmann_smoothing.veritas_ttc.tools.family_tools import (
    GENERATORS,
    SIGNED_GENERATORS,
    FunctionFamily,
    class_family_parameters,
)
from boltzmann_smoothing.veritas_ttc.tools.fit_tools import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    VERDICTS,
    FitCase,
    FitReport,
    LinearFit,
    TrailLevel,
    decide,
    fit_two_term,
    trail_drift,
)
from boltzmann_smoothing.veritas_ttc.tools.oracle_tools import (
    angular_relaxation_constant,
    bkw_fourth_moment,
    bkw_profile,
    bkw_shape,
    fourth_moment_rate,
    fourth_moment_relaxation_rate,
    regime_tag,
    regime_tags,
)
from boltzmann_smoothing.veritas_ttc.tools.request_tools import VerifyRequest

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
