"""
Compatibility wrapper for mollifier API.
"""

from boltzmann_smoothing.mollifier_ttc.codebase.api import (
    CONSTRAINT_TAGS,
    DEFAULT_DELTAS,
    REGIONS,
    RESTRICTION,
    SLIGHT,
    FrequencySample,
    MollifierSchedule,
    MollifierSymbol,
    SweepReport,
    apply_mollifier,
    bracket,
    classify_regions,
    default_n0,
    derivative_ratios,
    difference_bound_check,
    difference_bound_sweep,
    log_bracket_root,
    make_schedule,
    make_symbol,
    step_drift,
    symbol_derivative_bound_check,
    symbol_value,
)

__all__ = [
    "MollifierSymbol",
    "MollifierSchedule",
    "make_symbol",
    "make_schedule",
    "bracket",
    "RESTRICTION",
    "SLIGHT",
    "CONSTRAINT_TAGS",
    "symbol_value",
    "apply_mollifier",
    "log_bracket_root",
    "default_n0",
    "FrequencySample",
    "SweepReport",
    "REGIONS",
    "DEFAULT_DELTAS",
    "step_drift",
    "derivative_ratios",
    "symbol_derivative_bound_check",
    "classify_regions",
    "difference_bound_check",
    "difference_bound_sweep",
]
