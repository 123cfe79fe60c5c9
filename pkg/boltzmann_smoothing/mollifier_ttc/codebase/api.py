"""
Public API surface for mollifier tasks.
"""

from boltzmann_smoothing.mollifier_ttc.tasks.bound_tasks import (
    DEFAULT_DELTAS,
    classify_regions,
    derivative_ratios,
    difference_bound_check,
    difference_bound_sweep,
    symbol_derivative_bound_check,
)
from boltzmann_smoothing.mollifier_ttc.tasks.symbol_tasks import (
    apply_mollifier,
    default_n0,
    log_bracket_root,
    symbol_value,
)
from boltzmann_smoothing.mollifier_ttc.tools.sweep_tools import (
    REGIONS,
    FrequencySample,
    SweepReport,
    step_drift,
)
from boltzmann_smoothing.mollifier_ttc.tools.symbol_tools import (
    CONSTRAINT_TAGS,
    RESTRICTION,
    SLIGHT,
    MollifierSchedule,
    MollifierSymbol,
    bracket,
    make_schedule,
    make_symbol,
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
