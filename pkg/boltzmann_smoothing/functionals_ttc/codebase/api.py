"""
Public API surface for functionals tasks.
"""

from boltzmann_smoothing.functionals_ttc.tasks.dissipation_tasks import (
    DissipationReport,
    dissipation_report,
    entropy_dissipation,
    symmetrized_dissipation,
)
from boltzmann_smoothing.functionals_ttc.tasks.norm_tasks import (
    embedding_ratio,
    entropy,
    entropy_magnitude,
    llogl_norm,
    lq_weight_norm,
    moment_series,
    moments,
    norm,
    sqrt_sobolev,
    time_continuity,
    weighted_lp_norm,
    weighted_sobolev_norm,
)
from boltzmann_smoothing.functionals_ttc.tasks.uniform_class_tasks import (
    truncated_masses,
    uniform_class_check,
    uniform_class_radii,
)
from boltzmann_smoothing.functionals_ttc.tools.request_tools import (
    NORM_FAMILIES,
    ClassWitness,
    Moments,
    NormRequest,
    UniformClassParams,
)

__all__ = [
    "NORM_FAMILIES",
    "NormRequest",
    "Moments",
    "UniformClassParams",
    "ClassWitness",
    "DissipationReport",
    "norm",
    "weighted_lp_norm",
    "weighted_sobolev_norm",
    "llogl_norm",
    "entropy",
    "entropy_magnitude",
    "moments",
    "moment_series",
    "sqrt_sobolev",
    "lq_weight_norm",
    "embedding_ratio",
    "time_continuity",
    "entropy_dissipation",
    "symmetrized_dissipation",
    "dissipation_report",
    "uniform_class_radii",
    "uniform_class_check",
    "truncated_masses",
]
