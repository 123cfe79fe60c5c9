"""
Compatibility wrapper for functionals API.
"""

from boltzmann_smoothing.functionals_ttc.codebase.api import (
    NORM_FAMILIES,
    ClassWitness,
    DissipationReport,
    Moments,
    NormRequest,
    UniformClassParams,
    dissipation_report,
    embedding_ratio,
    entropy,
    entropy_dissipation,
    entropy_magnitude,
    llogl_norm,
    lq_weight_norm,
    moment_series,
    moments,
    norm,
    sqrt_sobolev,
    symmetrized_dissipation,
    time_continuity,
    truncated_masses,
    uniform_class_check,
    uniform_class_radii,
    weighted_lp_norm,
    weighted_sobolev_norm,
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
