"""
Compatibility wrapper for evolution API.
"""

from boltzmann_smoothing.evolution_ttc.codebase.api import (
    SCHEME_ORDERS,
    SCHEMES,
    CheckpointSpec,
    LedgerReport,
    StepResult,
    TrackerReport,
    Trajectory,
    bootstrap_stages,
    energy_ledger,
    entropy_dissipation_integral,
    estimate_stable_dt,
    regularity_tracker,
    shell_spectrum,
    simulate,
    step,
    step_report,
    tail_exponent,
)

__all__ = [
    "SCHEMES",
    "SCHEME_ORDERS",
    "CheckpointSpec",
    "StepResult",
    "Trajectory",
    "LedgerReport",
    "TrackerReport",
    "step",
    "step_report",
    "estimate_stable_dt",
    "simulate",
    "entropy_dissipation_integral",
    "energy_ledger",
    "shell_spectrum",
    "tail_exponent",
    "bootstrap_stages",
    "regularity_tracker",
]
