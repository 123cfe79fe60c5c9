"""
Public API surface for evolution tasks.
"""

from boltzmann_smoothing.evolution_ttc.tasks.ledger_tasks import energy_ledger
from boltzmann_smoothing.evolution_ttc.tasks.stepping_tasks import (
    entropy_dissipation_integral,
    estimate_stable_dt,
    simulate,
    step,
    step_report,
)
from boltzmann_smoothing.evolution_ttc.tasks.tracker_tasks import (
    bootstrap_stages,
    regularity_tracker,
    shell_spectrum,
    tail_exponent,
)
from boltzmann_smoothing.evolution_ttc.tools.trajectory_tools import (
    SCHEME_ORDERS,
    SCHEMES,
    CheckpointSpec,
    LedgerReport,
    StepResult,
    TrackerReport,
    Trajectory,
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
