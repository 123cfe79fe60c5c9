"""
Compatibility wrapper for collision API.
"""

from boltzmann_smoothing.collision_ttc.codebase.api import (
    INTERPOLATIONS,
    CollisionResult,
    CollisionWorkspace,
    FieldSampler,
    OffsetRule,
    apply_q,
    apply_q_report,
    apply_qc,
    cancellation_diagnostics,
    cancellation_integral,
    cancellation_kernel,
    check_budget,
    coercive_pairing,
    coercive_terms,
    collision_diagnostics,
    commutator_pairing,
    conservative_projection,
    gain_loss_split,
    lattice_offsets,
    loss_rate,
    make_offsets,
    make_workspace,
    production_moments,
    spectral_collision,
    spectral_commutator,
    spectral_loss,
    spherical_offsets,
    tail_commutator_check,
    trig_sum,
    trilinear_qc,
    velocity_collision,
    velocity_loss_rate,
    velocity_q,
    weak_form_pairing,
)

__all__ = [
    "CollisionWorkspace",
    "INTERPOLATIONS",
    "make_workspace",
    "check_budget",
    "FieldSampler",
    "OffsetRule",
    "lattice_offsets",
    "spherical_offsets",
    "make_offsets",
    "trig_sum",
    "weak_form_pairing",
    "trilinear_qc",
    "spectral_collision",
    "spectral_commutator",
    "spectral_loss",
    "apply_qc",
    "velocity_collision",
    "velocity_loss_rate",
    "loss_rate",
    "velocity_q",
    "apply_q",
    "apply_q_report",
    "CollisionResult",
    "gain_loss_split",
    "collision_diagnostics",
    "production_moments",
    "conservative_projection",
    "commutator_pairing",
    "tail_commutator_check",
    "cancellation_integral",
    "cancellation_kernel",
    "cancellation_diagnostics",
    "coercive_pairing",
    "coercive_terms",
]
