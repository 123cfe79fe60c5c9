"""
Public API surface for collision tasks.
"""

from boltzmann_smoothing.collision_ttc.tasks.operator_tasks import (
    CollisionResult,
    apply_q,
    apply_q_report,
    cancellation_diagnostics,
    cancellation_kernel,
    collision_diagnostics,
    commutator_pairing,
    conservative_projection,
    gain_loss_split,
    loss_rate,
    production_moments,
    tail_commutator_check,
)
from boltzmann_smoothing.collision_ttc.tasks.spectral_tasks import (
    apply_qc,
    spectral_collision,
    spectral_commutator,
    spectral_loss,
    trilinear_qc,
)
from boltzmann_smoothing.collision_ttc.tasks.velocity_tasks import (
    cancellation_integral,
    coercive_pairing,
    coercive_terms,
    make_offsets,
    velocity_collision,
    velocity_loss_rate,
    velocity_q,
    weak_form_pairing,
)
from boltzmann_smoothing.collision_ttc.tools.shift_tools import (
    FieldSampler,
    OffsetRule,
    lattice_offsets,
    spherical_offsets,
    trig_sum,
)
from boltzmann_smoothing.collision_ttc.tools.workspace_tools import (
    INTERPOLATIONS,
    CollisionWorkspace,
    check_budget,
    make_workspace,
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
