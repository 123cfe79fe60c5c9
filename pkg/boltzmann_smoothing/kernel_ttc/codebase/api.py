"""
Public API surface for kernel tasks.
"""

from boltzmann_smoothing.kernel_ttc.tasks.angular_tasks import (
    angular_convergence,
    angular_kernel,
    angular_moment,
)
from boltzmann_smoothing.kernel_ttc.tasks.geometry_tasks import (
    collision_geometry,
    jacobian_xi_plus,
    local_frames,
    sigma_nodes,
    xi_minus,
)
from boltzmann_smoothing.kernel_ttc.tasks.kinetic_tasks import (
    cell_average_origin,
    clear_tables,
    kinetic_on_lattice,
    kinetic_parts,
    kinetic_split,
    phi_c_hat,
    phi_c_hat_direct,
    phi_c_hat_table,
    phi_c_hat_values,
    radial_rule,
)
from boltzmann_smoothing.kernel_ttc.tools.cross_section_tools import (
    ANGULAR_KERNELS,
    AngularRule,
    CrossSection,
    cutoff_bump,
    make_angular_rule,
    make_cross_section,
    register_angular_kernel,
)

__all__ = [
    "CrossSection",
    "AngularRule",
    "ANGULAR_KERNELS",
    "make_cross_section",
    "make_angular_rule",
    "register_angular_kernel",
    "cutoff_bump",
    "angular_kernel",
    "angular_moment",
    "angular_convergence",
    "kinetic_split",
    "kinetic_parts",
    "kinetic_on_lattice",
    "cell_average_origin",
    "phi_c_hat",
    "phi_c_hat_values",
    "phi_c_hat_direct",
    "phi_c_hat_table",
    "radial_rule",
    "clear_tables",
    "collision_geometry",
    "jacobian_xi_plus",
    "local_frames",
    "sigma_nodes",
    "xi_minus",
]
