"""
Compatibility wrapper for kernel API.
"""

from boltzmann_smoothing.kernel_ttc.codebase.api import (
    ANGULAR_KERNELS,
    AngularRule,
    CrossSection,
    angular_convergence,
    angular_kernel,
    angular_moment,
    cell_average_origin,
    clear_tables,
    collision_geometry,
    cutoff_bump,
    jacobian_xi_plus,
    kinetic_on_lattice,
    kinetic_parts,
    kinetic_split,
    local_frames,
    make_angular_rule,
    make_cross_section,
    phi_c_hat,
    phi_c_hat_direct,
    phi_c_hat_table,
    phi_c_hat_values,
    radial_rule,
    register_angular_kernel,
    sigma_nodes,
    xi_minus,
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
