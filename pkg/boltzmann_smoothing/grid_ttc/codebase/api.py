"""
Public API surface for grid tasks.
"""

from boltzmann_smoothing.grid_ttc.tasks.quadrature_tasks import (
    WEIGHT_FAMILIES,
    Weight,
    inner_product,
    quadrature,
    register_weight,
    spectral_inner_product,
    weight_values,
)
from boltzmann_smoothing.grid_ttc.tools.fourier_tools import (
    apply_multiplier,
    forward_transform,
    inverse_transform,
    nyquist_filtered,
    zero_nyquist,
)
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import (
    Distribution,
    Spectrum,
    VelocityGrid,
    check_same_grid,
    make_grid,
)

__all__ = [
    "VelocityGrid",
    "Distribution",
    "Spectrum",
    "make_grid",
    "check_same_grid",
    "forward_transform",
    "inverse_transform",
    "zero_nyquist",
    "nyquist_filtered",
    "apply_multiplier",
    "Weight",
    "WEIGHT_FAMILIES",
    "register_weight",
    "weight_values",
    "quadrature",
    "inner_product",
    "spectral_inner_product",
]
