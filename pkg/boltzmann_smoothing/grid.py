"""
Compatibility wrapper for grid API.
"""

from boltzmann_smoothing.grid_ttc.codebase.api import (
    WEIGHT_FAMILIES,
    Distribution,
    Spectrum,
    VelocityGrid,
    Weight,
    apply_multiplier,
    check_same_grid,
    forward_transform,
    inner_product,
    inverse_transform,
    make_grid,
    nyquist_filtered,
    quadrature,
    register_weight,
    spectral_inner_product,
    weight_values,
    zero_nyquist,
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
