"""
Angular kernel evaluation and grazing-moment diagnostics.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from boltzmann_smoothing.kernel_ttc.tools.cross_section_tools import (
    HALF_PI,
    CrossSection,
    make_angular_rule,
)
from boltzmann_smoothing.utils import reduce_sum


def angular_kernel(cos_theta: float, xs: CrossSection) -> float:
    """b(cos theta) of the configured kernel for theta in (0, pi/2]."""
    if not -1.0 <= cos_theta <= 1.0:
        raise ValueError(f"cos_theta must lie in [-1, 1], got {cos_theta}")
    theta = math.acos(cos_theta)
    if theta == 0.0:
        raise ValueError("b(cos theta) has a pole at theta = 0")
    if theta > HALF_PI + 1e-12:
        raise ValueError(f"theta={theta:.6f} exceeds pi/2 (deviation angles only)")
    return float(xs.b(np.array([theta]))[0])


def angular_moment(xs: CrossSection, power: float = 2.0) -> float:
    """sum over sigma nodes of w b theta^power (the sin(theta) measure sits in w)."""
    theta, _, _ = xs.rule.flat_nodes
    return reduce_sum(xs.sigma_weights * theta**power)


def angular_convergence(xs: CrossSection, levels: int = 4, power: float = 2.0) -> dict[str, Any]:
    """
    Halve theta_min ``levels`` times and report the moment trail and observed rates.

    The missing piece of the theta^2 moment scales like theta_min^(2-2s), so successive
    differences should shrink by 2^(2-2s).
    """
    rule = xs.rule
    moments = []
    theta_mins = []
    for level in range(levels + 1):
        theta_min = rule.theta_min / 2**level
        refined = xs.with_rule(
            make_angular_rule(
                theta_min, rule.panels + level, rule.nodes_per_panel, rule.azimuth_nodes
            )
        )
        theta_mins.append(theta_min)
        moments.append(angular_moment(refined, power))
    diffs = np.abs(np.diff(moments))
    rates = [
        math.log2(diffs[i] / diffs[i + 1]) if diffs[i + 1] > 0 and diffs[i] > 0 else math.nan
        for i in range(diffs.size - 1)
    ]
    return {
        "theta_min": theta_mins,
        "moments": moments,
        "observed_rates": rates,
        "expected_rate": 2.0 - 2.0 * xs.s,
    }
