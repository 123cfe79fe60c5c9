"""Cross-section contracts: angular rule, angular kernels and the kinetic cutoff."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import numpy as np
from scipy.special import roots_legendre

from boltzmann_smoothing import config

HALF_PI = 0.5 * math.pi

AngularKernel = Callable[[np.ndarray, "CrossSection"], np.ndarray]


@dataclass(frozen=True, eq=False)
class AngularRule:
    """Product rule over sigma: Gauss theta panels times uniform azimuthal nodes."""

    theta_nodes: np.ndarray = field(repr=False)
    theta_weights: np.ndarray = field(repr=False)
    theta_min: float
    panels: int
    nodes_per_panel: int
    azimuth_nodes: int

    def validate(self) -> None:
        if not 0.0 < self.theta_min < HALF_PI:
            raise ValueError(f"theta_min must lie in (0, pi/2), got {self.theta_min}")
        if self.panels < 1 or self.nodes_per_panel < 1 or self.azimuth_nodes < 1:
            raise ValueError("angular rule needs at least one panel, node and azimuth node")
        if np.any(self.theta_nodes <= self.theta_min) or np.any(self.theta_nodes > HALF_PI):
            raise ValueError("theta nodes must lie in (theta_min, pi/2]")
        if np.any(self.theta_weights <= 0):
            raise ValueError("theta weights must be positive")

    @cached_property
    def azimuth_angles(self) -> np.ndarray:
        """phi_j = 2 pi (j + 1/2) / N_phi; the set is closed under phi -> -phi."""
        return 2.0 * math.pi * (np.arange(self.azimuth_nodes) + 0.5) / self.azimuth_nodes

    @cached_property
    def flat_nodes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(theta, phi, weight) over all sigma nodes, theta-major.

        Weights include sin(theta) d(phi).
        """
        theta = np.repeat(self.theta_nodes, self.azimuth_nodes)
        phi = np.tile(self.azimuth_angles, self.theta_nodes.size)
        weight = np.repeat(self.theta_weights, self.azimuth_nodes) / self.azimuth_nodes
        return theta, phi, weight

    @property
    def size(self) -> int:
        return int(self.theta_nodes.size * self.azimuth_nodes)

    def to_dict(self) -> dict[str, Any]:
        return {
            "theta_min": self.theta_min,
            "panels": self.panels,
            "nodes_per_panel": self.nodes_per_panel,
            "azimuth_nodes": self.azimuth_nodes,
        }


def make_angular_rule(
    theta_min: float = config.DEFAULT_THETA_MIN,
    panels: int = config.DEFAULT_THETA_PANELS,
    nodes_per_panel: int = config.DEFAULT_NODES_PER_PANEL,
    azimuth_nodes: int = config.DEFAULT_AZIMUTH_NODES,
) -> AngularRule:
    """Composite Gauss-Legendre rule on log-spaced panels of [theta_min, pi/2]."""
    if not 0.0 < theta_min < HALF_PI:
        raise ValueError(f"theta_min must lie in (0, pi/2), got {theta_min}")
    edges = np.geomspace(theta_min, HALF_PI, int(panels) + 1)
    x, w = roots_legendre(int(nodes_per_panel))
    lo, hi = edges[:-1, None], edges[1:, None]
    nodes = (0.5 * (hi - lo) * x[None, :] + 0.5 * (hi + lo)).ravel()
    weights = (0.5 * (hi - lo) * w[None, :]).ravel()
    rule = AngularRule(
        theta_nodes=nodes,
        theta_weights=2.0 * math.pi * np.sin(nodes) * weights,
        theta_min=float(theta_min),
        panels=int(panels),
        nodes_per_panel=int(nodes_per_panel),
        azimuth_nodes=int(azimuth_nodes),
    )
    rule.validate()
    return rule


def _power_kernel(theta: np.ndarray, xs: CrossSection) -> np.ndarray:
    return xs.K * theta ** (-(2.0 + 2.0 * xs.s))


def _half_angle_kernel(theta: np.ndarray, xs: CrossSection) -> np.ndarray:
    return xs.K * (2.0 * np.sin(0.5 * theta)) ** (-(2.0 + 2.0 * xs.s))


ANGULAR_KERNELS: dict[str, AngularKernel] = {
    "power": _power_kernel,
    "half_angle": _half_angle_kernel,
}


def register_angular_kernel(name: str, fn: AngularKernel) -> None:
    """Add an angular kernel b(theta); it must satisfy b(theta) theta^(2+2s) -> K at 0."""
    ANGULAR_KERNELS[name] = fn


@dataclass(frozen=True, eq=False)
class CrossSection:
    """B(v - v*, sigma) = |v - v*|^gamma b(cos theta) with the split Phi_c + Phi_cbar."""

    gamma: float
    s: float
    K: float = 1.0
    r_in: float = 1.0
    r_out: float = 2.0
    kernel: str = "power"
    rule: AngularRule = field(default_factory=make_angular_rule)

    def validate(self) -> None:
        if not math.isfinite(self.gamma) or self.gamma <= -3.0:
            raise ValueError(f"gamma={self.gamma} violates gamma > -3 (kinetic integrability)")
        if not 0.0 < self.s < 1.0:
            raise ValueError(f"s={self.s} violates 0 < s < 1 (angular singularity order)")
        if not math.isfinite(self.K) or self.K <= 0:
            raise ValueError(f"K={self.K} violates K > 0 (singularity strength)")
        degenerate = self.r_in == 0.0 and self.r_out == 0.0
        if not degenerate and not 0.0 < self.r_in < self.r_out:
            raise ValueError(f"cutoff radii need 0 < r_in < r_out, got ({self.r_in}, {self.r_out})")
        if self.kernel not in ANGULAR_KERNELS:
            raise ValueError(f"unknown angular kernel {self.kernel!r}")
        self.rule.validate()

    @property
    def has_compact_part(self) -> bool:
        return self.r_out > 0.0

    def b(self, theta: np.ndarray) -> np.ndarray:
        """b(cos theta) for theta in (0, pi/2]; zero beyond pi/2."""
        t = np.asarray(theta, dtype=float)
        values = ANGULAR_KERNELS[self.kernel](np.where(t > 0, t, 1.0), self)
        return np.where((t > 0) & (t <= HALF_PI + 1e-12), values, 0.0)

    @cached_property
    def sigma_weights(self) -> np.ndarray:
        """Quadrature weight times b at every flattened sigma node."""
        theta, _, weight = self.rule.flat_nodes
        return weight * self.b(theta)

    def with_rule(self, rule: AngularRule) -> CrossSection:
        return CrossSection(
            gamma=self.gamma,
            s=self.s,
            K=self.K,
            r_in=self.r_in,
            r_out=self.r_out,
            kernel=self.kernel,
            rule=rule,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "gamma": self.gamma,
            "s": self.s,
            "K": self.K,
            "r_in": self.r_in,
            "r_out": self.r_out,
            "kernel": self.kernel,
            "rule": self.rule.to_dict(),
        }


def make_cross_section(
    gamma: float,
    s: float,
    K: float = 1.0,
    *,
    r_in: float = 1.0,
    r_out: float = 2.0,
    kernel: str = "power",
    theta_min: float = config.DEFAULT_THETA_MIN,
    theta_panels: int = config.DEFAULT_THETA_PANELS,
    nodes_per_panel: int = config.DEFAULT_NODES_PER_PANEL,
    azimuth_nodes: int = config.DEFAULT_AZIMUTH_NODES,
) -> CrossSection:
    """Build and validate a cross section with its angular rule."""
    rule = make_angular_rule(theta_min, theta_panels, nodes_per_panel, azimuth_nodes)
    xs = CrossSection(
        gamma=float(gamma),
        s=float(s),
        K=float(K),
        r_in=float(r_in),
        r_out=float(r_out),
        kernel=kernel,
        rule=rule,
    )
    xs.validate()
    return xs


def cutoff_bump(r: np.ndarray, r_in: float, r_out: float) -> np.ndarray:
    """
    phi(r): 1 on [0, r_in], exp(1 - 1/(1 - t^2)) with t = (r - r_in)/(r_out - r_in),
    0 past r_out.
    """
    r = np.asarray(r, dtype=float)
    if r_out <= 0.0:
        return np.zeros_like(r)
    t = (r - r_in) / (r_out - r_in)
    inside = (t > 0.0) & (t < 1.0)
    tt = np.where(inside, t, 0.5)
    transition = np.exp(1.0 - 1.0 / (1.0 - tt**2))
    return np.where(t <= 0.0, 1.0, np.where(inside, transition, 0.0))
