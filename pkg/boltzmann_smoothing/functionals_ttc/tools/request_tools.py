"""Typed requests and results for the functionals tasks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

NORM_FAMILIES = ("Lp_weighted", "LlogL", "Sobolev_weighted", "entropy")


@dataclass(frozen=True)
class NormRequest:
    """
    Which norm to evaluate.

    Lp_weighted uses the weight (1 + |v|)^ell; Sobolev_weighted is ||<D>^k (<v>^ell f)||_{L^2}.
    """

    family: str = "Lp_weighted"
    p: float = 2.0
    k: float = 0.0
    ell: float = 0.0

    def validate(self) -> None:
        if self.family not in NORM_FAMILIES:
            known = ", ".join(NORM_FAMILIES)
            raise ValueError(f"unknown norm family {self.family!r}; known: {known}")
        if self.family == "Lp_weighted" and not (self.p >= 1.0):
            raise ValueError(f"Lp_weighted needs p >= 1, got {self.p}")
        if not math.isfinite(self.k):
            raise ValueError(f"Sobolev order k must be finite, got {self.k}")
        if not math.isfinite(self.ell):
            raise ValueError(f"weight exponent ell must be finite, got {self.ell}")

    def label(self) -> str:
        if self.family == "Lp_weighted":
            return f"L^{self.p:g}_{self.ell:g}"
        if self.family == "Sobolev_weighted":
            return f"H^{self.k:g}_{self.ell:g}"
        return self.family

    def to_dict(self) -> dict[str, Any]:
        return {"family": self.family, "p": self.p, "k": self.k, "ell": self.ell}


@dataclass(frozen=True)
class Moments:
    """Mass, momentum, energy (1/2 int |v|^2 f) and entropy int f log f."""

    mass: float
    momentum: tuple[float, float, float]
    energy: float
    entropy: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "mass": self.mass,
            "momentum": list(self.momentum),
            "energy": self.energy,
            "entropy": self.entropy,
        }


@dataclass(frozen=True)
class UniformClassParams:
    """
    The class U(D0, E0): mass >= D0 and L^1_2 + L log L <= E0.

    R, M and r0 are the tight thresholds derived from (D0, E0).
    """

    D0: float
    E0: float
    R: float = field(init=False)
    M: float = field(init=False)
    r0: float = field(init=False)

    def __post_init__(self) -> None:
        self.validate()
        ratio = self.E0 / self.D0
        object.__setattr__(self, "R", 2.0 * math.sqrt(2.0 * ratio))
        object.__setattr__(self, "M", math.expm1(8.0 * ratio))
        object.__setattr__(
            self, "r0", (3.0 * self.D0 / (16.0 * math.pi * math.exp(8.0 * ratio))) ** (1.0 / 3.0)
        )

    def validate(self) -> None:
        if not (math.isfinite(self.D0) and self.D0 > 0):
            raise ValueError(f"D0 must be a positive real, got {self.D0}")
        if not (math.isfinite(self.E0) and self.E0 > 0):
            raise ValueError(f"E0 must be a positive real, got {self.E0}")

    def to_dict(self) -> dict[str, Any]:
        return {"D0": self.D0, "E0": self.E0, "R": self.R, "M": self.M, "r0": self.r0}


@dataclass(frozen=True)
class ClassWitness:
    """Evidence behind a uniform-class membership verdict."""

    mass: float
    l1_2: float
    llogl: float
    truncated_min: float
    centers_checked: int
    mass_ok: bool
    bound_ok: bool
    truncation_ok: bool
    worst_center: np.ndarray | None = field(default=None, repr=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "mass": self.mass,
            "l1_2": self.l1_2,
            "llogl": self.llogl,
            "truncated_min": self.truncated_min,
            "centers_checked": self.centers_checked,
            "mass_ok": self.mass_ok,
            "bound_ok": self.bound_ok,
            "truncation_ok": self.truncation_ok,
            "worst_center": None if self.worst_center is None else self.worst_center.tolist(),
        }
