"""Trajectory, checkpoint and report contracts for time integration."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from boltzmann_smoothing.functionals_ttc.tools.request_tools import Moments
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution, check_same_grid

SCHEMES = ("euler", "rk2", "rk4")
SCHEME_ORDERS = {"euler": 1, "rk2": 2, "rk4": 4}


@dataclass(frozen=True)
class CheckpointSpec:
    """Record every ``every`` steps, or at the explicit ``times`` (t = 0 and t_end always)."""

    every: int | None = 1
    times: tuple[float, ...] = ()

    def validate(self) -> None:
        if self.times:
            if any(t < 0 or not math.isfinite(t) for t in self.times):
                raise ValueError("checkpoint times must be finite and >= 0")
            if any(b <= a for a, b in zip(self.times, self.times[1:])):
                raise ValueError("checkpoint times must be strictly increasing")
        elif self.every is None or self.every < 1:
            raise ValueError("checkpoint spec needs every >= 1 or explicit times")

    def to_dict(self) -> dict[str, Any]:
        return {"every": self.every, "times": list(self.times)}


@dataclass(frozen=True)
class StepResult:
    """One time step: the new state and the (negative) mass removed by clipping."""

    state: Distribution
    clipped_mass: float = 0.0


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Checkpointed solution of f_t = Q(f, f).

    Per-checkpoint diagnostics run parallel to ``times``; ``dissipation`` is empty when it
    was not requested.
    """

    times: tuple[float, ...]
    states: tuple[Distribution, ...]
    provenance: dict[str, Any] = field(default_factory=dict)
    moments: tuple[Moments, ...] = ()
    dissipation: tuple[float, ...] = ()
    clipped_mass: tuple[float, ...] = ()
    moment_series: tuple[dict[str, float], ...] = ()

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        if len(self.times) != len(self.states):
            raise ValueError(f"{len(self.times)} times for {len(self.states)} states")
        if not self.times:
            raise ValueError("trajectory needs at least one checkpoint")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ValueError("trajectory times must be strictly increasing")
        check_same_grid(*(state.grid for state in self.states))
        for name in ("moments", "dissipation", "clipped_mass", "moment_series"):
            series = getattr(self, name)
            if series and len(series) != len(self.times):
                raise ValueError(
                    f"{name} has {len(series)} entries for {len(self.times)} checkpoints"
                )

    @property
    def grid(self):  # type: ignore[no-untyped-def]
        return self.states[0].grid

    @property
    def project(self) -> bool:
        return bool(self.provenance.get("project", False))

    def thinned(self, stride: int) -> Trajectory:
        """Every ``stride``-th checkpoint, always keeping the last one."""
        if stride < 1:
            raise ValueError("stride must be >= 1")
        keep = list(range(0, len(self.times), stride))
        if keep[-1] != len(self.times) - 1:
            keep.append(len(self.times) - 1)

        def pick(series: Sequence[Any]) -> tuple[Any, ...]:
            return tuple(series[i] for i in keep) if series else ()

        return Trajectory(
            times=pick(self.times),
            states=pick(self.states),
            provenance=dict(self.provenance),
            moments=pick(self.moments),
            dissipation=pick(self.dissipation),
            clipped_mass=pick(self.clipped_mass),
            moment_series=pick(self.moment_series),
        )

    def conservation_drift(self) -> dict[str, float]:
        """Largest relative drift of mass, momentum and energy against t = 0."""
        if not self.moments:
            return {}
        first = self.moments[0]
        scale = max(abs(first.mass), 1e-300)
        energy_scale = max(abs(first.energy), 1e-300)
        mass = max(abs(m.mass - first.mass) for m in self.moments) / scale
        momentum = max(
            float(np.max(np.abs(np.subtract(m.momentum, first.momentum)))) for m in self.moments
        ) / scale
        energy = max(abs(m.energy - first.energy) for m in self.moments) / energy_scale
        return {"mass": mass, "momentum": momentum, "energy": energy}

    def entropy_increase(self) -> float:
        """Largest increase of the entropy between successive checkpoints (0 when monotone)."""
        values = [m.entropy for m in self.moments]
        worst = 0.0
        for a, b in zip(values, values[1:]):
            if math.isfinite(a) and math.isfinite(b):
                worst = max(worst, b - a)
        return worst

    def rows(self) -> list[dict[str, Any]]:
        """One flat record per checkpoint for CSV output."""
        out: list[dict[str, Any]] = []
        for i, t in enumerate(self.times):
            row: dict[str, Any] = {"t": t}
            if self.moments:
                m = self.moments[i]
                row.update(
                    {
                        "mass": m.mass,
                        "momentum_x": m.momentum[0],
                        "momentum_y": m.momentum[1],
                        "momentum_z": m.momentum[2],
                        "energy": m.energy,
                        "entropy": m.entropy,
                    }
                )
            if self.dissipation:
                row["dissipation"] = self.dissipation[i]
            if self.clipped_mass:
                row["clipped_mass"] = self.clipped_mass[i]
            if self.moment_series:
                row.update(self.moment_series[i])
            out.append(row)
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "times": list(self.times),
            "provenance": dict(self.provenance),
            "conservation_drift": self.conservation_drift(),
            "entropy_increase": self.entropy_increase(),
            "rows": self.rows(),
        }


@dataclass(frozen=True)
class LedgerReport:
    """
    Terms of the mollified energy identity at each checkpoint:

        1/2 ||M f(t)||^2 - 1/2 ||M f(0)||^2
            = int N ||(log<D>)^{1/2} M f||^2 + int (Q(f, Mf), Mf) + int (M Q(f, f) - Q(f, Mf), Mf)

    Integrals are cumulative composite trapezoids over the checkpoints; ``projection`` carries
    the contribution of the conservative correction when the run used it.
    """

    times: tuple[float, ...]
    lambdas: tuple[float, ...]
    energy: tuple[float, ...]
    log_integral: tuple[float, ...]
    pairing_integral: tuple[float, ...]
    commutator_integral: tuple[float, ...]
    projection_integral: tuple[float, ...]
    coercive_integral: tuple[float, ...]
    l2_integral: tuple[float, ...]
    residual: tuple[float, ...]
    relative_residual: tuple[float, ...]
    estimate_fit: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        for name in (
            "energy",
            "log_integral",
            "pairing_integral",
            "commutator_integral",
            "projection_integral",
            "coercive_integral",
            "residual",
        ):
            values = getattr(self, name)
            if len(values) != len(self.times):
                raise ValueError(f"ledger column {name} has the wrong length")
            if not all(math.isfinite(v) for v in values):
                raise ValueError(f"ledger column {name} has non-finite entries")

    @property
    def max_residual(self) -> float:
        return max(self.residual, default=0.0)

    @property
    def max_relative_residual(self) -> float:
        return max(self.relative_residual, default=0.0)

    def rows(self) -> list[dict[str, Any]]:
        return [
            {
                "t": self.times[i],
                "lambda": self.lambdas[i],
                "energy": self.energy[i],
                "log_integral": self.log_integral[i],
                "pairing_integral": self.pairing_integral[i],
                "commutator_integral": self.commutator_integral[i],
                "projection_integral": self.projection_integral[i],
                "coercive_integral": self.coercive_integral[i],
                "l2_integral": self.l2_integral[i],
                "residual": self.residual[i],
                "relative_residual": self.relative_residual[i],
            }
            for i in range(len(self.times))
        ]

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_residual": self.max_residual,
            "max_relative_residual": self.max_relative_residual,
            "estimate_fit": dict(self.estimate_fit),
            "rows": self.rows(),
        }


@dataclass(frozen=True)
class TrackerReport:
    """Regularity time series: mollified norms per delta, Sobolev norms and tail exponents."""

    rows: tuple[dict[str, Any], ...]
    deltas: tuple[float, ...]
    orders: tuple[tuple[float, float], ...]

    @property
    def tail_exponents(self) -> tuple[float, ...]:
        return tuple(row["tail_exponent"] for row in self.rows)

    @property
    def tail_gain(self) -> float:
        """Tail exponent at the last checkpoint minus the one at the first."""
        values = self.tail_exponents
        return values[-1] - values[0] if len(values) >= 2 else 0.0

    def flat_rows(self) -> list[dict[str, Any]]:
        out = []
        for row in self.rows:
            flat = {k: v for k, v in row.items() if not isinstance(v, dict)}
            for key in ("mollified", "sobolev"):
                for name, value in row.get(key, {}).items():
                    flat[f"{key}_{name}"] = value
            out.append(flat)
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "deltas": list(self.deltas),
            "orders": [list(o) for o in self.orders],
            "tail_gain": self.tail_gain,
            "rows": self.flat_rows(),
        }
