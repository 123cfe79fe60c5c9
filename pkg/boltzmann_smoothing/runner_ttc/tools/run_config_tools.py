"""
Run-config contracts: one frozen dataclass per INI section plus the RunConfig that holds them.

Each field carries its INI parser in ``metadata["parse"]``; the INI key is the field name
unless ``metadata["key"]`` says otherwise.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field, fields
from typing import Any

from boltzmann_smoothing import config
from boltzmann_smoothing.collision_ttc.tools.workspace_tools import INTERPOLATIONS
from boltzmann_smoothing.errors import ConfigError
from boltzmann_smoothing.evolution_ttc.tools.trajectory_tools import SCHEMES
from boltzmann_smoothing.kernel_ttc.tools.cross_section_tools import ANGULAR_KERNELS
from boltzmann_smoothing.veritas_ttc.tools.oracle_tools import regime_tags

INITIAL_KINDS = (
    "maxwellian",
    "ball",
    "smoothed_ball",
    "bimodal",
    "bkw",
    "perturbed_maxwellian",
)
TRUE_WORDS = frozenset({"1", "true", "yes", "on"})
FALSE_WORDS = frozenset({"0", "false", "no", "off"})


def parse_int(raw: str) -> int:
    value = float(raw)
    if not value.is_integer():
        raise ValueError(f"{raw!r} is not an integer")
    return int(value)


def parse_float(raw: str) -> float:
    return float(raw)


def parse_bool(raw: str) -> bool:
    word = raw.strip().lower()
    if word in TRUE_WORDS:
        return True
    if word in FALSE_WORDS:
        return False
    raise ValueError(f"{raw!r} is not a boolean")


def parse_str(raw: str) -> str:
    return raw.strip()


def parse_optional_float(raw: str) -> float | None:
    return None if raw.strip().lower() in {"", "none"} else float(raw)


def parse_floats(raw: str) -> tuple[float, ...]:
    """Comma or whitespace separated numbers."""
    return tuple(float(item) for item in raw.replace(",", " ").split())


def parse_orders(raw: str) -> tuple[tuple[float, float], ...]:
    """``k:ell`` pairs, comma separated (``1:0, 2:1``)."""
    orders = []
    for item in raw.replace(";", ",").split(","):
        if not item.strip():
            continue
        k, sep, ell = item.partition(":")
        if not sep:
            raise ValueError(f"order {item.strip()!r} is not of the form k:ell")
        orders.append((float(k), float(ell)))
    return tuple(orders)


def _option(default: Any, parse: Callable[[str], Any], key: str | None = None) -> Any:
    metadata = {"parse": parse, "key": key}
    if isinstance(default, (list, dict)):
        return field(default_factory=lambda: type(default)(default), metadata=metadata)
    return field(default=default, metadata=metadata)


def ini_keys(section_type: type) -> dict[str, str]:
    """INI key -> field name."""
    return {f.metadata.get("key") or f.name: f.name for f in fields(section_type)}


def _require(condition: bool, path: str, value: Any, rule: str) -> None:
    if not condition:
        raise ConfigError(f"{path}={value!r} violates {rule}", path)


@dataclass(frozen=True)
class RunSection:
    schema: int = _option(config.CONFIG_SCHEMA_VERSION, parse_int)
    seed: int = _option(0, parse_int)
    deterministic: bool = _option(True, parse_bool)
    output_dir: str = _option("", parse_str)
    label: str = _option("", parse_str)

    def validate(self) -> None:
        _require(
            self.schema == config.CONFIG_SCHEMA_VERSION,
            "run.schema",
            self.schema,
            f"schema == {config.CONFIG_SCHEMA_VERSION}",
        )
        _require(self.seed >= 0, "run.seed", self.seed, "seed >= 0")


@dataclass(frozen=True)
class GridSection:
    n_points: int = _option(16, parse_int)
    half_width: float = _option(8.0, parse_float)

    def validate(self) -> None:
        _require(self.n_points >= 2, "grid.n_points", self.n_points, "n_points >= 2")
        _require(
            self.n_points % 2 == 0, "grid.n_points", self.n_points, "n_points even (FFT layout)"
        )
        _require(
            math.isfinite(self.half_width) and self.half_width > 0,
            "grid.half_width",
            self.half_width,
            "half_width > 0",
        )


@dataclass(frozen=True)
class CrossSectionSection:
    gamma: float = _option(0.0, parse_float)
    s: float = _option(0.25, parse_float)
    K: float = _option(1.0, parse_float)
    r_in: float = _option(1.0, parse_float)
    r_out: float = _option(2.0, parse_float)
    theta_min: float = _option(config.DEFAULT_THETA_MIN, parse_float)
    theta_panels: int = _option(config.DEFAULT_THETA_PANELS, parse_int)
    nodes_per_panel: int = _option(config.DEFAULT_NODES_PER_PANEL, parse_int)
    azimuth_nodes: int = _option(config.DEFAULT_AZIMUTH_NODES, parse_int)
    kernel: str = _option("power", parse_str)
    retained_radius: float | None = _option(None, parse_optional_float)
    interpolation: str = _option("spectral", parse_str)
    conservative: bool = _option(False, parse_bool)

    def validate(self) -> None:
        p = "cross_section"
        _require(
            math.isfinite(self.gamma) and self.gamma > -3.0,
            f"{p}.gamma",
            self.gamma,
            "gamma > -3 (kinetic factor integrability)",
        )
        _require(0.0 < self.s < 1.0, f"{p}.s", self.s, "0 < s < 1 (angular singularity order)")
        _require(self.K > 0.0, f"{p}.K", self.K, "K > 0 (singularity strength)")
        if not (self.r_in == 0.0 and self.r_out == 0.0):
            _require(
                0.0 < self.r_in < self.r_out, f"{p}.r_out", self.r_out, "0 < r_in < r_out"
            )
        _require(
            0.0 < self.theta_min < 0.5 * math.pi,
            f"{p}.theta_min",
            self.theta_min,
            "0 < theta_min < pi/2",
        )
        for name in ("theta_panels", "nodes_per_panel", "azimuth_nodes"):
            value = getattr(self, name)
            _require(value >= 1, f"{p}.{name}", value, f"{name} >= 1")
        _require(
            self.kernel in ANGULAR_KERNELS,
            f"{p}.kernel",
            self.kernel,
            f"kernel in {sorted(ANGULAR_KERNELS)}",
        )
        _require(
            self.interpolation in INTERPOLATIONS,
            f"{p}.interpolation",
            self.interpolation,
            f"interpolation in {list(INTERPOLATIONS)}",
        )
        if self.retained_radius is not None:
            _require(
                self.retained_radius > 0,
                f"{p}.retained_radius",
                self.retained_radius,
                "retained_radius > 0",
            )


@dataclass(frozen=True)
class InitialSection:
    kind: str = _option("maxwellian", parse_str)
    density: float = _option(1.0, parse_float)
    temperature: float = _option(1.0, parse_float)
    drift: tuple[float, ...] = _option((0.0, 0.0, 0.0), parse_floats)
    radius: float = _option(1.5, parse_float)
    smoothing: float = _option(0.5, parse_float)
    amplitude: float = _option(0.3, parse_float)
    bkw_shape: float = _option(0.6, parse_float)
    bkw_time: float = _option(0.0, parse_float)

    def validate(self) -> None:
        p = "initial"
        _require(self.kind in INITIAL_KINDS, f"{p}.kind", self.kind, f"kind in {INITIAL_KINDS}")
        _require(self.density > 0, f"{p}.density", self.density, "density > 0")
        _require(self.temperature > 0, f"{p}.temperature", self.temperature, "temperature > 0")
        _require(len(self.drift) == 3, f"{p}.drift", self.drift, "three drift components")
        _require(self.radius > 0, f"{p}.radius", self.radius, "radius > 0")
        _require(self.smoothing >= 0, f"{p}.smoothing", self.smoothing, "smoothing >= 0")
        _require(
            0.0 <= self.amplitude < 1.0,
            f"{p}.amplitude",
            self.amplitude,
            "0 <= amplitude < 1 (positivity)",
        )
        _require(
            0.6 <= self.bkw_shape <= 1.0,
            f"{p}.bkw_shape",
            self.bkw_shape,
            "0.6 <= bkw_shape <= 1 (BKW positivity)",
        )
        _require(self.bkw_time >= 0, f"{p}.bkw_time", self.bkw_time, "bkw_time >= 0")


@dataclass(frozen=True)
class TimeSection:
    dt: float = _option(0.01, parse_float)
    t_end: float = _option(0.1, parse_float)
    scheme: str = _option("rk2", parse_str)
    checkpoint_every: int = _option(1, parse_int)
    checkpoint_times: tuple[float, ...] = _option((), parse_floats)
    clip: bool = _option(False, parse_bool)

    def validate(self) -> None:
        _require(math.isfinite(self.dt) and self.dt > 0, "time.dt", self.dt, "dt > 0")
        _require(
            math.isfinite(self.t_end) and self.t_end > 0, "time.t_end", self.t_end, "t_end > 0"
        )
        _require(self.scheme in SCHEMES, "time.scheme", self.scheme, f"scheme in {SCHEMES}")
        _require(
            self.checkpoint_every >= 1,
            "time.checkpoint_every",
            self.checkpoint_every,
            "checkpoint_every >= 1",
        )
        times = self.checkpoint_times
        _require(
            all(0 <= t <= self.t_end for t in times)
            and all(b > a for a, b in zip(times, times[1:])),
            "time.checkpoint_times",
            times,
            "increasing times inside [0, t_end]",
        )


@dataclass(frozen=True)
class MollifierSection:
    N: float = _option(1.0, parse_float)
    a: float = _option(-2.0, parse_float)
    delta_set: tuple[float, ...] = _option(config.DEFAULT_TRACKER_DELTAS, parse_floats)
    n0: float | None = _option(None, parse_optional_float)
    lam: float = _option(0.0, parse_float, key="lambda")

    def validate(self) -> None:
        _require(
            math.isfinite(self.N) and self.N >= 0, "mollifier.N", self.N, "N >= 0 (growth rate)"
        )
        _require(math.isfinite(self.a), "mollifier.a", self.a, "a finite")
        _require(
            bool(self.delta_set) and all(0.0 <= d <= 1.0 for d in self.delta_set),
            "mollifier.delta_set",
            self.delta_set,
            "0 <= delta <= 1",
        )
        if self.n0 is not None:
            _require(self.n0 >= 0, "mollifier.n0", self.n0, "n0 >= 0")
        _require(math.isfinite(self.lam), "mollifier.lambda", self.lam, "lambda finite")


@dataclass(frozen=True)
class DiagnosticsSection:
    orders: tuple[tuple[float, float], ...] = _option(((1.0, 0.0),), parse_orders)
    moment_orders: tuple[float, ...] = _option((2.0, 4.0), parse_floats)
    lp_orders: tuple[float, ...] = _option((1.0, 2.0), parse_floats)
    uniform_D0: float = _option(1.0, parse_float)
    uniform_E0: float = _option(4.0, parse_float)
    dissipation: bool = _option(True, parse_bool)
    tail_gain_threshold: float = _option(0.5, parse_float)
    ledger_tolerance: float = _option(0.01, parse_float)

    def validate(self) -> None:
        p = "diagnostics"
        _require(
            all(q >= 1 for q in self.lp_orders), f"{p}.lp_orders", self.lp_orders, "p >= 1"
        )
        _require(
            all(m >= 0 for m in self.moment_orders),
            f"{p}.moment_orders",
            self.moment_orders,
            "moment order >= 0",
        )
        _require(self.uniform_D0 > 0, f"{p}.uniform_D0", self.uniform_D0, "D0 > 0")
        _require(self.uniform_E0 > 0, f"{p}.uniform_E0", self.uniform_E0, "E0 > 0")
        _require(
            self.ledger_tolerance > 0,
            f"{p}.ledger_tolerance",
            self.ledger_tolerance,
            "ledger_tolerance > 0",
        )


@dataclass(frozen=True)
class VerifySection:
    """The fixed keys; any other key is handed to the check as a parameter."""

    inequality: str = _option("", parse_str)
    family_size: int = _option(8, parse_int)
    sample_count: int = _option(256, parse_int)
    parameters: dict[str, str] = field(default_factory=dict)

    def validate(self) -> None:
        _require(self.family_size >= 1, "verify.family_size", self.family_size, "family_size >= 1")
        _require(
            self.sample_count >= 1, "verify.sample_count", self.sample_count, "sample_count >= 1"
        )


SECTIONS: dict[str, type] = {
    "run": RunSection,
    "grid": GridSection,
    "cross_section": CrossSectionSection,
    "initial": InitialSection,
    "time": TimeSection,
    "mollifier": MollifierSection,
    "diagnostics": DiagnosticsSection,
    "verify": VerifySection,
}


def _section_dict(section: Any) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for f in fields(section):
        value = getattr(section, f.name)
        if isinstance(value, tuple):
            value = [list(v) if isinstance(v, tuple) else v for v in value]
        out[f.metadata.get("key") or f.name] = value
    return out


@dataclass(frozen=True)
class RunConfig:
    """A parsed, validated run config."""

    run: RunSection = field(default_factory=RunSection)
    grid: GridSection = field(default_factory=GridSection)
    cross_section: CrossSectionSection = field(default_factory=CrossSectionSection)
    initial: InitialSection = field(default_factory=InitialSection)
    time: TimeSection = field(default_factory=TimeSection)
    mollifier: MollifierSection = field(default_factory=MollifierSection)
    diagnostics: DiagnosticsSection = field(default_factory=DiagnosticsSection)
    verify: VerifySection = field(default_factory=VerifySection)
    source: str = field(default="", compare=False)

    def validate(self) -> None:
        for name in SECTIONS:
            getattr(self, name).validate()

    @property
    def regime_tags(self) -> tuple[str, ...]:
        return regime_tags(self.cross_section.gamma, self.cross_section.s)

    @property
    def regime(self) -> str:
        return self.regime_tags[0]

    def to_dict(self) -> dict[str, Any]:
        """Canonical content; the source path is left out so the hash follows the values."""
        return {name: _section_dict(getattr(self, name)) for name in SECTIONS}

