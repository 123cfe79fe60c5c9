"""
Run-config loading: INI parsing into RunConfig, CLI overrides and the objects a run builds
from its config (grid, cross section, workspace).
"""

from __future__ import annotations

import configparser
from dataclasses import fields, replace
from pathlib import Path
from typing import Any

from boltzmann_smoothing.collision_ttc.tools.workspace_tools import (
    CollisionWorkspace,
    make_workspace,
)
from boltzmann_smoothing.errors import ConfigError
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import VelocityGrid, make_grid
from boltzmann_smoothing.kernel_ttc.tools.cross_section_tools import (
    CrossSection,
    make_cross_section,
)
from boltzmann_smoothing.runner_ttc.tools.run_config_tools import (
    SECTIONS,
    RunConfig,
    VerifySection,
    ini_keys,
)
from boltzmann_smoothing.utils import log
from boltzmann_smoothing.veritas_ttc.tasks.registry_tasks import PARAMETER_KEYS


def _build_section(name: str, raw: dict[str, str]) -> Any:
    section_type = SECTIONS[name]
    keys = ini_keys(section_type)
    values: dict[str, Any] = {}
    parameters: dict[str, str] = {}
    by_name = {f.name: f for f in fields(section_type)}
    for key, text in raw.items():
        path = f"{name}.{key}"
        if key not in keys or key == "parameters":
            if section_type is VerifySection and key in PARAMETER_KEYS:
                parameters[key] = text.strip()
                continue
            raise ConfigError("unknown key", path)
        spec = by_name[keys[key]]
        try:
            values[spec.name] = spec.metadata["parse"](text)
        except ValueError as exc:
            raise ConfigError(f"cannot parse {text!r}: {exc}", path) from exc
    if section_type is VerifySection:
        values["parameters"] = parameters
    return section_type(**values)


def parse_config_text(text: str, source: str = "<string>") -> RunConfig:
    """Parse INI text; unknown sections and keys are schema violations."""
    # keys stay case-sensitive (uniform_D0, K, N)
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    parser.optionxform = str  # type: ignore[assignment,method-assign]
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        raise ConfigError(f"unreadable config: {exc}", source) from exc
    sections: dict[str, Any] = {}
    for name in parser.sections():
        if name not in SECTIONS:
            raise ConfigError("unknown section", name)
        sections[name] = _build_section(name, dict(parser.items(name)))
    cfg = RunConfig(**sections, source=source)
    cfg.validate()
    build_cross_section(cfg)
    return cfg


def parse_config(path: str | Path) -> RunConfig:
    """
    Read and validate a run config.

    Raises:
        ConfigError: missing file, unknown section/key, unparsable value or violated constraint
    """
    target = Path(path)
    if not target.is_file():
        raise ConfigError(f"config file {target} not found", "config")
    cfg = parse_config_text(target.read_text(encoding="utf-8"), source=str(target))
    log(f"⚙️ Loaded {target} (regime {cfg.regime})")
    return cfg


def with_overrides(
    cfg: RunConfig,
    *,
    seed: int | None = None,
    deterministic: bool | None = None,
    output_dir: str | None = None,
    inequality: str | None = None,
) -> RunConfig:
    """Apply command-line flags; unset flags keep the config's values."""
    run = cfg.run
    if seed is not None:
        run = replace(run, seed=int(seed))
    if deterministic is not None:
        run = replace(run, deterministic=bool(deterministic))
    if output_dir is not None:
        run = replace(run, output_dir=str(output_dir))
    verify = cfg.verify
    if inequality is not None:
        verify = replace(verify, inequality=inequality)
    out = replace(cfg, run=run, verify=verify)
    out.validate()
    return out


def build_grid(cfg: RunConfig) -> VelocityGrid:
    try:
        return make_grid(cfg.grid.n_points, cfg.grid.half_width)
    except ValueError as exc:
        raise ConfigError(str(exc), "grid") from exc


def build_cross_section(cfg: RunConfig) -> CrossSection:
    """The kernel contract re-validated from the config values."""
    c = cfg.cross_section
    try:
        return make_cross_section(
            c.gamma,
            c.s,
            c.K,
            r_in=c.r_in,
            r_out=c.r_out,
            kernel=c.kernel,
            theta_min=c.theta_min,
            theta_panels=c.theta_panels,
            nodes_per_panel=c.nodes_per_panel,
            azimuth_nodes=c.azimuth_nodes,
        )
    except ValueError as exc:
        raise ConfigError(str(exc), "cross_section") from exc


def build_workspace(cfg: RunConfig) -> CollisionWorkspace:
    try:
        return make_workspace(
            build_grid(cfg),
            build_cross_section(cfg),
            retained_radius=cfg.cross_section.retained_radius,
            interpolation=cfg.cross_section.interpolation,
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc), "cross_section") from exc
