"""
Subcommand bodies. Each takes a validated RunConfig and the run's RunArtifacts, writes its
artifacts and returns the JSON summary printed on stdout; a ``verdict`` of "fail" in the
summary becomes exit code 4 in the CLI.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Any

from boltzmann_smoothing import config
from boltzmann_smoothing.collision_ttc.tasks.operator_tasks import (
    apply_q_report,
    collision_diagnostics,
)
from boltzmann_smoothing.collision_ttc.tools.workspace_tools import (
    CollisionWorkspace,
    make_workspace,
)
from boltzmann_smoothing.errors import ConfigError
from boltzmann_smoothing.evolution_ttc.tasks.ledger_tasks import energy_ledger
from boltzmann_smoothing.evolution_ttc.tasks.stepping_tasks import (
    entropy_dissipation_integral,
    simulate,
)
from boltzmann_smoothing.evolution_ttc.tasks.tracker_tasks import (
    regularity_tracker,
    tail_exponent,
)
from boltzmann_smoothing.evolution_ttc.tools.trajectory_tools import CheckpointSpec, Trajectory
from boltzmann_smoothing.functionals_ttc.tasks.norm_tasks import (
    embedding_ratio,
    llogl_norm,
    moment_series,
    moments,
    weighted_lp_norm,
    weighted_sobolev_norm,
)
from boltzmann_smoothing.functionals_ttc.tasks.uniform_class_tasks import uniform_class_check
from boltzmann_smoothing.functionals_ttc.tools.request_tools import UniformClassParams
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution
from boltzmann_smoothing.mollifier_ttc.tasks.symbol_tasks import apply_mollifier, default_n0
from boltzmann_smoothing.mollifier_ttc.tools.symbol_tools import (
    MollifierSchedule,
    MollifierSymbol,
    make_schedule,
)
from boltzmann_smoothing.runner_ttc.tasks.config_tasks import (
    build_cross_section,
    build_workspace,
)
from boltzmann_smoothing.runner_ttc.tasks.initial_tasks import initial_datum
from boltzmann_smoothing.runner_ttc.tools.run_config_tools import RunConfig
from boltzmann_smoothing.storage_ttc.tasks.field_tasks import read_field
from boltzmann_smoothing.storage_ttc.tasks.manifest_tasks import RunArtifacts
from boltzmann_smoothing.utils import log
from boltzmann_smoothing.veritas_ttc.tasks.coercivity_tasks import check_entropy_coercivity
from boltzmann_smoothing.veritas_ttc.tasks.registry_tasks import resolve_inequality, run_check
from boltzmann_smoothing.veritas_ttc.tools.fit_tools import FAIL, PASS
from boltzmann_smoothing.veritas_ttc.tools.request_tools import VerifyRequest


def _table(rows: list[dict[str, Any]]) -> tuple[list[str], list[list[Any]]]:
    header: list[str] = []
    for row in rows:
        header.extend(key for key in row if key not in header)
    return header, [[row.get(key) for key in header] for row in rows]


def _load_field(path: str | Path | None, flag: str) -> Distribution:
    if not path:
        raise ConfigError(f"{flag} FILE is required", flag)
    try:
        return read_field(path)
    except FileNotFoundError as exc:
        raise ConfigError(f"field file {path} not found", flag) from exc
    except ValueError as exc:
        raise ConfigError(f"field file {path}: {exc}", flag) from exc


def _field_workspace(cfg: RunConfig, f: Distribution) -> CollisionWorkspace:
    """Workspace on the field's own grid with the configured cross section."""
    return make_workspace(
        f.grid,
        build_cross_section(cfg),
        retained_radius=cfg.cross_section.retained_radius,
        interpolation=cfg.cross_section.interpolation,
    )


def schedule_for(
    cfg: RunConfig, ws: CollisionWorkspace, *, delta: float = 0.0
) -> MollifierSchedule:
    """lambda(t) = N t + a over [0, t_end]."""
    m = cfg.mollifier
    try:
        return make_schedule(
            m.N,
            m.a,
            delta=delta,
            n0=m.n0,
            gamma=ws.xs.gamma,
            s=ws.xs.s,
            t_start=0.0,
            t_end=cfg.time.t_end,
        )
    except ValueError as exc:
        raise ConfigError(str(exc), "mollifier") from exc


def _symbol(cfg: RunConfig, ws: CollisionWorkspace) -> MollifierSymbol:
    m = cfg.mollifier
    n0 = m.n0 if m.n0 is not None else default_n0(m.lam, ws.xs.gamma)
    return MollifierSymbol(lam=m.lam, delta=0.0, n0=max(n0, 0.0))


def _integrate(
    cfg: RunConfig, f0: Distribution, ws: CollisionWorkspace, out: RunArtifacts
) -> Trajectory:
    t = cfg.time
    spec = CheckpointSpec(every=t.checkpoint_every, times=t.checkpoint_times)
    return simulate(
        f0,
        t.t_end,
        t.dt,
        t.scheme,
        spec,
        ws,
        project=cfg.cross_section.conservative,
        clip=t.clip,
        dissipation=cfg.diagnostics.dissipation,
        moment_orders=cfg.diagnostics.moment_orders,
        provenance={"seed": cfg.run.seed, "config_hash": out.config_hash},
    )


def run_simulate(cfg: RunConfig, out: RunArtifacts) -> dict[str, Any]:
    """Checkpoint fields, the conservation CSV and a trajectory summary."""
    ws = build_workspace(cfg)
    f0 = initial_datum(ws.grid, cfg.initial, ws.xs)
    traj = _integrate(cfg, f0, ws, out)
    for i, f in enumerate(traj.states):
        out.field(f"checkpoint_{i:04d}.field", f)
    header, rows = _table(traj.rows())
    out.csv("conservation.csv", header, rows)
    integral = entropy_dissipation_integral(traj) if traj.dissipation else None
    summary = {
        "subcommand": "simulate",
        "checkpoints": len(traj.times),
        "times": list(traj.times),
        "conservation_drift": traj.conservation_drift(),
        "entropy_increase": traj.entropy_increase(),
        "dissipation_integral": integral,
        "clipped_mass": math.fsum(traj.clipped_mass),
        "provenance": traj.provenance,
    }
    out.json("summary.json", summary)
    return summary


def run_collision_apply(
    cfg: RunConfig, out: RunArtifacts, *, f_path: str | None, g_path: str | None
) -> dict[str, Any]:
    """Q(g, f) for two field files, with conservation residuals and gain/loss norms."""
    f = _load_field(f_path, "--f")
    g = _load_field(g_path, "--g")
    if not f.grid.same_as(g.grid):
        raise ConfigError("--f and --g fields live on different grids", "--g")
    ws = _field_workspace(cfg, f)
    result = apply_q_report(g, f, ws, project=cfg.cross_section.conservative)
    out.field("q.field", result.total)
    diagnostics = collision_diagnostics(g, f, ws)
    summary = {
        "subcommand": "collision-apply",
        "inputs": {"f": str(f_path), "g": str(g_path)},
        "result": result.to_dict(),
        "diagnostics": diagnostics,
        "norms": {
            "total": weighted_lp_norm(result.total),
            "compact": weighted_lp_norm(result.compact),
            "tail": weighted_lp_norm(result.tail),
        },
    }
    out.json("collision.json", summary)
    return summary


def measure_field(f: Distribution, cfg: RunConfig, ws: CollisionWorkspace) -> dict[str, Any]:
    """Every configured functional of one field."""
    d = cfg.diagnostics
    low = float(f.values.min())
    nonnegative = low >= -config.NEGATIVITY_TOLERANCE
    record: dict[str, Any] = {
        "label": f.label,
        "grid": f.grid.to_dict(),
        "min": low,
        "moments": moments(f).to_dict(),
        "lp": {f"L^{p:g}": weighted_lp_norm(f, p) for p in d.lp_orders},
        "moment_series": moment_series(f, d.moment_orders),
        "sobolev": {f"H^{k:g}_{ell:g}": weighted_sobolev_norm(f, k, ell) for k, ell in d.orders},
        "llogl": llogl_norm(f),
        "embedding": embedding_ratio(f),
        "tail_exponent": tail_exponent(f),
    }
    symbol = _symbol(cfg, ws)
    record["mollified"] = {
        "symbol": symbol.to_dict(),
        "norms": {
            f"delta={delta:g}": weighted_lp_norm(apply_mollifier(f, symbol.with_delta(delta)))
            for delta in cfg.mollifier.delta_set
        },
    }
    if nonnegative:
        params = UniformClassParams(D0=d.uniform_D0, E0=d.uniform_E0)
        inside, witness = uniform_class_check(f, params)
        record["uniform_class"] = {
            "params": params.to_dict(),
            "inside": inside,
            "witness": witness.to_dict(),
        }
    else:
        log(f"⚠️ field has min {low:.3e}; entropy and class membership skipped", "WARN")
    return record


def run_measure(cfg: RunConfig, out: RunArtifacts, *, field_path: str | None) -> dict[str, Any]:
    f = _load_field(field_path, "--field")
    ws = _field_workspace(cfg, f)
    summary = {"subcommand": "measure", "field": str(field_path), **measure_field(f, cfg, ws)}
    out.json("measure.json", summary)
    return summary


def run_verify(cfg: RunConfig, out: RunArtifacts) -> dict[str, Any]:
    """Run the configured check; writes the FitReport JSON plus case and trail CSVs."""
    inequality = cfg.verify.inequality
    if not inequality:
        raise ConfigError("verify needs an inequality id (--inequality)", "verify.inequality")
    try:
        inequality = resolve_inequality(inequality)
    except ValueError as exc:
        raise ConfigError(str(exc), "verify.inequality") from exc
    request = VerifyRequest(
        inequality=inequality,
        ws=build_workspace(cfg),
        seed=cfg.run.seed,
        family_size=cfg.verify.family_size,
        sample_count=cfg.verify.sample_count,
        parameters=dict(cfg.verify.parameters),
    )
    report = run_check(request)
    out.json("fit_report.json", report.to_dict())
    out.csv(
        "cases.csv",
        ["label", "lhs", "rhs", "ratio"],
        [[case.label, case.lhs, case.rhs, case.ratio] for case in report.cases],
    )
    out.csv(
        "trail.csv",
        ["refinement", "level", "constant", "cases"],
        [[t.refinement, t.level, t.constant, t.cases] for t in report.trail],
    )
    return {
        "subcommand": "verify",
        "inequality": inequality,
        "verdict": report.verdict,
        "sup_ratio": report.sup_ratio,
        "constants": report.constants,
        "notes": list(report.notes),
    }


def _finite_mollified(rows: list[dict[str, Any]]) -> bool:
    return all(
        math.isfinite(value)
        for row in rows
        for key, value in row.items()
        if key.startswith("mollified_") and isinstance(value, float)
    )


def run_smoothing_experiment(cfg: RunConfig, out: RunArtifacts) -> dict[str, Any]:
    """
    simulate -> regularity tracker -> energy ledger -> entropy-dissipation coercivity, reduced to
    one verdict.

    Required: tail-exponent gain at least the configured threshold, finite mollified norms,
    ledger relative residual within tolerance, finite entropy-dissipation integral and an
    entropy-coercivity fit that is not a fail. The ledger on every other checkpoint is
    recorded next to the full one as a convergence indicator.
    """
    d = cfg.diagnostics
    ws = build_workspace(cfg)
    f0 = initial_datum(ws.grid, cfg.initial, ws.xs)
    traj = _integrate(cfg, f0, ws, out)
    sched = schedule_for(cfg, ws)
    tracker = regularity_tracker(traj, sched, d.orders, deltas=cfg.mollifier.delta_set)
    ledger = energy_ledger(traj, sched, ws)
    coarse = energy_ledger(traj.thinned(2), sched, ws) if len(traj.times) >= 5 else None
    coercivity = check_entropy_coercivity(traj, ws)
    integral = entropy_dissipation_integral(traj, ws)

    flat = tracker.flat_rows()
    header, rows = _table(flat)
    out.csv("tracker.csv", header, rows)
    header, rows = _table(ledger.rows())
    out.csv("ledger.csv", header, rows)
    header, rows = _table(traj.rows())
    out.csv("conservation.csv", header, rows)
    out.series(
        "tail_exponent.csv", traj.times, tracker.tail_exponents, ("t", "tail_exponent")
    )
    out.field("initial.field", traj.states[0])
    out.field("final.field", traj.states[-1])

    gain = tracker.tail_gain
    criteria = {
        "tail_gain": bool(gain >= d.tail_gain_threshold),
        "mollified_finite": _finite_mollified(flat),
        "ledger_residual": ledger.max_relative_residual <= d.ledger_tolerance,
        "dissipation_finite": math.isfinite(integral),
        "entropy_coercivity": coercivity.verdict != FAIL,
    }
    verdict = PASS if all(criteria.values()) else FAIL
    exponents = tracker.tail_exponents
    summary: dict[str, Any] = {
        "subcommand": "smoothing-experiment",
        "verdict": verdict,
        "criteria": criteria,
        "tail_exponent": {
            "t0": exponents[0],
            "T": exponents[-1],
            "gain": gain,
            "threshold": d.tail_gain_threshold,
            "series": [{"t": t, "value": v} for t, v in zip(traj.times, exponents)],
        },
        "ledger": {
            "max_residual": ledger.max_residual,
            "max_relative_residual": ledger.max_relative_residual,
            "tolerance": d.ledger_tolerance,
            "coarse_max_relative_residual": (
                coarse.max_relative_residual if coarse is not None else None
            ),
            "estimate_fit": ledger.estimate_fit,
        },
        "dissipation_integral": integral,
        "entropy_coercivity": {
            "verdict": coercivity.verdict,
            "constants": coercivity.constants,
        },
        "schedule": sched.to_dict(),
        "conservation_drift": traj.conservation_drift(),
        "entropy_increase": traj.entropy_increase(),
        "final_mollified": {
            key: value
            for key, value in flat[-1].items()
            if key.startswith("mollified_")
        },
    }
    out.json("verdict.json", summary)
    mark = "✅" if verdict == PASS else "❌"
    failed = [name for name, ok in criteria.items() if not ok]
    log(f"{mark} smoothing experiment: {verdict}" + (f" ({', '.join(failed)})" if failed else ""))
    return summary
