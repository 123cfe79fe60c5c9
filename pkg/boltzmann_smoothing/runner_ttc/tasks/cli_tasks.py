"""
Command-line surface: argparse subcommands, run-directory setup and the mapping of failures to
structured error JSON and exit codes.

stdout carries exactly one JSON document per invocation (the summary, or the error record);
everything human-facing goes to stderr.
"""

from __future__ import annotations

import argparse
import sys
import traceback
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from boltzmann_smoothing import config
from boltzmann_smoothing.errors import (
    EXIT_OK,
    ConfigError,
    NumericalError,
    SmoothingError,
    VerificationFailure,
)
from boltzmann_smoothing.runner_ttc.tasks.command_tasks import (
    run_collision_apply,
    run_measure,
    run_simulate,
    run_smoothing_experiment,
    run_verify,
)
from boltzmann_smoothing.runner_ttc.tasks.config_tasks import parse_config, with_overrides
from boltzmann_smoothing.runner_ttc.tasks.report_tasks import build_report
from boltzmann_smoothing.runner_ttc.tools.run_config_tools import RunConfig
from boltzmann_smoothing.storage_ttc.tasks.json_tasks import dumps
from boltzmann_smoothing.storage_ttc.tasks.manifest_tasks import RunArtifacts
from boltzmann_smoothing.storage_ttc.tools.path_tools import run_directory
from boltzmann_smoothing.utils import log, log_run_table
from boltzmann_smoothing.veritas_ttc.tasks.registry_tasks import INEQUALITIES
from boltzmann_smoothing.veritas_ttc.tools.fit_tools import FAIL

COMMANDS = (
    "simulate",
    "collision-apply",
    "measure",
    "verify",
    "smoothing-experiment",
    "report",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boltzmann-smoothing",
        description="Spectral solver and inequality checks for the non-cutoff Boltzmann equation",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="<file>", help="INI run config")
    common.add_argument("--output", metavar="<dir>", help="directory for the run artifacts")
    common.add_argument("--seed", type=int, metavar="<int>", help="override [run] seed")
    common.add_argument(
        "--deterministic",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="exactly rounded reductions and single-worker FFTs (override [run] deterministic)",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="<command>")
    sub.add_parser("simulate", parents=[common], help="integrate the initial datum in time")
    apply = sub.add_parser("collision-apply", parents=[common], help="evaluate Q(g, f)")
    apply.add_argument("--f", dest="f_path", metavar="FILE", help="field file for f")
    apply.add_argument("--g", dest="g_path", metavar="FILE", help="field file for g")
    measure = sub.add_parser("measure", parents=[common], help="functionals of a field file")
    measure.add_argument("--field", dest="field_path", metavar="FILE", help="field file")
    verify = sub.add_parser("verify", parents=[common], help="run one inequality check")
    verify.add_argument(
        "--inequality",
        metavar="<id>",
        help=f"one of: {', '.join(sorted(INEQUALITIES))} (or a descriptive alias)",
    )
    sub.add_parser(
        "smoothing-experiment",
        parents=[common],
        help="simulate, track regularity and reduce to one verdict",
    )
    report = sub.add_parser("report", parents=[common], help="summarize run directories")
    report.add_argument("directories", nargs="+", metavar="dir", help="run directories")
    return parser


def load_run_config(args: argparse.Namespace) -> RunConfig:
    """Config file (or defaults) with the command-line overrides applied."""
    cfg = parse_config(args.config) if args.config else RunConfig()
    return with_overrides(
        cfg,
        seed=args.seed,
        deterministic=args.deterministic,
        inequality=getattr(args, "inequality", None),
    )


def _output_directory(args: argparse.Namespace, cfg: RunConfig) -> Path:
    if args.output:
        return run_directory(args.output)
    if args.command == "report":
        return run_directory(Path(args.directories[0]) / "report")
    return run_directory(cfg.run.output_dir or None, cfg.run.label or args.command)


def _dispatch(args: argparse.Namespace, cfg: RunConfig, out: RunArtifacts) -> dict[str, Any]:
    if args.command == "simulate":
        return run_simulate(cfg, out)
    if args.command == "collision-apply":
        return run_collision_apply(cfg, out, f_path=args.f_path, g_path=args.g_path)
    if args.command == "measure":
        return run_measure(cfg, out, field_path=args.field_path)
    if args.command == "verify":
        return run_verify(cfg, out)
    if args.command == "smoothing-experiment":
        return run_smoothing_experiment(cfg, out)
    return build_report(args.directories, out)


def _as_smoothing_error(exc: Exception) -> SmoothingError:
    if isinstance(exc, SmoothingError):
        return exc
    if isinstance(exc, ValueError):
        return ConfigError(str(exc))
    if isinstance(exc, (ArithmeticError, RuntimeError)):
        return NumericalError(str(exc))
    log(traceback.format_exc().rstrip(), "DEBUG")
    return SmoothingError(f"{type(exc).__name__}: {exc}")


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run one subcommand and return its exit status."""
    args = build_parser().parse_args(argv)
    out: RunArtifacts | None = None
    summary: dict[str, Any] | None = None
    regime = "-"
    try:
        cfg = load_run_config(args)
        config.DETERMINISTIC = cfg.run.deterministic
        regime = ", ".join(cfg.regime_tags)
        if args.command == "report":
            content: dict[str, Any] = {"report": [str(d) for d in args.directories]}
            tags: tuple[str, ...] = ()
        else:
            content, tags = cfg.to_dict(), cfg.regime_tags
        out = RunArtifacts(
            _output_directory(args, cfg),
            args.command,
            content,
            regime_tags=tags,
            deterministic=cfg.run.deterministic,
        )
        summary = _dispatch(args, cfg, out)
        if summary.get("verdict") == FAIL:
            raise VerificationFailure(f"{args.command} returned a fail verdict")
        status, payload = EXIT_OK, summary
    except Exception as exc:  # every failure leaves a structured error record
        error = _as_smoothing_error(exc)
        status = error.exit_code
        payload = error.to_dict()
        if summary is not None:
            payload["summary"] = summary
        log(f"❌ {error}", "ERROR")

    if out is not None:
        out.finalize(status, error=None if status == EXIT_OK else payload.get("message"))
        payload.setdefault("directory", str(out.directory))
    sys.stdout.write(dumps(payload))
    sys.stdout.flush()
    log_run_table(
        f"{args.command}",
        [
            ("regime", regime),
            ("config hash", out.config_hash[:16] if out else "-"),
            ("artifacts", len(out.manifest.artifacts) if out else 0),
            ("directory", out.directory if out else "-"),
            ("exit status", status),
        ],
    )
    return status
