"""
Compatibility wrapper for runner API.
"""

import sys

from boltzmann_smoothing.runner_ttc.codebase.api import (
    COMMANDS,
    INITIAL_BUILDERS,
    INITIAL_KINDS,
    SECTIONS,
    CrossSectionSection,
    DiagnosticsSection,
    GridSection,
    InitialSection,
    MollifierSection,
    RunConfig,
    RunSection,
    TimeSection,
    VerifySection,
    build_cross_section,
    build_grid,
    build_parser,
    build_report,
    build_workspace,
    collect_run,
    hash_mismatches,
    initial_datum,
    load_run_config,
    measure_field,
    parse_config,
    parse_config_text,
    render_report,
    run_cli,
    run_collision_apply,
    run_measure,
    run_simulate,
    run_smoothing_experiment,
    run_verify,
    schedule_for,
    with_overrides,
)


def main() -> None:
    """Run one CLI subcommand and exit with its status."""
    sys.exit(run_cli())


__all__ = [
    "SECTIONS",
    "INITIAL_KINDS",
    "RunConfig",
    "RunSection",
    "GridSection",
    "CrossSectionSection",
    "InitialSection",
    "TimeSection",
    "MollifierSection",
    "DiagnosticsSection",
    "VerifySection",
    "parse_config",
    "parse_config_text",
    "with_overrides",
    "build_grid",
    "build_cross_section",
    "build_workspace",
    "INITIAL_BUILDERS",
    "initial_datum",
    "schedule_for",
    "measure_field",
    "run_simulate",
    "run_collision_apply",
    "run_measure",
    "run_verify",
    "run_smoothing_experiment",
    "collect_run",
    "hash_mismatches",
    "render_report",
    "build_report",
    "COMMANDS",
    "build_parser",
    "load_run_config",
    "run_cli",
    "main",
]
