"""
Public API surface for runner tasks.
"""

from boltzmann_smoothing.runner_ttc.tasks.cli_tasks import (
    COMMANDS,
    build_parser,
    load_run_config,
    run_cli,
)
from boltzmann_smoothing.runner_ttc.tasks.command_tasks import (
    measure_field,
    run_collision_apply,
    run_measure,
    run_simulate,
    run_smoothing_experiment,
    run_verify,
    schedule_for,
)
from boltzmann_smoothing.runner_ttc.tasks.config_tasks import (
    build_cross_section,
    build_grid,
    build_workspace,
    parse_config,
    parse_config_text,
    with_overrides,
)
from boltzmann_smoothing.runner_ttc.tasks.initial_tasks import INITIAL_BUILDERS, initial_datum
from boltzmann_smoothing.runner_ttc.tasks.report_tasks import (
    build_report,
    collect_run,
    hash_mismatches,
    render_report,
)
from boltzmann_smoothing.runner_ttc.tools.run_config_tools import (
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
)

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
]
