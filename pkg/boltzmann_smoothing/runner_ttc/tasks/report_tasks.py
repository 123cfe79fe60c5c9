"""
Offline summaries of finished run directories.

A report reads each run's manifest, checks every listed artifact, pulls the headline numbers
out of the JSON artifacts and splits every ``t``-indexed CSV into two-column series.
Missing or corrupt artifacts are listed and skipped.
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.table import Table

from boltzmann_smoothing.errors import SmoothingError
from boltzmann_smoothing.storage_ttc.tasks.csv_tasks import read_csv
from boltzmann_smoothing.storage_ttc.tasks.json_tasks import load_json
from boltzmann_smoothing.storage_ttc.tasks.manifest_tasks import RunArtifacts, load_manifest
from boltzmann_smoothing.storage_ttc.tools.path_tools import safe_name
from boltzmann_smoothing.utils import log


def _number(text: str) -> float | None:
    try:
        return float(text)
    except ValueError:
        return None


def _headlines(name: str, data: dict[str, Any]) -> dict[str, Any]:
    """The numbers a reader looks for first in one JSON artifact."""
    out: dict[str, Any] = {}
    if "verdict" in data:
        out["verdict"] = data["verdict"]
    if name == "fit_report.json":
        out["inequality"] = data.get("inequality")
        out["constants"] = data.get("constants", {})
        out["sup_ratio"] = data.get("sup_ratio")
    if name == "verdict.json":
        tail = data.get("tail_exponent", {})
        out["tail_exponent"] = {"t0": tail.get("t0"), "T": tail.get("T"), "gain": tail.get("gain")}
        ledger = data.get("ledger", {})
        out["ledger_residual"] = {
            "absolute": ledger.get("max_residual"),
            "relative": ledger.get("max_relative_residual"),
        }
        out["dissipation_integral"] = data.get("dissipation_integral")
        out["criteria"] = data.get("criteria", {})
    if "conservation_drift" in data:
        out["conservation_drift"] = data["conservation_drift"]
    return out


def collect_run(directory: Path) -> dict[str, Any]:
    """Manifest facts, artifact problems, headline numbers and CSV series of one run."""
    manifest, problems = load_manifest(directory)
    record: dict[str, Any] = {"directory": str(directory), "problems": list(problems)}
    if manifest is None:
        record["missing_manifest"] = True
        return record
    broken = {p.rsplit(" ", 1)[-1] for p in problems}
    record.update(
        subcommand=manifest.get("subcommand"),
        regime_tags=manifest.get("regime_tags", []),
        config_hash=manifest.get("config_hash"),
        exit_status=manifest.get("exit_status"),
        artifacts={a["name"]: a["sha256"] for a in manifest.get("artifacts", [])},
        headlines={},
        series={},
    )
    for entry in manifest.get("artifacts", []):
        name = entry["name"]
        if name in broken:
            continue
        path = directory / name
        if entry.get("kind") == "json":
            data = load_json(path)
            if isinstance(data, dict):
                record["headlines"][name] = _headlines(name, data)
            else:
                record["problems"].append(f"unreadable artifact {name}")
        elif entry.get("kind") in ("csv", "series"):
            try:
                header, rows = read_csv(path)
            except (OSError, ValueError) as exc:
                record["problems"].append(f"unreadable artifact {name}: {exc}")
                continue
            if header and header[0] == "t":
                record["series"][name] = (header, rows)
    return record


def hash_mismatches(runs: Sequence[dict[str, Any]]) -> list[dict[str, Any]]:
    """Artifacts present in several runs whose sha256 differ, plus differing config hashes."""
    complete = [run for run in runs if not run.get("missing_manifest")]
    flags: list[dict[str, Any]] = []
    if len(complete) < 2:
        return flags
    config_hashes = {run["directory"]: run["config_hash"] for run in complete}
    if len(set(config_hashes.values())) > 1:
        flags.append({"artifact": "config", "hashes": config_hashes})
    names = sorted({name for run in complete for name in run["artifacts"]})
    for name in names:
        hashes = {
            run["directory"]: run["artifacts"][name] for run in complete if name in run["artifacts"]
        }
        if len(hashes) > 1 and len(set(hashes.values())) > 1:
            flags.append({"artifact": name, "hashes": hashes})
    return flags


def _write_series(out: RunArtifacts, index: int, run: dict[str, Any]) -> list[str]:
    written = []
    for name, (header, rows) in sorted(run["series"].items()):
        stem = Path(name).stem
        for column in range(1, len(header)):
            pairs = [(_number(row[0]), _number(row[column])) for row in rows if len(row) > column]
            points = [(t, y) for t, y in pairs if t is not None and y is not None]
            if not points:
                continue
            target = safe_name(f"run{index}_{stem}_{header[column]}.csv")
            xs, ys = [t for t, _ in points], [y for _, y in points]
            out.series(target, xs, ys, ("t", header[column]))
            written.append(target)
    return written


def render_report(runs: Sequence[dict[str, Any]], flags: Sequence[dict[str, Any]]) -> None:
    """One rich table on stderr; stdout stays machine-readable."""
    table = Table(title="Boltzmann smoothing runs")
    for column in ("run", "subcommand", "regime", "exit", "verdict", "headline", "problems"):
        table.add_column(column)
    for run in runs:
        if run.get("missing_manifest"):
            table.add_row(run["directory"], "-", "-", "-", "-", "-", "; ".join(run["problems"]))
            continue
        verdicts = [h["verdict"] for h in run["headlines"].values() if "verdict" in h]
        headline = ""
        for h in run["headlines"].values():
            if "tail_exponent" in h:
                tail = h["tail_exponent"]
                headline = f"tail exponent t=0 {tail['t0']} vs t=T {tail['T']}"
            elif "constants" in h and not headline:
                headline = ", ".join(f"{k}={v}" for k, v in sorted(h["constants"].items()))
        table.add_row(
            run["directory"],
            str(run["subcommand"]),
            ", ".join(run["regime_tags"]),
            str(run["exit_status"]),
            ", ".join(verdicts) or "-",
            headline or "-",
            str(len(run["problems"])),
        )
    console = Console(stderr=True)
    console.print(table)
    for flag in flags:
        console.print(f"[yellow]non-identical hashes for {flag['artifact']}[/yellow]")


def build_report(directories: Sequence[str | Path], out: RunArtifacts) -> dict[str, Any]:
    """
    Summarize run directories into ``out``: summary.json plus two-column CSVs.

    Raises:
        SmoothingError: when no directory holds a manifest (after writing the partial summary)
    """
    runs = [collect_run(Path(d)) for d in directories]
    flags = hash_mismatches(runs)
    written: list[str] = []
    for index, run in enumerate(runs):
        if not run.get("missing_manifest"):
            written.extend(_write_series(out, index, run))
    summary = {
        "subcommand": "report",
        "runs": [{k: v for k, v in run.items() if k != "series"} for run in runs],
        "hash_mismatches": flags,
        "series": written,
        "problems": [f"{run['directory']}: {p}" for run in runs for p in run["problems"]],
    }
    out.json("summary.json", summary)
    render_report(runs, flags)
    if flags:
        log(f"⚠️ {len(flags)} artifacts differ between runs", "WARN")
    if all(run.get("missing_manifest") for run in runs):
        raise SmoothingError("; ".join(summary["problems"]) or "no run directories given")
    return summary
