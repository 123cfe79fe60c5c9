"""
Run directories: every artifact is written through a RunArtifacts, which hashes it and lists it
in manifest.json when the run finishes.
"""

from __future__ import annotations

import hashlib
from collections.abc import Sequence
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from boltzmann_smoothing import config
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution
from boltzmann_smoothing.storage_ttc.tasks.csv_tasks import write_csv, write_series
from boltzmann_smoothing.storage_ttc.tasks.field_tasks import write_field
from boltzmann_smoothing.storage_ttc.tasks.json_tasks import canonical_hash, load_json, save_json
from boltzmann_smoothing.storage_ttc.tools.manifest_tools import (
    MANIFEST_NAME,
    ArtifactRecord,
    RunManifest,
)
from boltzmann_smoothing.storage_ttc.tools.path_tools import safe_name
from boltzmann_smoothing.utils import log


def file_sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def config_hash(config_dict: dict[str, Any]) -> str:
    """sha256 of the canonical JSON of a parsed run config."""
    return canonical_hash(config_dict)


class RunArtifacts:
    """Writer for one run directory; ``finalize`` writes the manifest."""

    def __init__(
        self,
        directory: Path,
        subcommand: str,
        config_dict: dict[str, Any],
        *,
        regime_tags: Sequence[str] = (),
        deterministic: bool = True,
    ) -> None:
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.deterministic = deterministic
        self.manifest = RunManifest(
            subcommand=subcommand,
            config=config_dict,
            config_hash=config_hash(config_dict),
            regime_tags=tuple(regime_tags),
            schema=config.CONFIG_SCHEMA_VERSION,
        )

    @property
    def config_hash(self) -> str:
        return self.manifest.config_hash

    def path(self, name: str) -> Path:
        return self.directory / safe_name(name)

    def _record(self, path: Path, kind: str) -> Path:
        record = ArtifactRecord(
            name=path.relative_to(self.directory).as_posix(),
            kind=kind,
            sha256=file_sha256(path),
            size=path.stat().st_size,
        )
        self.manifest.artifacts = [a for a in self.manifest.artifacts if a.name != record.name]
        self.manifest.artifacts.append(record)
        return path

    def json(self, name: str, data: Any) -> Path:
        payload = {"config_hash": self.config_hash, **data} if isinstance(data, dict) else data
        return self._record(save_json(self.path(name), payload), "json")

    def csv(self, name: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> Path:
        comment = f"config_hash={self.config_hash}"
        return self._record(write_csv(self.path(name), header, rows, comment=comment), "csv")

    def series(
        self,
        name: str,
        x: Sequence[float],
        y: Sequence[float],
        names: tuple[str, str] = ("t", "value"),
    ) -> Path:
        comment = f"config_hash={self.config_hash}"
        return self._record(
            write_series(self.path(name), x, y, names, comment=comment), "series"
        )

    def field(self, name: str, f: Distribution) -> Path:
        return self._record(
            write_field(self.path(name), f, config_hash=self.config_hash), "field"
        )

    def finalize(self, exit_status: int, **extra: Any) -> Path:
        """Write manifest.json; wall-clock stamps are left out in deterministic mode."""
        self.manifest.exit_status = int(exit_status)
        self.manifest.extra.update(extra)
        if not self.deterministic:
            self.manifest.extra["created_at"] = datetime.now(timezone.utc).isoformat()
        self.manifest.artifacts.sort(key=lambda record: record.name)
        path = save_json(self.directory / MANIFEST_NAME, self.manifest.to_dict())
        log(f"💾 {len(self.manifest.artifacts)} artifacts listed in {path}")
        return path


def load_manifest(directory: str | Path) -> tuple[dict[str, Any] | None, list[str]]:
    """The manifest of a run directory and the problems found while checking its artifacts."""
    root = Path(directory)
    path = root / MANIFEST_NAME
    if not root.is_dir():
        return None, [f"{root} is not a directory"]
    if not path.exists():
        return None, [f"missing {MANIFEST_NAME} in {root}"]
    manifest = load_json(path)
    if not isinstance(manifest, dict):
        return None, [f"corrupt {MANIFEST_NAME} in {root}"]
    return manifest, verify_artifacts(root, manifest)


def verify_artifacts(directory: Path, manifest: dict[str, Any]) -> list[str]:
    problems: list[str] = []
    for entry in manifest.get("artifacts", []):
        name = str(entry.get("name", ""))
        path = directory / name
        if not path.is_file():
            problems.append(f"missing artifact {name}")
        elif file_sha256(path) != entry.get("sha256"):
            problems.append(f"checksum mismatch for {name}")
    for problem in problems:
        log(f"⚠️ {problem}", "WARN")
    return problems
