"""Field-file header and run-manifest records."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

FIELD_FORMAT = "boltzmann-smoothing-field"
MANIFEST_NAME = "manifest.json"
LITTLE = "little"


@dataclass(frozen=True)
class FieldHeader:
    """
    One-line JSON header of a field file.

    The payload that follows is the row-major float64 array in ``endianness`` byte order; its
    sha256 is stored here.
    """

    label: str
    grid: dict[str, Any]
    shape: tuple[int, ...]
    sha256: str
    config_hash: str = ""
    version: int = 1
    endianness: str = LITTLE
    dtype: str = "float64"
    format: str = FIELD_FORMAT

    def validate(self) -> None:
        if self.format != FIELD_FORMAT:
            raise ValueError(f"not a field file (format {self.format!r})")
        if self.endianness not in ("little", "big"):
            raise ValueError(f"unknown endianness {self.endianness!r}")
        if self.dtype != "float64":
            raise ValueError(f"unsupported dtype {self.dtype!r}")
        n = int(self.grid.get("n_points", 0))
        if tuple(self.shape) != (n, n, n):
            raise ValueError(f"shape {tuple(self.shape)} does not match the grid N={n}")

    @property
    def payload_bytes(self) -> int:
        count = 1
        for extent in self.shape:
            count *= int(extent)
        return 8 * count

    def to_dict(self) -> dict[str, Any]:
        return {
            "format": self.format,
            "version": self.version,
            "label": self.label,
            "grid": dict(self.grid),
            "endianness": self.endianness,
            "dtype": self.dtype,
            "shape": list(self.shape),
            "config_hash": self.config_hash,
            "sha256": self.sha256,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> FieldHeader:
        try:
            return cls(
                label=str(data.get("label", "")),
                grid=dict(data["grid"]),
                shape=tuple(int(x) for x in data["shape"]),
                sha256=str(data["sha256"]),
                config_hash=str(data.get("config_hash", "")),
                version=int(data.get("version", 1)),
                endianness=str(data.get("endianness", LITTLE)),
                dtype=str(data.get("dtype", "float64")),
                format=str(data.get("format", "")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed field header: {exc}") from exc


@dataclass(frozen=True)
class ArtifactRecord:
    name: str
    kind: str
    sha256: str
    size: int

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "kind": self.kind, "sha256": self.sha256, "bytes": self.size}


@dataclass
class RunManifest:
    """Provenance of one run directory: config copy, its hash, regime tags and artifacts."""

    subcommand: str
    config: dict[str, Any]
    config_hash: str
    regime_tags: tuple[str, ...] = ()
    schema: int = 1
    artifacts: list[ArtifactRecord] = field(default_factory=list)
    exit_status: int | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": self.schema,
            "subcommand": self.subcommand,
            "config": self.config,
            "config_hash": self.config_hash,
            "regime_tags": list(self.regime_tags),
            "artifacts": [record.to_dict() for record in self.artifacts],
            "exit_status": self.exit_status,
            **self.extra,
        }
