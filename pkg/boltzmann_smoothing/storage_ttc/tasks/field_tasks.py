"""
Field files: a one-line JSON header, a newline, then the raw float64 payload.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

from boltzmann_smoothing import config
from boltzmann_smoothing.grid_ttc.tools.lattice_tools import Distribution, make_grid
from boltzmann_smoothing.storage_ttc.tools.manifest_tools import LITTLE, FieldHeader
from boltzmann_smoothing.storage_ttc.tools.path_tools import atomic_write_bytes
from boltzmann_smoothing.utils import log

MAX_HEADER_BYTES = 1 << 16


def _payload(f: Distribution) -> bytes:
    return np.ascontiguousarray(f.values, dtype="<f8").tobytes(order="C")


def encode_field(f: Distribution, *, config_hash: str = "") -> bytes:
    payload = _payload(f)
    header = FieldHeader(
        label=f.label,
        grid=f.grid.to_dict(),
        shape=f.grid.shape,
        sha256=hashlib.sha256(payload).hexdigest(),
        config_hash=config_hash,
        version=config.FIELD_FORMAT_VERSION,
        endianness=LITTLE,
    )
    line = json.dumps(header.to_dict(), sort_keys=True, ensure_ascii=False)
    return line.encode("utf-8") + b"\n" + payload


def decode_field(blob: bytes, *, nonnegative: bool = False) -> tuple[Distribution, FieldHeader]:
    """Parse and verify a field file; raises ValueError on any inconsistency."""
    newline = blob.find(b"\n", 0, MAX_HEADER_BYTES)
    if newline < 0:
        raise ValueError("field file has no header line")
    try:
        raw = json.loads(blob[:newline].decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ValueError(f"unreadable field header: {exc}") from exc
    header = FieldHeader.from_dict(raw)
    header.validate()
    payload = blob[newline + 1 :]
    if len(payload) != header.payload_bytes:
        raise ValueError(
            f"payload has {len(payload)} bytes, the header promises {header.payload_bytes}"
        )
    digest = hashlib.sha256(payload).hexdigest()
    if digest != header.sha256:
        raise ValueError("field checksum mismatch")
    dtype = "<f8" if header.endianness == LITTLE else ">f8"
    values = np.frombuffer(payload, dtype=dtype).astype(np.float64).reshape(header.shape)
    grid = make_grid(int(header.grid["n_points"]), float(header.grid["half_width"]))
    field = Distribution(grid=grid, values=values, nonnegative=nonnegative, label=header.label)
    return field, header


def write_field(path: str | Path, f: Distribution, *, config_hash: str = "") -> Path:
    target = Path(path)
    atomic_write_bytes(target, encode_field(f, config_hash=config_hash))
    log(f"💾 Saved field {f.label or '(unlabeled)'} to: {target}", "DEBUG")
    return target


def read_field(path: str | Path, *, nonnegative: bool = False) -> Distribution:
    with open(Path(path), "rb") as handle:
        blob = handle.read()
    field, _ = decode_field(blob, nonnegative=nonnegative)
    return field


def read_field_header(path: str | Path) -> FieldHeader:
    with open(Path(path), "rb") as handle:
        line = handle.readline(MAX_HEADER_BYTES)
    header = FieldHeader.from_dict(json.loads(line.decode("utf-8")))
    header.validate()
    return header
