"""
JSON persistence with stable bytes.
"""

from __future__ import annotations

import hashlib
import json
import math
from collections.abc import Mapping
from pathlib import Path
from typing import Any

import numpy as np

from boltzmann_smoothing.storage_ttc.tools.path_tools import atomic_write_text
from boltzmann_smoothing.utils import log


def to_jsonable(value: Any) -> Any:
    """
    Plain JSON types for nested values: numpy scalars and arrays become Python numbers and
    lists, tuples become lists, and non-finite floats become the strings "NaN", "Infinity"
    and "-Infinity".
    """
    if isinstance(value, Mapping):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        number = float(value)
        if math.isnan(number):
            return "NaN"
        if math.isinf(number):
            return "Infinity" if number > 0 else "-Infinity"
        return number
    if isinstance(value, Path):
        return str(value)
    if value is None or isinstance(value, str):
        return value
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    raise TypeError(f"cannot serialize {type(value).__name__} to JSON")


def dumps(data: Any) -> str:
    """indent=2, sorted keys, UTF-8 text, trailing newline."""
    return json.dumps(to_jsonable(data), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def canonical_hash(data: Any) -> str:
    """sha256 of the compact canonical JSON of ``data``."""
    payload = json.dumps(
        to_jsonable(data), sort_keys=True, separators=(",", ":"), ensure_ascii=False
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def save_json(path: str | Path, data: Any) -> Path:
    """Write ``data`` atomically as stable JSON."""
    target = Path(path)
    atomic_write_text(target, dumps(data))
    log(f"💾 Saved JSON to: {target}", "DEBUG")
    return target


def load_json(path: str | Path) -> Any | None:
    """Parsed JSON, or None (with a warning) when the file is missing or unreadable."""
    target = Path(path)
    if not target.exists():
        return None
    try:
        with open(target, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        log(f"⚠️ Failed to load JSON from {target}: {exc}", "WARN")
        return None
