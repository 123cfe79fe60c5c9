"""
Run-directory paths and atomic writes.
"""

from __future__ import annotations

import os
import re
from pathlib import Path

from boltzmann_smoothing import config

_UNSAFE = re.compile(r"[^A-Za-z0-9._-]+")


def safe_name(name: str) -> str:
    """File-system safe artifact name (runs of other characters become '-')."""
    cleaned = _UNSAFE.sub("-", name).strip("-.")
    if not cleaned:
        raise ValueError(f"artifact name {name!r} has no usable characters")
    return cleaned


def run_directory(
    output_dir: str | Path | None = None, label: str = "", *, create: bool = True
) -> Path:
    """``output_dir/label`` (``config.OUTPUT_DIR`` when no directory is given)."""
    base = Path(output_dir or config.OUTPUT_DIR)
    path = base / safe_name(label) if label else base
    if create:
        path.mkdir(parents=True, exist_ok=True)
    return path


def atomic_write_bytes(path: Path, payload: bytes) -> None:
    """Write to a sibling temp file, then ``os.replace`` it over ``path``."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, "wb") as handle:
            handle.write(payload)
        os.replace(tmp, path)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise


def atomic_write_text(path: Path, text: str) -> None:
    atomic_write_bytes(path, text.encode("utf-8"))
