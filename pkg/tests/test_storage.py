import json

import numpy as np
import pytest

from boltzmann_smoothing.storage import (
    MANIFEST_NAME,
    RunArtifacts,
    canonical_hash,
    csv_text,
    decode_field,
    dumps,
    encode_field,
    load_json,
    load_manifest,
    read_csv,
    read_field,
    read_field_header,
    run_directory,
    safe_name,
    write_field,
)


def test_dumps_is_sorted_and_encodes_non_finite_floats() -> None:
    text = dumps({"b": float("nan"), "a": [float("inf"), -float("inf"), np.float64(1.5)]})
    assert text.endswith("\n")
    data = json.loads(text)
    assert list(data) == ["a", "b"]
    assert data == {"a": ["Infinity", "-Infinity", 1.5], "b": "NaN"}


def test_dumps_rejects_unknown_objects() -> None:
    with pytest.raises(TypeError):
        dumps({"x": object()})


def test_canonical_hash_ignores_key_order() -> None:
    assert canonical_hash({"a": 1, "b": (2, 3)}) == canonical_hash({"b": [2, 3], "a": 1})
    assert canonical_hash({"a": 1}) != canonical_hash({"a": 2})


def test_field_file_round_trip(tmp_path, gaussian) -> None:
    path = write_field(tmp_path / "f.field", gaussian, config_hash="abc")
    back = read_field(path)
    np.testing.assert_array_equal(back.values, gaussian.values)
    assert back.grid.same_as(gaussian.grid)
    header = read_field_header(path)
    assert header.config_hash == "abc"
    assert header.shape == (8, 8, 8)
    assert header.endianness == "little"


def test_field_checksum_detects_corruption(gaussian) -> None:
    blob = bytearray(encode_field(gaussian))
    blob[-1] ^= 0xFF
    with pytest.raises(ValueError, match="checksum"):
        decode_field(bytes(blob))
    with pytest.raises(ValueError, match="payload"):
        decode_field(encode_field(gaussian)[:-8])
    with pytest.raises(ValueError, match="header"):
        decode_field(b"not json\n")


def test_csv_comment_line_is_skipped(tmp_path) -> None:
    text = csv_text(["t", "value"], [(0.0, 0.1), (1.0, 1e-300)], comment="config_hash=xyz")
    assert text.splitlines()[0] == "# config_hash=xyz"
    path = tmp_path / "series.csv"
    path.write_text(text, encoding="utf-8")
    header, rows = read_csv(path)
    assert header == ["t", "value"]
    assert [float(v) for v in rows[1]] == [1.0, 1e-300]
    with pytest.raises(ValueError, match="cells"):
        csv_text(["a", "b"], [(1,)])


def test_run_artifacts_manifest(tmp_path, gaussian) -> None:
    run = RunArtifacts(
        tmp_path / "run", "simulate", {"grid": {"n_points": 8}}, regime_tags=["hard"]
    )
    run.json("summary.json", {"value": 1.0})
    run.csv("moments.csv", ["t", "mass"], [(0.0, 1.0)])
    run.field("f_final.field", gaussian)
    path = run.finalize(0)
    manifest = load_json(path)
    assert "created_at" not in manifest
    assert manifest["exit_status"] == 0
    assert manifest["regime_tags"] == ["hard"]
    assert [a["name"] for a in manifest["artifacts"]] == [
        "f_final.field",
        "moments.csv",
        "summary.json",
    ]
    assert load_json(tmp_path / "run" / "summary.json")["config_hash"] == run.config_hash
    assert (tmp_path / "run" / "moments.csv").read_text().startswith("# config_hash=")


def test_non_deterministic_manifest_has_a_timestamp(tmp_path) -> None:
    run = RunArtifacts(tmp_path, "verify", {}, deterministic=False)
    manifest = load_json(run.finalize(4))
    assert "created_at" in manifest


def test_load_manifest_reports_problems(tmp_path) -> None:
    run = RunArtifacts(tmp_path, "verify", {"a": 1})
    run.json("fit_report.json", {"verdict": "pass"})
    run.finalize(0)
    manifest, problems = load_manifest(tmp_path)
    assert manifest is not None and problems == []
    (tmp_path / "fit_report.json").write_text("{}", encoding="utf-8")
    _, problems = load_manifest(tmp_path)
    assert problems == ["checksum mismatch for fit_report.json"]
    (tmp_path / MANIFEST_NAME).unlink()
    manifest, problems = load_manifest(tmp_path)
    assert manifest is None and "missing" in problems[0]


def test_safe_name() -> None:
    assert safe_name("run 1/final") == "run-1-final"
    with pytest.raises(ValueError):
        safe_name("///")


def test_run_directory(tmp_path) -> None:
    path = run_directory(tmp_path, "exp a")
    assert path == tmp_path / "exp-a" and path.is_dir()
