import json

import pytest

from boltzmann_smoothing.runner import run_cli
from boltzmann_smoothing.storage import MANIFEST_NAME, load_json, write_field

from conftest import SMALL_CONFIG, maxwellian


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "small.ini"
    path.write_text(SMALL_CONFIG, encoding="utf-8")
    return path


def _run(capsys, *argv):
    status = run_cli([str(arg) for arg in argv])
    return status, json.loads(capsys.readouterr().out)


def _verify(capsys, config_path, output):
    return _run(
        capsys,
        "verify",
        "--config",
        config_path,
        "--inequality",
        "interp-3.6",
        "--output",
        output,
    )


def test_verify_writes_report_and_manifest(capsys, tmp_path, config_path) -> None:
    status, payload = _verify(capsys, config_path, tmp_path / "a")
    assert status == 0
    assert payload["verdict"] == "pass"
    assert payload["inequality"] == "interp-3.6"
    assert payload["constants"]["C"] == 2.0
    assert load_json(tmp_path / "a" / "fit_report.json")["inequality"] == "interp-3.6"
    manifest = load_json(tmp_path / "a" / MANIFEST_NAME)
    assert manifest["exit_status"] == 0
    assert manifest["subcommand"] == "verify"
    assert manifest["regime_tags"] == ["moderately-soft"]
    names = {a["name"] for a in manifest["artifacts"]}
    assert names == {"fit_report.json", "cases.csv", "trail.csv"}


def test_deterministic_reruns_are_byte_identical(capsys, tmp_path, config_path) -> None:
    _verify(capsys, config_path, tmp_path / "a")
    _verify(capsys, config_path, tmp_path / "b")
    for name in ("fit_report.json", "cases.csv", MANIFEST_NAME):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_report_summarizes_runs(capsys, tmp_path, config_path) -> None:
    _verify(capsys, config_path, tmp_path / "a")
    _verify(capsys, config_path, tmp_path / "b")
    status, payload = _run(
        capsys, "report", tmp_path / "a", tmp_path / "b", "--output", tmp_path / "rep"
    )
    assert status == 0
    assert payload["hash_mismatches"] == []
    assert len(payload["runs"]) == 2
    assert (tmp_path / "rep" / "summary.json").is_file()


def test_report_without_manifests_fails(capsys, tmp_path) -> None:
    (tmp_path / "empty").mkdir()
    status, payload = _run(capsys, "report", tmp_path / "empty", "--output", tmp_path / "rep")
    assert status == 1
    assert "missing manifest.json" in payload["message"]


def test_missing_config_is_a_config_error(capsys, tmp_path) -> None:
    status, payload = _run(
        capsys, "verify", "--config", tmp_path / "nope.ini", "--output", tmp_path / "out"
    )
    assert status == 2
    assert payload["error"] == "config_error"


def test_unknown_inequality_is_a_config_error(capsys, tmp_path, config_path) -> None:
    status, payload = _run(
        capsys,
        "verify",
        "--config",
        config_path,
        "--inequality",
        "nope",
        "--output",
        tmp_path / "out",
    )
    assert status == 2
    assert payload["field"] == "verify.inequality"
    assert load_json(tmp_path / "out" / MANIFEST_NAME)["exit_status"] == 2


def test_descriptive_alias_reports_canonical_id(capsys, tmp_path, config_path) -> None:
    status, payload = _run(
        capsys,
        "verify",
        "--config",
        config_path,
        "--inequality",
        "interp-lq",
        "--output",
        tmp_path / "alias",
    )
    assert status == 0
    assert payload["inequality"] == "interp-3.6"


def test_unknown_subcommand_exits_with_usage_error() -> None:
    with pytest.raises(SystemExit) as info:
        run_cli(["explode"])
    assert info.value.code == 2


def test_collision_apply_and_measure(capsys, tmp_path, config_path, grid) -> None:
    f = write_field(tmp_path / "f.field", maxwellian(grid, 0.8, (0.3, 0.0, 0.0)))
    g = write_field(tmp_path / "g.field", maxwellian(grid))
    status, payload = _run(
        capsys,
        "collision-apply",
        "--config",
        config_path,
        "--f",
        f,
        "--g",
        g,
        "--output",
        tmp_path / "q",
    )
    assert status == 0
    assert (tmp_path / "q" / "q.field").is_file()
    assert abs(payload["diagnostics"]["relative_to_loss"]["mass"]) < 1e-6

    status, payload = _run(
        capsys, "measure", "--config", config_path, "--field", f, "--output", tmp_path / "m"
    )
    assert status == 0
    assert payload["moments"]["mass"] == pytest.approx(1.0, rel=1e-3)
    assert "uniform_class" in payload


def test_measure_requires_a_field(capsys, tmp_path, config_path) -> None:
    status, payload = _run(
        capsys, "measure", "--config", config_path, "--output", tmp_path / "m"
    )
    assert status == 2
    assert payload["field"] == "--field"


@pytest.mark.slow
def test_simulate_and_smoothing_experiment(capsys, tmp_path, config_path) -> None:
    config_path.write_text(
        SMALL_CONFIG
        + "\n[time]\ndt = 0.05\nt_end = 0.1\nscheme = rk2\n\n[initial]\nkind = smoothed_ball\n",
        encoding="utf-8",
    )
    status, payload = _run(
        capsys, "simulate", "--config", config_path, "--output", tmp_path / "sim"
    )
    assert status == 0
    assert (tmp_path / "sim" / MANIFEST_NAME).is_file()
    status, payload = _run(
        capsys, "smoothing-experiment", "--config", config_path, "--output", tmp_path / "exp"
    )
    assert status in (0, 4)
    assert payload.get("verdict", payload.get("summary", {}).get("verdict")) in ("pass", "fail")
