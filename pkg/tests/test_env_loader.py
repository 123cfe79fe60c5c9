import os

from boltzmann_smoothing.env_loader import find_env_file, load_env


def test_nearest_env_file_is_found_walking_up(tmp_path) -> None:
    nested = tmp_path / "runs" / "rough"
    nested.mkdir(parents=True)
    (tmp_path / ".env").write_text("BOLTZMANN_SMOOTHING_TEST_A=1\n", encoding="utf-8")
    assert find_env_file(nested) == tmp_path / ".env"


def test_parent_environment_wins(tmp_path, monkeypatch) -> None:
    (tmp_path / ".env").write_text(
        "BOLTZMANN_SMOOTHING_TEST_A=from-file\nBOLTZMANN_SMOOTHING_TEST_B=from-file\n",
        encoding="utf-8",
    )
    monkeypatch.setenv("BOLTZMANN_SMOOTHING_TEST_A", "from-shell")
    monkeypatch.delenv("BOLTZMANN_SMOOTHING_TEST_B", raising=False)
    applied = load_env(tmp_path, quiet=True)
    assert applied == {"BOLTZMANN_SMOOTHING_TEST_B": "from-file"}
    assert os.environ["BOLTZMANN_SMOOTHING_TEST_A"] == "from-shell"
    monkeypatch.delenv("BOLTZMANN_SMOOTHING_TEST_B")


def test_missing_env_file_loads_nothing(tmp_path) -> None:
    assert find_env_file(tmp_path, filenames=("no-such-file.env",)) is None
