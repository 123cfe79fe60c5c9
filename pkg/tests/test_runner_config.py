import pytest

from boltzmann_smoothing.errors import ConfigError
from boltzmann_smoothing.runner import (
    RunConfig,
    build_workspace,
    parse_config,
    parse_config_text,
    with_overrides,
)
from boltzmann_smoothing.runner_ttc.tools.run_config_tools import parse_orders


def test_defaults_are_valid() -> None:
    cfg = RunConfig()
    cfg.validate()
    assert cfg.grid.n_points == 16
    assert cfg.mollifier.lam == 0.0
    assert cfg.to_dict()["mollifier"]["lambda"] == 0.0


def test_small_config_parses(small_config_text) -> None:
    cfg = parse_config_text(small_config_text)
    assert cfg.run.seed == 3
    assert cfg.grid.n_points == 8
    assert cfg.cross_section.theta_panels == 2
    assert cfg.verify.family_size == 4
    assert cfg.regime == "moderately-soft"
    ws = build_workspace(cfg)
    assert ws.grid.n_points == 8


@pytest.mark.parametrize(
    "gamma, s, tags",
    [
        (0.5, 0.3, ("hard", "hard-mild")),
        (0.5, 0.7, ("hard",)),
        (-1.2, 0.7, ("very-soft",)),
    ],
)
def test_regime_tags(gamma, s, tags) -> None:
    cfg = parse_config_text(f"[cross_section]\ngamma = {gamma}\ns = {s}\n")
    assert cfg.regime_tags == tags


@pytest.mark.parametrize(
    "text, field",
    [
        ("[cross_section]\ngamma = -3.5\n", "cross_section.gamma"),
        ("[cross_section]\ns = 1.0\n", "cross_section.s"),
        ("[grid]\nfoo = 1\n", "grid.foo"),
        ("[grid]\nn_points = 9\n", "grid.n_points"),
        ("[grid]\nn_points = many\n", "grid.n_points"),
        ("[extras]\nx = 1\n", "extras"),
        ("[time]\nscheme = leapfrog\n", "time.scheme"),
        ("[initial]\nbkw_shape = 0.5\n", "initial.bkw_shape"),
        ("[verify]\nwho = me\n", "verify.who"),
    ],
)
def test_schema_violations_name_the_field(text, field) -> None:
    with pytest.raises(ConfigError) as info:
        parse_config_text(text)
    assert info.value.field_path == field
    assert info.value.exit_code == 2
    assert info.value.to_dict()["field"] == field


def test_verify_parameters_are_kept_as_text() -> None:
    cfg = parse_config_text("[verify]\ninequality = interp-lq\np = 3\nq = 1.5\nlambda = 2\n")
    assert cfg.verify.inequality == "interp-lq"
    assert cfg.verify.parameters == {"p": "3", "q": "1.5", "lambda": "2"}


def test_mollifier_lambda_key() -> None:
    cfg = parse_config_text("[mollifier]\nlambda = 1.5\nn0 = none\n")
    assert cfg.mollifier.lam == 1.5
    assert cfg.mollifier.n0 is None


def test_hash_content_ignores_source(tmp_path, small_config_text) -> None:
    path = tmp_path / "run.ini"
    path.write_text(small_config_text, encoding="utf-8")
    from_file = parse_config(path)
    from_text = parse_config_text(small_config_text)
    assert from_file.source == str(path)
    assert from_file == from_text
    assert from_file.to_dict() == from_text.to_dict()


def test_missing_config_file(tmp_path) -> None:
    with pytest.raises(ConfigError, match="not found"):
        parse_config(tmp_path / "absent.ini")


def test_overrides(small_config_text) -> None:
    cfg = parse_config_text(small_config_text)
    changed = with_overrides(cfg, seed=11, deterministic=False, inequality="coercivity")
    assert changed.run.seed == 11
    assert changed.run.deterministic is False
    assert changed.verify.inequality == "coercivity"
    assert with_overrides(cfg) == cfg
    with pytest.raises(ConfigError):
        with_overrides(cfg, seed=-1)


def test_parse_orders() -> None:
    assert parse_orders("1:0, 2:1") == ((1.0, 0.0), (2.0, 1.0))
    assert parse_orders("") == ()
    with pytest.raises(ValueError, match="k:ell"):
        parse_orders("1")
