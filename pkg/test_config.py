"""Tests for settings and run configuration loading"""

import pytest

from zdgraph_mcp.config.settings import RunConfig, Settings, load_run_config
from zdgraph_mcp.utils.errors import ConfigurationError


@pytest.fixture
def base(isolated_config):
    (isolated_config / "configs").mkdir()
    return Settings(_env_file=None, config_paths=[str(isolated_config / "configs")])


def test_settings_defaults(isolated_config, monkeypatch):
    for name in ("ZDGRAPH_VERTEX_CAP", "ZDGRAPH_TRANSPORT"):
        monkeypatch.delenv(name, raising=False)
    current = Settings(_env_file=None)
    assert current.server_name == "zdgraph-mcp"
    assert current.vertex_cap == 200
    assert current.transport == "stdio"


def test_settings_read_prefixed_environment(isolated_config, monkeypatch):
    monkeypatch.setenv("ZDGRAPH_VERTEX_CAP", "50")
    monkeypatch.setenv("ZDGRAPH_ORACLE_BUDGET_SECONDS", "2.5")
    current = Settings(_env_file=None)
    assert current.vertex_cap == 50
    config = load_run_config(base=current)
    assert config.cap == 50
    assert config.budget == 2.5


def test_defaults_without_file(base):
    assert load_run_config(base=base) == RunConfig()


def test_file_then_flags(base, isolated_config):
    path = isolated_config / "run.conf"
    path.write_text("ground=finite:3\nideal=all\ncap=80\nmutate=yes\n")
    config = load_run_config(path, {"cap": 10, "ideal": None}, base=base)
    assert config.ground == "finite:3"
    assert config.ideal == "all"
    assert config.cap == 10
    assert config.mutate is True


def test_named_config_in_search_path(base, isolated_config):
    (isolated_config / "configs" / "quick.conf").write_text("ideal=powerset:{0,1}\n")
    assert base.list_run_configs() == ["quick"]
    assert load_run_config("quick", base=base).ideal == "powerset:{0,1}"


def test_config_errors(base, isolated_config):
    with pytest.raises(ConfigurationError, match="not found"):
        load_run_config("missing", base=base)
    bad = isolated_config / "bad.conf"
    bad.write_text("ground=countable\ncolour=red\n")
    with pytest.raises(ConfigurationError, match="colour"):
        load_run_config(bad, base=base)
    with pytest.raises(ConfigurationError):
        load_run_config(overrides={"cap": "many"}, base=base)
    with pytest.raises(ConfigurationError):
        load_run_config(overrides={"mutate": "maybe"}, base=base)
    with pytest.raises(ConfigurationError):
        load_run_config(overrides={"verbose": True}, base=base)
