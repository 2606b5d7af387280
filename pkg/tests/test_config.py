import json

from heredimin.config import ConfigManager, get_config, reset_config


def test_defaults_are_written(tmp_path):
    """Test that a fresh directory gets the default configuration file."""
    config = ConfigManager(str(tmp_path / "fresh"))
    assert config.config_file.exists()
    assert config.enumeration_cap() == 16
    assert config.reference_cap() == 20
    assert config.get("solver.default_adapter") == "auto"
    assert config.check_invariants() is False


def test_set_get_and_reload(tmp_path):
    config = ConfigManager(str(tmp_path))
    config.set("reference.max_universe", 12)
    config.set("bench.extra.depth", 2)
    assert ConfigManager(str(tmp_path)).reference_cap() == 12
    assert ConfigManager(str(tmp_path)).get("bench.extra.depth") == 2


def test_unset_restores_default(tmp_path):
    config = ConfigManager(str(tmp_path))
    config.set("validation.enumeration_cap", 8)
    config.unset("validation.enumeration_cap")
    assert config.get("validation.enumeration_cap") is None
    assert ConfigManager(str(tmp_path)).enumeration_cap() == 16
    # Missing sections are ignored.
    config.unset("nothing.here")


def test_missing_key_returns_default(tmp_path):
    config = ConfigManager(str(tmp_path))
    assert config.get("solver.unknown", "fallback") == "fallback"
    assert config.get("solver.default_adapter.deeper") is None


def test_corrupted_file_is_replaced(tmp_path):
    (tmp_path / "config.json").write_text("{not json")
    config = ConfigManager(str(tmp_path))
    assert config.enumeration_cap() == 16
    assert json.loads(config.config_file.read_text())["logging"]["level"] == "WARNING"


def test_partial_file_is_merged_with_defaults(tmp_path):
    (tmp_path / "config.json").write_text(json.dumps({"bench": {"trials": 7}}))
    config = ConfigManager(str(tmp_path))
    assert config.get("bench.trials") == 7
    assert config.get("bench.sizes") == [10, 20, 40, 80]


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("HEREDIMIN_ENUMERATION_CAP", "5")
    monkeypatch.setenv("HEREDIMIN_LOG_LEVEL", "DEBUG")
    reset_config()
    config = get_config()
    assert config.enumeration_cap() == 5
    assert config.get("logging.level") == "DEBUG"


def test_singleton_uses_config_dir():
    """The autouse fixture points HEREDIMIN_CONFIG_DIR at a scratch directory."""
    assert get_config() is get_config()
    assert get_config().config_dir.name == "heredimin-config"
