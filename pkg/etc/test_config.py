#!/usr/bin/env python3
"""
설정 관리자 테스트
"""

import json
import logging

import yaml

from config.config_manager import BUDGET_ENV_VAR, ConfigManager, create_default_config_file


def test_defaults_are_valid():
    config = ConfigManager()
    assert config.validate_config() == {}
    assert config.enumeration_config.point_budget == 10 ** 6
    assert config.output_config.format == "csv"


def test_yaml_round_trip(tmp_path):
    path = tmp_path / "config.yaml"
    config = ConfigManager()
    config.update_config("enumeration", point_budget=1234)
    config.update_config("verify", suites=["roots", "weyl"])
    assert config.save_config(str(path))

    data = yaml.safe_load(path.read_text(encoding="utf-8"))
    assert data["enumeration"]["point_budget"] == 1234
    assert "_metadata" in data

    loaded = ConfigManager(str(path))
    assert loaded.enumeration_config.point_budget == 1234
    assert loaded.verify_config.suites == ["roots", "weyl"]


def test_json_partial_sections(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"output": {"format": "json"}}), encoding="utf-8")
    config = ConfigManager(str(path))
    assert config.output_config.format == "json"
    assert config.output_config.json_indent == 2
    assert config.enumeration_config.root_cap == 240


def test_unsupported_extension(tmp_path):
    path = tmp_path / "config.toml"
    path.write_text("x = 1", encoding="utf-8")
    assert not ConfigManager().load_config(str(path))


def test_validation_errors():
    config = ConfigManager()
    config.update_config("enumeration", point_budget=0)
    config.update_config("output", format="xml")
    config.update_config("logging", level="LOUD")
    errors = config.validate_config()
    assert set(errors) == {"enumeration", "output", "logging"}


def test_unknown_section():
    config = ConfigManager()
    try:
        config.update_config("web", port=1)
    except ValueError as e:
        assert "web" in str(e)
    else:
        raise AssertionError("unknown section was accepted")


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV_VAR, "77")
    assert ConfigManager().enumeration_config.point_budget == 77


def test_non_integer_env_is_ignored(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV_VAR, "lots")
    assert ConfigManager().enumeration_config.point_budget == 10 ** 6


def test_profiles_do_not_share_state():
    base = ConfigManager()
    presets = base.get_profile_presets()
    quick = base.create_profile("quick", **presets["quick"])
    assert quick.enumeration_config.point_budget == 10 ** 4
    assert quick.verify_config.suites == ["arith", "roots", "weyl", "tits"]
    assert base.enumeration_config.point_budget == 10 ** 6
    assert base.verify_config.suites == []


def test_parse_size():
    config = ConfigManager()
    assert config._parse_size("10MB") == 10 * 1024 ** 2
    assert config._parse_size("512") == 512


def test_setup_logging_level():
    config = ConfigManager()
    config.update_config("logging", console=False)
    config.setup_logging("DEBUG")
    assert logging.getLogger().level == logging.DEBUG
    config.setup_logging()
    assert logging.getLogger().level == logging.WARNING


def test_create_default_file(tmp_path, capsys):
    path = tmp_path / "nested" / "config.yaml"
    assert create_default_config_file(str(path))
    assert path.exists()
    assert "created" in capsys.readouterr().out
