"""Tests for commons.config.loader."""

import json
import tempfile
from pathlib import Path

import pytest
import yaml

from commons.config.loader import JsonConfigProvider, YamlConfigProvider, get_config, section
from commons.errors import ConfigError


def test_yaml_config_provider_loads_file():
    with tempfile.NamedTemporaryFile(
        suffix=".yaml", delete=False, mode="w", encoding="utf-8"
    ) as f:
        yaml.dump({"foo": "bar", "nested": {"a": 1}}, f)
        path = Path(f.name)
    try:
        provider = YamlConfigProvider(path=path)
        cfg = provider.load()
        assert cfg["foo"] == "bar"
        assert cfg["nested"]["a"] == 1
    finally:
        path.unlink(missing_ok=True)


def test_yaml_config_provider_default_path_exists():
    """Default path points to src/config/config.yaml from loader's perspective."""
    cfg = YamlConfigProvider().load()
    assert "integrator" in cfg
    assert "paths" in cfg
    assert cfg["integrator"]["rtol"] > 0


def test_yaml_config_provider_empty_file_is_empty_dict(tmp_path):
    f = tmp_path / "empty.yaml"
    f.write_text("", encoding="utf-8")
    assert YamlConfigProvider(path=f).load() == {}


def test_yaml_config_provider_env_override(tmp_path, monkeypatch):
    f = tmp_path / "alt.yaml"
    f.write_text(yaml.dump({"integrator": {"rtol": 1e-6}}), encoding="utf-8")
    monkeypatch.setenv("TRIADLAB_CONFIG", str(f))
    assert YamlConfigProvider().load()["integrator"]["rtol"] == 1e-6


def test_explicit_path_beats_env(tmp_path, monkeypatch):
    env_file = tmp_path / "env.yaml"
    env_file.write_text(yaml.dump({"which": "env"}), encoding="utf-8")
    explicit = tmp_path / "explicit.yaml"
    explicit.write_text(yaml.dump({"which": "explicit"}), encoding="utf-8")
    monkeypatch.setenv("TRIADLAB_CONFIG", str(env_file))
    assert YamlConfigProvider(path=explicit).load()["which"] == "explicit"


def test_get_config_uses_provider():
    with tempfile.NamedTemporaryFile(
        suffix=".yaml", delete=False, mode="w", encoding="utf-8"
    ) as f:
        yaml.dump({"custom": True}, f)
        path = Path(f.name)
    try:
        provider = YamlConfigProvider(path=path)
        cfg = get_config(provider=provider)
        assert cfg["custom"] is True
    finally:
        path.unlink(missing_ok=True)


def test_get_config_default_is_yaml():
    cfg = get_config()
    assert isinstance(cfg, dict)
    assert len(cfg) >= 1


def test_section_missing_is_empty():
    assert section({"a": {"x": 1}}, "a") == {"x": 1}
    assert section({"a": None}, "a") == {}
    assert section({}, "b") == {}


class TestJsonConfigProvider:
    def test_loads_object(self, tmp_path):
        f = tmp_path / "run.json"
        f.write_text(json.dumps({"system": "real"}), encoding="utf-8")
        assert JsonConfigProvider(f).load() == {"system": "real"}

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="not found"):
            JsonConfigProvider(tmp_path / "nope.json").load()

    def test_invalid_json(self, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text("{not json", encoding="utf-8")
        with pytest.raises(ConfigError, match="not valid JSON"):
            JsonConfigProvider(f).load()

    def test_non_object(self, tmp_path):
        f = tmp_path / "list.json"
        f.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(ConfigError, match="JSON object"):
            JsonConfigProvider(f).load()

    def test_config_error_maps_to_usage_exit_code(self, tmp_path):
        with pytest.raises(ConfigError) as info:
            JsonConfigProvider(tmp_path / "nope.json").load()
        assert info.value.exit_code == 2
