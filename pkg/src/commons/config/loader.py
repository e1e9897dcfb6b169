"""Config provider protocol and implementations. Extend by adding new providers."""

import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from commons.constants import Constants
from commons.errors import ConfigError

# Load .env so TRIADLAB_CONFIG can point at an alternative defaults file
try:
    from dotenv import load_dotenv
    _project_root = Path(__file__).resolve().parent.parent.parent.parent
    load_dotenv(_project_root / ".env")
except ImportError:
    pass

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent.parent / "config" / "config.yaml"


class ConfigProvider:
    """Protocol for config sources. Implement to add env, remote, etc."""

    def load(self) -> Dict[str, Any]:
        """Return the full config dict."""
        raise NotImplementedError


class YamlConfigProvider(ConfigProvider):
    """Load config from a YAML file."""

    def __init__(self, path: Optional[Path] = None):
        env_path = os.environ.get(Constants.CONFIG_ENV)
        self.path = Path(path) if path else (Path(env_path) if env_path else DEFAULT_CONFIG_PATH)

    def load(self) -> Dict[str, Any]:
        with open(self.path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f) or {}


class JsonConfigProvider(ConfigProvider):
    """Load a single JSON document (run configs)."""

    def __init__(self, path: Path | str):
        self.path = Path(path)

    def load(self) -> Dict[str, Any]:
        if not self.path.exists():
            raise ConfigError(f"Config file not found: {self.path}", path=str(self.path))
        try:
            with open(self.path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Config is not valid JSON: {e}", path=str(self.path)) from e
        if not isinstance(data, dict):
            raise ConfigError("Config must be a JSON object", path=str(self.path))
        return data


def get_config(provider: Optional[ConfigProvider] = None) -> Dict[str, Any]:
    """Get config from the given provider, or default YAML."""
    if provider is None:
        provider = YamlConfigProvider()
    return provider.load()


def section(cfg: Dict[str, Any], name: str) -> Dict[str, Any]:
    """Return a config section, empty dict when absent."""
    return cfg.get(name) or {}
