"""Configuration manager for heredimin."""

import copy
import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

# Constants
DEFAULT_CONFIG_DIR = "~/.heredimin"
CONFIG_DIR_ENV = "HEREDIMIN_CONFIG_DIR"
CONFIG_FILENAME = "config.json"
DEFAULT_CONFIG = {
    "validation": {
        "enumeration_cap": 16,
    },
    "reference": {
        "max_universe": 20,
    },
    "solver": {
        "default_adapter": "auto",
        "check_invariants": False,
    },
    "bench": {
        "sizes": [10, 20, 40, 80],
        "trials": 3,
    },
    "logging": {
        "level": "WARNING",
    },
}

# Environment variables that take precedence over the config file
ENV_OVERRIDES = {
    "HEREDIMIN_ENUMERATION_CAP": ("validation.enumeration_cap", int),
    "HEREDIMIN_LOG_LEVEL": ("logging.level", str),
}


def _merge_defaults(config: Dict[str, Any], defaults: Dict[str, Any]) -> Dict[str, Any]:
    """Fill keys missing from ``config`` with values from ``defaults``."""
    merged = copy.deepcopy(defaults)
    for key, value in config.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge_defaults(value, merged[key])
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """
    Manages configuration for heredimin.

    Settings live in a JSON file and are addressed with dot-notation keys
    such as "validation.enumeration_cap".
    """

    def __init__(self, config_dir: Optional[str] = None):
        """
        Initialize the configuration manager.

        Args:
            config_dir: Directory to store configuration files. Defaults to
                $HEREDIMIN_CONFIG_DIR, then ~/.heredimin
        """
        config_dir = config_dir or os.environ.get(CONFIG_DIR_ENV) or DEFAULT_CONFIG_DIR
        self.config_dir = Path(config_dir).expanduser()
        self.config_file = self.config_dir / CONFIG_FILENAME
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """
        Load configuration from the config file.

        If the file doesn't exist or is corrupted, it is (re)created with
        default values.

        Returns:
            The loaded configuration merged over the defaults
        """
        if not self.config_dir.exists():
            self.config_dir.mkdir(parents=True, exist_ok=True)

        if not self.config_file.exists():
            return self._save_config(copy.deepcopy(DEFAULT_CONFIG))

        try:
            with open(self.config_file, "r") as f:
                return _merge_defaults(json.load(f), DEFAULT_CONFIG)
        except json.JSONDecodeError:
            return self._save_config(copy.deepcopy(DEFAULT_CONFIG))

    def _save_config(self, config: Dict[str, Any]) -> Dict[str, Any]:
        with open(self.config_file, "w") as f:
            json.dump(config, f, indent=2)
        return config

    def get(self, key: Optional[str] = None, default: Any = None) -> Any:
        """
        Get a configuration value.

        Environment overrides win over the file for the keys listed in
        ENV_OVERRIDES.

        Args:
            key: Dot-notation key to retrieve (e.g., "reference.max_universe")
            default: Default value to return if key is not found

        Returns:
            The configuration value, the entire config if key is None,
            or default if the key is not found
        """
        if key is None:
            return self.config

        for env_var, (env_key, cast) in ENV_OVERRIDES.items():
            if env_key == key and os.environ.get(env_var):
                return cast(os.environ[env_var])

        parts = key.split(".")
        value = self.config

        for part in parts:
            if not isinstance(value, dict) or part not in value:
                return default
            value = value[part]

        return value

    def set(self, key: str, value: Any) -> None:
        """
        Set a configuration value and save to disk.

        Args:
            key: Dot-notation key to set
            value: Value to set
        """
        if not key:
            raise ValueError("Key cannot be empty")

        parts = key.split(".")
        config = self.config

        for part in parts[:-1]:
            if part not in config or not isinstance(config[part], dict):
                config[part] = {}
            config = config[part]

        config[parts[-1]] = value
        self._save_config(self.config)

    def unset(self, key: str) -> None:
        """
        Remove a configuration value and save to disk.

        Removing a key restores its default on the next load.
        """
        if not key:
            raise ValueError("Key cannot be empty")

        parts = key.split(".")
        config = self.config

        for part in parts[:-1]:
            if part not in config or not isinstance(config[part], dict):
                return
            config = config[part]

        if parts[-1] in config:
            del config[parts[-1]]

        self._save_config(self.config)

    def enumeration_cap(self) -> int:
        """Largest universe the property validators will enumerate."""
        return int(self.get("validation.enumeration_cap", 16))

    def reference_cap(self) -> int:
        """Largest universe the brute-force reference will enumerate."""
        return int(self.get("reference.max_universe", 20))

    def check_invariants(self) -> bool:
        return bool(self.get("solver.check_invariants", False))


# Singleton instance
_config_manager: Optional[ConfigManager] = None


def get_config() -> ConfigManager:
    """
    Get the global ConfigManager instance.

    Returns:
        ConfigManager singleton instance
    """
    global _config_manager
    if _config_manager is None:
        load_dotenv()
        _config_manager = ConfigManager()
    return _config_manager


def reset_config() -> None:
    """Drop the singleton so the next get_config() reloads from disk."""
    global _config_manager
    _config_manager = None
