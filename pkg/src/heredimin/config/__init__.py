"""Configuration management for heredimin."""

from .manager import ConfigManager, get_config, reset_config

__all__ = ["ConfigManager", "get_config", "reset_config"]
