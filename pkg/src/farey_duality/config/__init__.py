"""Configuration management module."""

from .logs import setup_logging
from .manager import AppConfig, ConfigManager, default_config_dir

__all__ = ["AppConfig", "ConfigManager", "default_config_dir", "setup_logging"]
