"""Configuration manager for storing and retrieving default settings."""

import json
import logging
import os
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from ..models.trees import OutputFormat

logger = logging.getLogger(__name__)

CONFIG_DIR_ENV = "FAREY_DUALITY_CONFIG_DIR"


def default_config_dir() -> Path:
    """Directory holding config.json and the log file."""
    override = os.environ.get(CONFIG_DIR_ENV)
    if override:
        return Path(override)
    return Path.home() / ".config" / "farey-duality"


class AppConfig(BaseModel):
    """Defaults for every command-line knob."""

    tree_depth: int = Field(default=3, ge=0, description="Depth for tree dumps")
    tree_format: OutputFormat = Field(default=OutputFormat.TEXT, description="Tree dump format")
    cluster_depth: int = Field(
        default=12, ge=0, description="Depth for main1, main2, maximality, forms and farey suites"
    )
    word_depth: int = Field(default=10, ge=0, description="Depth for christoffel and cohn suites")
    int_inc_bound: int = Field(default=50, ge=1, description="Bound on p + q for int-inc")
    det_bound: int = Field(default=20, ge=1, description="Bound on numerators for det")
    closure_bound: int = Field(default=40, ge=2, description="Maximum word length for closure")
    paths_bound: int = Field(default=60, ge=1, description="Bound on x + y for paths")
    locate_bound: int = Field(default=30, ge=2, description="Bound on p + q for locate")
    samples: int = Field(default=200, ge=1, description="Random flip words for duality")
    max_word_length: int = Field(default=20, ge=0, description="Longest random flip word")
    seed: int = Field(default=0, description="Seed for random sampling")
    max_den: int = Field(default=1000, ge=1, description="Denominator bound for approx")
    log_level: str = Field(default="WARNING", description="Logging level name")

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level: {value}")
        return level


class ConfigManager:
    """Manages configuration persistence."""

    def __init__(self, config_dir: Optional[Path] = None) -> None:
        """Initialize the configuration manager.

        Args:
            config_dir: Directory to store configuration files. Defaults to
                ~/.config/farey-duality, or $FAREY_DUALITY_CONFIG_DIR when set
        """
        if config_dir is None:
            config_dir = default_config_dir()

        self.config_dir = config_dir
        self.config_file = self.config_dir / "config.json"
        self._ensure_config_dir()

    def _ensure_config_dir(self) -> None:
        """Ensure the configuration directory exists."""
        self.config_dir.mkdir(parents=True, exist_ok=True)

    def load(self) -> AppConfig:
        """Load configuration from disk.

        Returns:
            AppConfig with loaded settings, or defaults if the file is missing or corrupted
        """
        if not self.config_file.exists():
            return AppConfig()

        try:
            with open(self.config_file) as f:
                data = json.load(f)
            return AppConfig(**data)
        except (json.JSONDecodeError, TypeError, ValidationError) as e:
            logger.warning(f"Ignoring unreadable config {self.config_file}: {e}")
            return AppConfig()

    def save(self, config: AppConfig) -> None:
        """Save configuration to disk.

        Args:
            config: AppConfig to save
        """
        self._ensure_config_dir()

        with open(self.config_file, "w") as f:
            json.dump(config.model_dump(mode="json"), f, indent=2)

    def update(self, **kwargs: Any) -> AppConfig:
        """Update configuration with new values and save.

        Args:
            **kwargs: Configuration fields to update

        Returns:
            Updated AppConfig
        """
        config = self.load()
        updated_data = config.model_dump()
        updated_data.update(kwargs)
        updated_config = AppConfig(**updated_data)
        self.save(updated_config)
        return updated_config

    def clear(self) -> None:
        """Remove the saved configuration."""
        if self.config_file.exists():
            self.config_file.unlink()
