"""
Configuration Module

Manages configuration settings for the fermion-sums toolkit.
Includes computation limits, verification-suite bounds, output options
and logging setup, layered as defaults < config file < .env < environment.
"""

import os
import json
import logging
import logging.config
from pathlib import Path
from typing import Dict, Any, Optional
from dataclasses import dataclass, asdict

from dotenv import load_dotenv


@dataclass
class ComputeConfig:
    """Configuration for the computational core."""
    default_variable: str = "t"
    cache_size: int = 4096
    jobs: int = 1
    check_supernomial: bool = True


@dataclass
class SuiteConfig:
    """Bounds used by the verify and scan suites."""
    default_max_weight: int = 7
    max_parts: int = 4
    max_rectangles: int = 4
    max_area: int = 8
    brute_force_max_weight: int = 4


@dataclass
class OutputConfig:
    """Configuration for result rendering."""
    format: str = "text"
    variable_names: dict = None
    output_dir: Optional[str] = None

    def __post_init__(self):
        if self.variable_names is None:
            self.variable_names = {"p": "p", "rc": "q", "stat": "q"}


@dataclass
class LoggingConfig:
    """Configuration for diagnostics."""
    level: str = "WARNING"
    config_file: str = "config/logging_config.json"


@dataclass
class FermionConfig:
    """Main configuration for the toolkit."""
    compute: ComputeConfig = None
    suite: SuiteConfig = None
    output: OutputConfig = None
    logging: LoggingConfig = None

    def __post_init__(self):
        if self.compute is None:
            self.compute = ComputeConfig()
        if self.suite is None:
            self.suite = SuiteConfig()
        if self.output is None:
            self.output = OutputConfig()
        if self.logging is None:
            self.logging = LoggingConfig()


SECTIONS = ("compute", "suite", "output", "logging")


class ConfigManager:
    """
    Manages configuration loading and saving.
    """

    def __init__(self, config_file: Optional[str] = None, env_prefix: str = "FERMION_"):
        """
        Initialize the configuration manager.

        Args:
            config_file: Path to configuration file
            env_prefix: Prefix of environment variables that override file values
        """
        self.config_file = config_file or "config/fermion.json"
        self.env_prefix = env_prefix
        self.config = FermionConfig()
        self._load_config()

    def _load_config(self):
        """Load configuration from file and environment."""
        config_data: Dict[str, Any] = {}

        config_path = Path(self.config_file)
        if config_path.exists():
            try:
                with open(config_path, 'r') as f:
                    file_config = json.load(f)
                config_data.update(file_config)
            except (OSError, json.JSONDecodeError) as e:
                logging.getLogger(__name__).warning(
                    f"Could not load config file {self.config_file}: {e}"
                )

        load_dotenv(override=False)
        env_overrides = self._load_env_overrides()
        for section, values in env_overrides.items():
            if isinstance(values, dict) and isinstance(config_data.get(section), dict):
                config_data[section].update(values)
            else:
                config_data[section] = values

        if config_data:
            self._update_config_object(config_data)

    def _load_env_overrides(self) -> Dict[str, Any]:
        """Load configuration overrides from environment variables."""
        overrides: Dict[str, Any] = {}

        for key, value in os.environ.items():
            if key.startswith(self.env_prefix):
                config_key = key[len(self.env_prefix):].lower()
                # Nested keys use a double underscore
                if "__" in config_key:
                    parts = config_key.split("__")
                    overrides = self._set_nested_value(overrides, parts, self._parse_value(value))
                else:
                    overrides[config_key] = self._parse_value(value)

        return overrides

    def _parse_value(self, value: str) -> Any:
        """Parse a string value to appropriate type."""
        if value.lower() in ('true', 'false'):
            return value.lower() == 'true'

        try:
            if '.' in value:
                return float(value)
            return int(value)
        except ValueError:
            pass

        if value.startswith('{') or value.startswith('['):
            try:
                return json.loads(value)
            except json.JSONDecodeError:
                pass

        return value

    def _set_nested_value(self, data: Dict, parts: list, value: Any) -> Dict:
        """Set a nested value in a dictionary."""
        current = data
        for part in parts[:-1]:
            if part not in current:
                current[part] = {}
            current = current[part]
        current[parts[-1]] = value
        return data

    def _update_config_object(self, config_data: Dict[str, Any]):
        """Update the config object with loaded data."""
        for section in SECTIONS:
            values = config_data.get(section)
            if not isinstance(values, dict):
                continue
            target = getattr(self.config, section)
            for key, value in values.items():
                if hasattr(target, key):
                    setattr(target, key, value)

    def to_dict(self) -> Dict[str, Any]:
        """Return the configuration as plain nested dictionaries."""
        return {section: asdict(getattr(self.config, section)) for section in SECTIONS}

    def get_config(self) -> FermionConfig:
        """Get the current configuration."""
        return self.config

    def update_config(self, section: str, **kwargs):
        """
        Update values of one configuration section.

        Args:
            section: Section name (compute, suite, output, logging)
            **kwargs: Configuration values to update
        """
        target = getattr(self.config, section, None)
        if target is None:
            raise KeyError(f"Unknown configuration section: {section}")
        for key, value in kwargs.items():
            if value is not None and hasattr(target, key):
                setattr(target, key, value)


def setup_logging(level: Optional[str] = None, config_file: Optional[str] = None):
    """
    Configure logging from the dictConfig file, falling back to basicConfig.

    Args:
        level: Root level override (e.g. "DEBUG")
        config_file: Path to a logging dictConfig JSON file
    """
    settings = get_config().logging
    level = (level or settings.level).upper()
    config_path = Path(config_file or settings.config_file)

    if config_path.exists():
        try:
            with open(config_path, 'r') as f:
                log_config = json.load(f)
            for handler in log_config.get("handlers", {}).values():
                filename = handler.get("filename")
                if filename:
                    Path(filename).parent.mkdir(parents=True, exist_ok=True)
            log_config.setdefault("loggers", {}).setdefault("", {})["level"] = level
            logging.config.dictConfig(log_config)
            return
        except (OSError, ValueError, json.JSONDecodeError) as e:
            logging.basicConfig(level=level)
            logging.getLogger(__name__).warning(f"Falling back to basic logging: {e}")
            return

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


# Global configuration instance
config_manager = ConfigManager()


def get_config() -> FermionConfig:
    """Get the global configuration."""
    return config_manager.get_config()


def reload_config(config_file: Optional[str] = None):
    """Reload configuration from file and environment, optionally switching files."""
    if config_file:
        config_manager.config_file = config_file
    config_manager.config = FermionConfig()
    config_manager._load_config()
