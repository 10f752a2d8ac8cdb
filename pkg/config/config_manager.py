"""
Configuration manager for fpring-lab.
Provides a class-based interface to the YAML defaults with environment
overrides.
"""

import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from dotenv import load_dotenv
from ruamel.yaml import YAML

from algebra.caps import Caps
from .harness_config import HarnessConfig
from .logging_config import get_logger

logger = get_logger(__name__)

ENV_PREFIX = 'FPRINGS_'

# Environment variable suffix -> (config path, converter)
ENV_OVERRIDES = {
    'MAX_RING': (('caps', 'max_ring'), int),
    'MAX_MODULE': (('caps', 'max_module'), int),
    'KMAX': (('caps', 'kmax'), int),
    'SEED': (('harness', 'seed'), int),
    'JOBS': (('harness', 'jobs'), int),
    'FORMAT': (('output_format',), str),
    'LOG_DIR': (('log_dir',), str),
    'LOG_LEVEL': (('log_level',), str),
}


class ConfigError(Exception):
    """Invalid configuration file or override."""
    pass


class ConfigManager:
    """Manages configuration settings loaded from YAML files."""

    def __init__(self, config_file: Optional[str] = None, environ: Optional[Mapping[str, str]] = None,
                 dotenv: bool = True):
        """
        Initialize the configuration manager.

        Args:
            config_file: Optional path to a specific config file. If not provided,
                        config.yaml in the config directory is used.
            environ: Environment to read overrides from (defaults to os.environ).
            dotenv: If True, a .env file is loaded into the environment first.
        """
        if dotenv and environ is None:
            load_dotenv()
        self._config: Dict[str, Any] = {}
        self._load_config(config_file)
        self._apply_env(os.environ if environ is None else environ)
        logger.info("ConfigManager initialized successfully")

    def _load_config(self, config_file: Optional[str] = None) -> None:
        """Load configuration from YAML file."""
        if config_file is None:
            config_path = Path(__file__).parent / 'config.yaml'
        else:
            config_path = Path(config_file)

        logger.debug(f"Loading configuration from: {config_path}")
        if not config_path.exists():
            error_msg = f"config file not found at {config_path}"
            logger.error(error_msg)
            raise FileNotFoundError(error_msg)

        try:
            yaml = YAML(typ='safe')
            with open(config_path) as f:
                self._config = yaml.load(f) or {}
            logger.info(f"Configuration loaded successfully from {config_path}")
        except Exception as e:
            logger.error(f"Failed to load configuration from {config_path}: {e}", exc_info=True)
            raise ConfigError(f"cannot read {config_path}: {e}") from e
        if not isinstance(self._config, dict):
            raise ConfigError(f"{config_path} must contain a mapping at the top level")

    def _apply_env(self, environ: Mapping[str, str]) -> None:
        for suffix, (path, convert) in ENV_OVERRIDES.items():
            raw = environ.get(ENV_PREFIX + suffix)
            if raw is None or raw == '':
                continue
            try:
                value = convert(raw)
            except ValueError as e:
                raise ConfigError(f"{ENV_PREFIX}{suffix}={raw!r} is not a valid {convert.__name__}") from e
            section = self._config
            for key in path[:-1]:
                if not isinstance(section.get(key), dict):
                    section[key] = {}
                section = section[key]
            section[path[-1]] = value
            logger.debug(f"Override {'.'.join(path)} = {value!r} from {ENV_PREFIX}{suffix}")

    @property
    def caps(self) -> Caps:
        """Computation caps; unknown keys are rejected."""
        data = dict(self._config.get('caps', {}) or {})
        try:
            return Caps(**{k: int(v) for k, v in data.items()})
        except (TypeError, ValueError) as e:
            raise ConfigError(f"invalid caps section: {e}") from e

    @property
    def output_format(self) -> str:
        return self._config.get('output_format', 'table')

    @property
    def log_dir(self) -> str:
        return self._config.get('log_dir', 'logs')

    @property
    def log_level(self) -> str:
        return str(self._config.get('log_level', 'INFO')).upper()

    @property
    def harness(self) -> HarnessConfig:
        return HarnessConfig(self._config)

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value by key.

        Args:
            key: The configuration key to look up
            default: Default value to return if key is not found

        Returns:
            The configuration value or default if not found
        """
        return self._config.get(key, default)

    def as_dict(self) -> Dict[str, Any]:
        """
        Return the loaded configuration as a dictionary.
        """
        return self._config
