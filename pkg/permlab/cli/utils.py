"""Configuration management for permlab.

Provides the ``ConfigManager`` class that reads budgets and worker counts
from the environment and the ``.permlab.env`` file, and writes a commented
template for that file.
"""

import os
from pathlib import Path
from typing import Dict, Optional

from dotenv import dotenv_values, load_dotenv

from permlab.cli.consts import (
    DEFAULT_BUDGET_TERMS,
    DEFAULT_COEFF_MAX_COLS,
    DEFAULT_ENV_PATH,
    DEFAULT_MAX_WORKERS,
    DEFAULT_STAT_MAX_DIM,
    EnvKeys,
)
from permlab.exceptions import ConfigError
from permlab.logging import get_logger

__all__ = ["DEFAULT_ENV_PATH", "ConfigManager", "config_manager"]

logger = get_logger(__name__)

_TEMPLATE = """# =============================================================================
# PERMLAB CONFIGURATION FILE
# =============================================================================
# Values set in the real environment take precedence over this file.
# =============================================================================

# Largest number of terms an exact permanent may sum (naive or Ryser)
PERMLAB_BUDGET_TERMS={budget_terms}
# Largest N and n for third and fourth order statistics
PERMLAB_STAT_MAX_DIM={stat_max_dim}
# Largest n for the G_m subset coefficient table
PERMLAB_COEFF_MAX_COLS={coeff_max_cols}
# Worker threads used by trial loops
PERMLAB_MAX_WORKERS={max_workers}

# DEBUG, INFO, WARNING, ERROR, CRITICAL
LOG_LEVEL={log_level}
"""


class ConfigManager:
    """Typed access to permlab settings.

    Settings are read from the process environment first and from the
    dotenv file second; the file never overrides a real variable.
    """

    def __init__(self, config_path: str = DEFAULT_ENV_PATH):
        """Initialize the configuration manager.

        Args:
            config_path: Filesystem path to the dotenv file. Defaults to
                ``DEFAULT_ENV_PATH``.
        """
        self.config_path = config_path

    def _config_exists(self) -> bool:
        return Path(self.config_path).exists()

    def _raw_value(self, key: EnvKeys) -> Optional[str]:
        if self._config_exists():
            load_dotenv(dotenv_path=self.config_path, override=False)
        value = os.getenv(key.value)
        if value is None or not value.strip():
            return None
        return value.strip()

    def get_positive_int(self, key: EnvKeys, default: int) -> int:
        """Read a positive integer setting.

        Args:
            key: The ``EnvKeys`` member to read.
            default: Value used when the key is unset or empty.

        Returns:
            The configured value, or ``default``.

        Raises:
            ConfigError: If the value is not a positive integer.
        """
        raw = self._raw_value(key)
        if raw is None:
            return default
        try:
            value = int(raw.replace("_", ""))
        except ValueError as e:
            raise ConfigError(f"{key.value} must be an integer, got {raw!r}") from e
        if value < 1:
            raise ConfigError(f"{key.value} must be positive, got {value}")
        return value

    def get_budget_terms(self) -> int:
        return self.get_positive_int(EnvKeys.BUDGET_TERMS, DEFAULT_BUDGET_TERMS)

    def get_stat_max_dim(self) -> int:
        return self.get_positive_int(EnvKeys.STAT_MAX_DIM, DEFAULT_STAT_MAX_DIM)

    def get_coeff_max_cols(self) -> int:
        return self.get_positive_int(EnvKeys.COEFF_MAX_COLS, DEFAULT_COEFF_MAX_COLS)

    def get_max_workers(self) -> int:
        return self.get_positive_int(EnvKeys.MAX_WORKERS, DEFAULT_MAX_WORKERS)

    def write_template(self) -> Path:
        """Write the commented dotenv template, preserving values already in the file.

        Returns:
            The path that was written.
        """
        existing: Dict[str, Optional[str]] = {}
        if self._config_exists():
            existing = dict(dotenv_values(self.config_path))

        def keep(key: EnvKeys, default: str) -> str:
            value = existing.get(key.value)
            return value if value else default

        content = _TEMPLATE.format(
            budget_terms=keep(EnvKeys.BUDGET_TERMS, str(DEFAULT_BUDGET_TERMS)),
            stat_max_dim=keep(EnvKeys.STAT_MAX_DIM, str(DEFAULT_STAT_MAX_DIM)),
            coeff_max_cols=keep(EnvKeys.COEFF_MAX_COLS, str(DEFAULT_COEFF_MAX_COLS)),
            max_workers=keep(EnvKeys.MAX_WORKERS, str(DEFAULT_MAX_WORKERS)),
            log_level=keep(EnvKeys.LOG_LEVEL, "INFO"),
        )
        path = Path(self.config_path)
        with open(path, "w", encoding="utf-8") as f:
            f.write(content)
        logger.info(f"Wrote configuration template to {path}")
        return path


#: Global ``ConfigManager`` instance using the default ``.permlab.env`` path.
config_manager = ConfigManager()
