import os
from unittest.mock import patch

import pytest
from dotenv import dotenv_values

from permlab.cli.consts import (
    DEFAULT_BUDGET_TERMS,
    DEFAULT_COEFF_MAX_COLS,
    DEFAULT_MAX_WORKERS,
    DEFAULT_STAT_MAX_DIM,
    EnvKeys,
)
from permlab.cli.utils import ConfigManager
from permlab.exceptions import ConfigError

_KEYS = [key.value for key in EnvKeys]


@pytest.fixture
def clean_env():
    """Drop every permlab key from the environment for the test's duration."""
    with patch.dict(os.environ, {}, clear=False):
        for key in _KEYS:
            os.environ.pop(key, None)
        yield


@pytest.fixture
def manager(tmp_path, clean_env):
    return ConfigManager(config_path=str(tmp_path / ".permlab.env"))


class TestDefaults:
    """Unset keys fall back to the defaults."""

    def test_budget_terms(self, manager):
        assert manager.get_budget_terms() == DEFAULT_BUDGET_TERMS

    def test_stat_max_dim(self, manager):
        assert manager.get_stat_max_dim() == DEFAULT_STAT_MAX_DIM

    def test_coeff_max_cols(self, manager):
        assert manager.get_coeff_max_cols() == DEFAULT_COEFF_MAX_COLS

    def test_max_workers(self, manager):
        assert manager.get_max_workers() == DEFAULT_MAX_WORKERS


class TestOverrides:
    """Environment and dotenv values."""

    def test_environment_value(self, manager):
        os.environ[EnvKeys.BUDGET_TERMS.value] = "500"
        assert manager.get_budget_terms() == 500

    def test_underscores_allowed(self, manager):
        os.environ[EnvKeys.MAX_WORKERS.value] = "1_000"
        assert manager.get_max_workers() == 1000

    def test_blank_value_uses_default(self, manager):
        os.environ[EnvKeys.STAT_MAX_DIM.value] = "   "
        assert manager.get_stat_max_dim() == DEFAULT_STAT_MAX_DIM

    def test_dotenv_file_value(self, manager):
        with open(manager.config_path, "w") as f:
            f.write("PERMLAB_COEFF_MAX_COLS=9\n")
        assert manager.get_coeff_max_cols() == 9

    def test_environment_beats_dotenv_file(self, manager):
        with open(manager.config_path, "w") as f:
            f.write("PERMLAB_MAX_WORKERS=9\n")
        os.environ[EnvKeys.MAX_WORKERS.value] = "2"
        assert manager.get_max_workers() == 2

    @pytest.mark.parametrize("raw", ["abc", "1.5", "0", "-4"])
    def test_invalid_values_raise(self, manager, raw):
        os.environ[EnvKeys.BUDGET_TERMS.value] = raw
        with pytest.raises(ConfigError, match="PERMLAB_BUDGET_TERMS"):
            manager.get_budget_terms()


class TestWriteTemplate:
    """The commented dotenv template."""

    def test_writes_defaults(self, manager):
        path = manager.write_template()
        values = dotenv_values(path)
        assert values["PERMLAB_BUDGET_TERMS"] == str(DEFAULT_BUDGET_TERMS)
        assert values["PERMLAB_MAX_WORKERS"] == str(DEFAULT_MAX_WORKERS)
        assert values["LOG_LEVEL"] == "INFO"
        assert path.read_text().startswith("# ====")

    def test_preserves_existing_values(self, manager):
        with open(manager.config_path, "w") as f:
            f.write("PERMLAB_BUDGET_TERMS=500\nLOG_LEVEL=DEBUG\n")
        path = manager.write_template()
        values = dotenv_values(path)
        assert values["PERMLAB_BUDGET_TERMS"] == "500"
        assert values["LOG_LEVEL"] == "DEBUG"
        assert values["PERMLAB_STAT_MAX_DIM"] == str(DEFAULT_STAT_MAX_DIM)
