"""
Tests for configuration loading and logging setup
"""
import json
import logging

import pytest

from src.config import (
    ConfigManager,
    FermionConfig,
    config_manager,
    get_config,
    reload_config,
    setup_logging,
)


class TestConfigManager:
    """Layered configuration"""

    def test_defaults(self, tmp_path):
        """Test dataclass defaults when no file exists"""
        manager = ConfigManager(str(tmp_path / "missing.json"))
        config = manager.get_config()
        assert isinstance(config, FermionConfig)
        assert config.compute.default_variable == "t"
        assert config.suite.default_max_weight == 7
        assert config.output.variable_names == {"p": "p", "rc": "q", "stat": "q"}

    def test_file_values(self, tmp_path):
        """Test that file values replace defaults and unknown keys are ignored"""
        path = tmp_path / "fermion.json"
        path.write_text(json.dumps({"suite": {"max_parts": 2, "bogus": 1}, "extra": {}}))
        config = ConfigManager(str(path)).get_config()
        assert config.suite.max_parts == 2
        assert not hasattr(config.suite, "bogus")

    def test_broken_file_falls_back(self, tmp_path):
        """Test that unreadable JSON keeps the defaults"""
        path = tmp_path / "fermion.json"
        path.write_text("{not json")
        assert ConfigManager(str(path)).get_config().compute.jobs == 1

    def test_environment_overrides(self, monkeypatch, tmp_path):
        """Test FERMION_ variables with nested keys"""
        monkeypatch.setenv("FERMION_SUITE__MAX_PARTS", "7")
        monkeypatch.setenv("FERMION_COMPUTE__CHECK_SUPERNOMIAL", "false")
        monkeypatch.setenv("FERMION_OUTPUT__VARIABLE_NAMES", '{"p": "P", "rc": "q", "stat": "x"}')
        config = ConfigManager(str(tmp_path / "missing.json")).get_config()
        assert config.suite.max_parts == 7
        assert config.compute.check_supernomial is False
        assert config.output.variable_names["stat"] == "x"

    def test_parse_value(self):
        """Test conversion of environment strings"""
        manager = config_manager
        assert manager._parse_value("TRUE") is True
        assert manager._parse_value("12") == 12
        assert manager._parse_value("0.5") == 0.5
        assert manager._parse_value("[1, 2]") == [1, 2]
        assert manager._parse_value("text") == "text"

    def test_update_config(self):
        """Test section updates and the unknown-section error"""
        config_manager.update_config("compute", jobs=3, default_variable=None)
        assert get_config().compute.jobs == 3
        assert get_config().compute.default_variable == "t"
        with pytest.raises(KeyError):
            config_manager.update_config("network", timeout=1)

    def test_reload_switches_file(self, tmp_path):
        """Test that reload_config reads a new file and drops earlier updates"""
        config_manager.update_config("compute", jobs=3)
        target = tmp_path / "fermion.json"
        target.write_text(json.dumps({"output": {"output_dir": "reports"}}))
        reload_config(str(target))
        assert get_config().output.output_dir == "reports"
        assert get_config().compute.jobs == 1


class TestLogging:
    """Logging setup"""

    def test_dict_config(self, tmp_path, monkeypatch):
        """Test that the shipped dictConfig is applied with the level override"""
        monkeypatch.chdir(tmp_path)
        source = config_manager.config_file.replace("fermion.json", "logging_config.json")
        setup_logging("DEBUG", source)
        assert logging.getLogger().level == logging.DEBUG
        assert (tmp_path / "logs").is_dir()

    def test_missing_file_uses_basic_config(self, tmp_path):
        """Test the basicConfig fallback"""
        setup_logging("INFO", str(tmp_path / "absent.json"))
        assert logging.getLogger().handlers
