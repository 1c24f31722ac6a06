"""Tests for logging configuration."""

import logging

import pytest

from valspin.logging_conf import configure_logging


@pytest.fixture
def restore_root_handlers():
    """Put the root logger back the way the test found it."""
    root = logging.getLogger()
    saved_handlers = list(root.handlers)
    saved_level = root.level
    yield root
    for handler in list(root.handlers):
        if handler not in saved_handlers:
            root.removeHandler(handler)
            handler.close()
    for handler in saved_handlers:
        if handler not in root.handlers:
            root.addHandler(handler)
    root.setLevel(saved_level)


class TestConfigureLogging:
    """Tests for configure_logging."""

    def test_environment_levels_and_file(self, tmp_path, monkeypatch, restore_root_handlers):
        """Test that environment variables select levels and the log file."""
        monkeypatch.setenv("LOG_LEVEL_CONSOLE", "error")
        monkeypatch.setenv("LOG_LEVEL_FILE", "INFO")
        monkeypatch.setenv("LOG_DIR", str(tmp_path / "logs"))
        monkeypatch.setenv("LOG_FILE", "run.log")

        config = configure_logging(force_reconfigure=True)

        assert config["reconfigured"] is True
        assert config["console_level"] == "ERROR"
        assert config["file_level"] == "INFO"
        assert config["log_file"] == str(tmp_path / "logs" / "run.log")
        assert (tmp_path / "logs" / "run.log").exists()

    def test_arguments_override_environment(self, tmp_path, monkeypatch, restore_root_handlers):
        """Test that explicit arguments win over the environment."""
        monkeypatch.setenv("LOG_LEVEL_CONSOLE", "ERROR")
        config = configure_logging(
            console_level=logging.DEBUG, log_dir=str(tmp_path), force_reconfigure=True
        )
        assert config["console_level"] == "DEBUG"
        assert config["log_file"].endswith("valspin.log")

    def test_invalid_level_falls_back_to_default(self, tmp_path, monkeypatch, restore_root_handlers):
        """Test that an unknown level name is ignored."""
        monkeypatch.setenv("LOG_LEVEL_CONSOLE", "chatty")
        config = configure_logging(log_dir=str(tmp_path), force_reconfigure=True)
        assert config["console_level"] == "WARNING"

    def test_second_call_is_a_no_op(self, tmp_path, restore_root_handlers):
        """Test that configuration is idempotent without force_reconfigure."""
        configure_logging(log_dir=str(tmp_path), force_reconfigure=True)
        config = configure_logging(log_dir=str(tmp_path))
        assert config["reconfigured"] is False
