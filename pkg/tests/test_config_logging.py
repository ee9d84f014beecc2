"""
Tests for settings loading and logging setup
"""
import json
import logging

import pytest
from pydantic import ValidationError

from app.config import Settings, get_settings
from app.observability import JsonLineFormatter, setup_logging
from app.version import get_version_info, get_version_string


class TestSettings:
    """CGA_VERMA_ environment variables"""

    def test_env_prefix(self, monkeypatch):
        """Test CGA_VERMA_THREADS and CGA_VERMA_DEFAULT_PMAX are read"""
        monkeypatch.setenv("CGA_VERMA_THREADS", "3")
        monkeypatch.setenv("CGA_VERMA_DEFAULT_PMAX", "8")
        settings = Settings()
        assert settings.threads == 3
        assert settings.default_pmax == 8

    def test_get_settings_is_cached(self):
        """Test get_settings returns one instance until the cache is cleared"""
        assert get_settings() is get_settings()

    def test_conftest_overrides(self):
        """Test the autouse fixture pins two threads"""
        assert get_settings().threads == 2

    def test_threads_must_be_positive(self, monkeypatch):
        """Test threads = 0 is rejected"""
        monkeypatch.setenv("CGA_VERMA_THREADS", "0")
        with pytest.raises(ValidationError):
            Settings()

    def test_log_format_validated(self, monkeypatch):
        """Test only text and json are accepted, case-insensitively"""
        monkeypatch.setenv("CGA_VERMA_LOG_FORMAT", "JSON")
        assert Settings().log_format == "json"
        monkeypatch.setenv("CGA_VERMA_LOG_FORMAT", "xml")
        with pytest.raises(ValidationError):
            Settings()

    def test_memo_toggle(self, monkeypatch):
        """Test CGA_VERMA_MEMO_ENABLED=false"""
        monkeypatch.setenv("CGA_VERMA_MEMO_ENABLED", "false")
        assert Settings().memo_enabled is False


class TestLogging:
    """setup_logging and the JSON formatter"""

    def test_json_formatter(self):
        """Test one JSON object with logger, level and message"""
        record = logging.LogRecord("app.verma.engine", logging.WARNING, __file__, 1, "cache %s", ("full",), None)
        payload = json.loads(JsonLineFormatter().format(record))
        assert payload['logger'] == "app.verma.engine"
        assert payload['level'] == "WARNING"
        assert payload['message'] == "cache full"
        assert 'time' in payload

    def test_no_handler_stacking(self):
        """Test repeated setup keeps a single console handler"""
        setup_logging('INFO', 'text')
        setup_logging('DEBUG', 'json')
        root = logging.getLogger()
        ours = [h for h in root.handlers if getattr(h, '_cga_verma', False)]
        assert len(ours) == 1
        assert isinstance(ours[0].formatter, JsonLineFormatter)
        assert root.level == logging.DEBUG
        setup_logging('WARNING', 'text')

    def test_rotating_file(self, tmp_path):
        """Test log_file adds a file handler that receives records"""
        target = tmp_path / "engine.log"
        setup_logging('INFO', 'text', str(target))
        logging.getLogger("app.test").info("written to file")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "written to file" in target.read_text(encoding='utf-8')
        setup_logging('WARNING', 'text')


class TestVersion:
    """Version info"""

    def test_version_info(self):
        """Test the report schema version and settings are exposed"""
        info = get_version_info()
        assert info['report_schema'] == 1
        assert info['engine']['threads'] == 2
        assert get_version_string() == info['version']
