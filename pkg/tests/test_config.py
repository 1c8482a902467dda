import io
import json

import pytest

from src.utils.config import DEFAULT_CAP, ConfigManager
from src.utils.logger import Logger


def test_cap_precedence(tmp_path, monkeypatch):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"ENUMERATION_CAP": 8}))
    monkeypatch.delenv("INSTKIT_CAP", raising=False)
    config = ConfigManager(path)
    assert config.resolve_cap(None) == 8
    monkeypatch.setenv("INSTKIT_CAP", "5")
    assert config.resolve_cap(None) == 5
    assert config.resolve_cap(3) == 3


def test_defaults_without_a_config_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("INSTKIT_CAP", raising=False)
    config = ConfigManager()
    assert config.enumeration_cap == DEFAULT_CAP
    assert config.log_file is None
    assert config.report_format == "text"


def test_bad_cap_variable(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("INSTKIT_CAP", "many")
    with pytest.raises(ValueError):
        ConfigManager().enumeration_cap


def test_missing_config_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        ConfigManager(tmp_path / "absent.json")


def test_logger_stream_and_file(tmp_path):
    stream = io.StringIO()
    logger = Logger(tmp_path / "logs" / "run.log", stream=stream)
    logger.bound("cap reached")
    assert "⛔ cap reached" in stream.getvalue()
    assert "cap reached" in (tmp_path / "logs" / "run.log").read_text(encoding="utf-8")


def test_quiet_logger_still_writes_the_file(tmp_path):
    stream = io.StringIO()
    logger = Logger(tmp_path / "run.log", stream=stream, quiet=True)
    logger.check("closure laws: 4 cases")
    assert stream.getvalue() == ""
    assert "closure laws" in (tmp_path / "run.log").read_text(encoding="utf-8")


def test_log_file_is_anchored_at_the_config_directory(tmp_path, monkeypatch):
    config_dir = tmp_path / "config"
    config_dir.mkdir()
    path = config_dir / "config.json"
    path.write_text(json.dumps({"LOG_FILE": "logs/run.log"}))
    monkeypatch.chdir(tmp_path)
    assert ConfigManager(path).log_file == config_dir.resolve() / "logs" / "run.log"
    monkeypatch.chdir(config_dir)
    assert ConfigManager(path.resolve()).log_file == config_dir.resolve() / "logs" / "run.log"


def test_absolute_log_file_is_kept(tmp_path):
    path = tmp_path / "config.json"
    target = tmp_path / "elsewhere" / "run.log"
    path.write_text(json.dumps({"LOG_FILE": str(target)}))
    assert ConfigManager(path).log_file == target
