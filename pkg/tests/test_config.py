# tests/test_config.py
"""
Tests for src/config.py
"""
from pathlib import Path

from src.config import DEFAULT_CORPUS_PATH, DEFAULT_CROSSING_CAP, Settings, get_settings


class TestGetSettings:
    def test_defaults(self, monkeypatch):
        for name in ("HOMFLY_CROSSING_CAP", "HOMFLY_MAX_WORKERS", "HOMFLY_SEED", "HOMFLY_CORPUS_PATH"):
            monkeypatch.delenv(name, raising=False)
        settings = get_settings()
        assert settings.crossing_cap == DEFAULT_CROSSING_CAP
        assert settings.seed == 0
        assert settings.corpus_path == DEFAULT_CORPUS_PATH
        assert DEFAULT_CORPUS_PATH.exists()

    def test_environment_values(self, monkeypatch, tmp_path):
        monkeypatch.setenv("HOMFLY_CROSSING_CAP", "9")
        monkeypatch.setenv("HOMFLY_MAX_WORKERS", "0")
        monkeypatch.setenv("HOMFLY_LOG_LEVEL", "debug")
        monkeypatch.setenv("HOMFLY_CORPUS_PATH", str(tmp_path / "c.csv"))
        settings = get_settings()
        assert settings.crossing_cap == 9
        assert settings.max_workers == 1
        assert settings.log_level == "DEBUG"
        assert settings.corpus_path == Path(tmp_path / "c.csv")

    def test_bad_integer_falls_back(self, monkeypatch):
        monkeypatch.setenv("HOMFLY_SEED", "many")
        assert get_settings().seed == 0

    def test_overrides_skip_none(self):
        settings = Settings().with_overrides(crossing_cap=5, seed=None)
        assert settings.crossing_cap == 5
        assert settings.seed == 0
