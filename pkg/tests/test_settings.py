import os

import pytest
import yaml
from pydantic import ValidationError

from config.settings import Settings, load_settings


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("EXLINES_THREADS", "EXLINES_LOG_LEVEL", "EXLINES_LOG_FILE"):
        monkeypatch.delenv(name, raising=False)


def test_flag_wins_over_environment(monkeypatch):
    monkeypatch.setenv("EXLINES_THREADS", "2")
    assert Settings().resolve_threads(3) == 3


def test_environment_wins_over_yaml(monkeypatch):
    monkeypatch.setenv("EXLINES_THREADS", "2")
    assert Settings.model_validate({"runtime": {"threads": 5}}).resolve_threads() == 2


def test_zero_threads_means_every_core():
    assert Settings().resolve_threads(0) == (os.cpu_count() or 1)


def test_negative_threads():
    with pytest.raises(ValueError):
        Settings().resolve_threads(-1)


def test_load_settings_from_yaml(tmp_path):
    path = tmp_path / "settings.yml"
    path.write_text(yaml.safe_dump({"runtime": {"threads": 4}, "models": {"theta_index": 3}}), encoding="utf-8")
    settings = load_settings(str(path))
    assert settings.runtime.threads == 4
    assert settings.models.theta_index == 3
    assert settings.octonion.composition_samples == 1000


def test_environment_overrides_logging(tmp_path, monkeypatch):
    monkeypatch.setenv("EXLINES_LOG_LEVEL", "debug")
    monkeypatch.setenv("EXLINES_LOG_FILE", "")
    settings = load_settings(str(tmp_path / "missing.yml"))
    assert settings.logging.level == "DEBUG"
    assert settings.logging.file is None


def test_theta_index_is_validated(tmp_path):
    path = tmp_path / "settings.yml"
    path.write_text("models:\n  theta_index: 16\n", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_settings(str(path))


def test_shipped_settings_load():
    settings = load_settings()
    assert settings.reports.timings is False
    assert settings.runtime.jacobi_chunk_size >= 1
