import pytest

from src.application.dtos.search_config import SearchConfig
from src.infrastructure.config.settings import Settings


def test_defaults(monkeypatch):
    for name in ["QMSTAB_SEED", "QMSTAB_MAX_SCALE", "QMSTAB_SAMPLES", "QMSTAB_DENOM_BOUND",
                 "QMSTAB_COVER_BOUND", "QMSTAB_MAX_WORKERS", "QMSTAB_LOG_LEVEL"]:
        monkeypatch.delenv(name, raising=False)
    settings = Settings.from_env()
    assert settings.search_config() == SearchConfig()
    assert settings.log_level == "WARNING"


def test_environment_and_overrides(monkeypatch):
    monkeypatch.setenv("QMSTAB_SEED", "5")
    monkeypatch.setenv("QMSTAB_SAMPLES", "32")
    cfg = Settings.from_env().search_config(samples_per_scale=None, max_scale=4, by_class=True)
    assert (cfg.seed, cfg.samples_per_scale, cfg.max_scale, cfg.by_class) == (5, 32, 4, True)


def test_malformed_variable(monkeypatch):
    monkeypatch.setenv("QMSTAB_SEED", "abc")
    with pytest.raises(ValueError, match="QMSTAB_SEED"):
        Settings.from_env()


@pytest.mark.parametrize("kwargs", [
    {"samples_per_scale": 0},
    {"max_scale": -1},
    {"denom_bound": 0},
    {"max_scale": 60, "denom_bound": 256},
])
def test_search_config_validation(kwargs):
    with pytest.raises(ValueError):
        SearchConfig(**kwargs)
