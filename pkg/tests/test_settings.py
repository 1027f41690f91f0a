from config.settings import Settings
from schemas.run_schemas import RunConfig


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("KPLEX_SPLIT_THRESHOLD", "3")
    monkeypatch.setenv("KPLEX_BACKEND", "process")
    loaded = Settings(_env_file=None)
    assert loaded.SPLIT_THRESHOLD == 3
    assert loaded.BACKEND == "process"
    assert loaded.DEFAULT_THREADS == 1


def test_run_config_defaults_and_floor():
    cfg = RunConfig(k=3)
    assert not cfg.large_mode
    assert cfg.emit_floor == 5
    large = RunConfig(k=3, l=9)
    assert large.large_mode
    assert large.emit_floor == 9
