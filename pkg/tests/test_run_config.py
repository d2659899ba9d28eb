import json

import pytest

from neutrino_sta.config.run_config import RunConfig
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import ConfigError


def test_defaults(monkeypatch):
    monkeypatch.delenv(Settings.OUTPUT_DIR_ENV, raising=False)
    config = RunConfig.load()
    assert config.tolerance_abs == Settings.TOLERANCE_ABS
    assert config.seed == Settings.DEFAULT_SEED
    assert config.unit_prefactor == 1.0


def test_file_then_overrides(tmp_path, monkeypatch):
    monkeypatch.delenv(Settings.OUTPUT_DIR_ENV, raising=False)
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"seed": 7, "grid_count": 3, "unit_system": "gaussian-symbolic"}))
    config = RunConfig.load(str(path), seed=11, tolerance_abs=None)
    assert config.seed == 11
    assert config.grid_count == 3
    assert config.tolerance_abs == Settings.TOLERANCE_ABS
    assert config.unit_prefactor == pytest.approx(2.0 * 3.141592653589793)


def test_environment_overrides_output_dir(monkeypatch):
    monkeypatch.setenv(Settings.OUTPUT_DIR_ENV, "/tmp/elsewhere")
    assert RunConfig.load(output_dir="mine").output_dir == "/tmp/elsewhere"


def test_unknown_key_rejected(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"tolerance": 1e-3}))
    with pytest.raises(ConfigError):
        RunConfig.load(str(path))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        RunConfig.load(str(tmp_path / "absent.json"))


def test_invalid_override():
    with pytest.raises(ConfigError):
        RunConfig.load(tolerance_abs=-1.0)


def test_grid_step_follows_wavelength():
    config = RunConfig(wavelength=2.0, step_divisor=8, grid_count=2)
    grid = config.grid()
    assert grid.h == 0.25
    assert grid.counts == (2, 2, 2, 2)
    assert config.grid(3).size == 81
