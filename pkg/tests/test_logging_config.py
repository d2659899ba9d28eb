import logging
import os

import pytest

from neutrino_sta.config.settings import Settings
from neutrino_sta.utils.logging_config import get_logger, setup_logging


@pytest.fixture
def basic_config(monkeypatch):
    captured = {}
    monkeypatch.setattr(logging, 'basicConfig', lambda **kwargs: captured.update(kwargs))
    yield captured
    for handler in captured.get('handlers', []):
        handler.close()


def test_logs_to_file_by_default(basic_config, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    setup_logging('debug')
    assert Settings.LOG_FILE == 'neutrino_sta.log'
    assert basic_config['level'] == logging.DEBUG
    _, file_handler = basic_config['handlers']
    assert isinstance(file_handler, logging.FileHandler)
    assert file_handler.baseFilename == os.path.abspath('neutrino_sta.log')
    # the file is opened on the first record only
    assert not (tmp_path / 'neutrino_sta.log').exists()


def test_explicit_log_file(basic_config, tmp_path):
    target = tmp_path / 'run.log'
    setup_logging(log_file=str(target))
    assert basic_config['level'] == logging.INFO
    assert basic_config['handlers'][-1].baseFilename == str(target)


def test_get_logger_is_named():
    assert get_logger('neutrino_sta.cli').name == 'neutrino_sta.cli'
