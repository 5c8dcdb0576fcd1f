"""
Tests for configuration loading
"""
import json
import logging

import pytest

from plastic_kit.config import Config, DevelopmentConfig, TestingConfig, config_by_name, load_config
from plastic_kit.errors import ConfigError
from plastic_kit.extensions import StderrHandler, init_logging


def test_defaults():
    settings = load_config(Config, config_path=None)
    assert settings['POINT_CAP'] >= 1
    assert settings['GRIDS'] == {}
    assert settings['CHUNK_SIZE'] > 0


def test_testing_config_shrinks_grids(config):
    assert config['GRID_SCALE'] == 'small'
    assert config['TESTING'] is True


def test_config_by_name():
    assert config_by_name['development'] is DevelopmentConfig
    assert config_by_name['testing'] is TestingConfig


def test_file_overrides(tmp_path):
    path = tmp_path / 'harness.json'
    path.write_text(json.dumps({'point_cap': 500, 'jobs': 3, 'grids': {'neg-index-*': 'n=0..3'}}))
    settings = load_config(TestingConfig, str(path))
    assert settings['POINT_CAP'] == 500
    assert settings['DEFAULT_JOBS'] == 3
    assert settings['GRIDS'] == {'neg-index-*': 'n=0..3'}
    assert settings['CONFIG_FILE'] == str(path)


def test_file_does_not_leak_into_class(tmp_path):
    path = tmp_path / 'harness.json'
    path.write_text(json.dumps({'grids': {'*': 'n=0..1'}}))
    load_config(TestingConfig, str(path))
    assert TestingConfig.GRIDS == {}


@pytest.mark.parametrize('content', [
    '{not json',
    '[1, 2]',
    '{"point_cap": "many"}',
    '{"grids": {"neg-index-P": 5}}',
    '{"grids": ["n=0..3"]}',
])
def test_malformed_file(tmp_path, content):
    path = tmp_path / 'harness.json'
    path.write_text(content)
    with pytest.raises(ConfigError):
        load_config(TestingConfig, str(path))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(TestingConfig, str(tmp_path / 'absent.json'))


def test_init_logging_is_idempotent():
    logger = init_logging({'LOG_LEVEL': 'debug'})
    init_logging({'LOG_LEVEL': 'INFO'})
    assert sum(isinstance(h, StderrHandler) for h in logger.handlers) == 1
    assert logger.level == logging.INFO
