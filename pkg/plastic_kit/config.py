"""
Harness Configuration
"""
import json
import os
from pathlib import Path

from dotenv import load_dotenv

from plastic_kit.errors import ConfigError

load_dotenv()


class Config:
    """Base configuration."""

    CATALOG_VERSION = os.getenv('CATALOG_VERSION', '1.0')

    # Grids
    POINT_CAP = int(os.getenv('POINT_CAP', '1000000'))
    GRID_SCALE = os.getenv('GRID_SCALE', 'default')  # 'default' or 'small'
    GRIDS = {}  # id glob -> grid spec, merged over the catalog defaults

    # Runner
    DEFAULT_JOBS = int(os.getenv('DEFAULT_JOBS', '1'))
    CHUNK_SIZE = int(os.getenv('CHUNK_SIZE', '400'))

    # Zero-set window
    ZERO_WINDOW = (
        int(os.getenv('ZERO_WINDOW_LO', '-20')),
        int(os.getenv('ZERO_WINDOW_HI', '20')),
    )

    # Optional JSON file with point_cap and grids
    CONFIG_FILE = os.getenv('PLASTIC_KIT_CONFIG', '')

    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')


class DevelopmentConfig(Config):
    """Development configuration."""
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')


class ProductionConfig(Config):
    """Production configuration."""


class TestingConfig(Config):
    """Testing configuration."""
    TESTING = True
    GRID_SCALE = 'small'
    CONFIG_FILE = ''


config_by_name = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
}


def load_config(config_class=Config, config_path: str = None) -> dict:
    """
    Collect uppercase settings from a config class, then apply the JSON file.

    The file may carry "point_cap", "jobs" and "grids" ({id glob: grid spec}).
    """
    settings = {key: getattr(config_class, key) for key in dir(config_class) if key.isupper()}
    settings['GRIDS'] = dict(settings.get('GRIDS') or {})

    path = config_path or settings.get('CONFIG_FILE')
    if not path:
        return settings

    try:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
    except OSError as e:
        raise ConfigError(f'Cannot read config file {path}: {e}') from e
    except json.JSONDecodeError as e:
        raise ConfigError(f'Config file {path} is not valid JSON: {e}') from e

    if not isinstance(data, dict):
        raise ConfigError(f'Config file {path} must hold a JSON object')

    try:
        if 'point_cap' in data:
            settings['POINT_CAP'] = int(data['point_cap'])
        if 'jobs' in data:
            settings['DEFAULT_JOBS'] = int(data['jobs'])
    except (TypeError, ValueError) as e:
        raise ConfigError(f'Config file {path}: {e}') from e

    grids = data.get('grids', {})
    if not isinstance(grids, dict) or not all(isinstance(v, str) for v in grids.values()):
        raise ConfigError(f'Config file {path}: "grids" must map id globs to grid specs')
    settings['GRIDS'].update(grids)
    settings['CONFIG_FILE'] = str(path)
    return settings
