"""
Shared fixtures
"""
import pytest
from click.testing import CliRunner

from plastic_kit import create_cli
from plastic_kit.config import TestingConfig, load_config
from plastic_kit.services.sequence_service import SeqEngine

# n = -7..12
PADOVAN_TABLE = [1, -1, 1, 0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21]
PERRIN_TABLE = [-1, -2, 4, -3, 2, 1, -1, 3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17, 22, 29]
TABLE_RANGE = range(-7, 13)


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: runs the catalog on its default grids')


@pytest.fixture
def engine():
    """A fresh engine with an empty memo beyond the seeds."""
    return SeqEngine()


@pytest.fixture
def config():
    return load_config(TestingConfig)


@pytest.fixture
def cli():
    return create_cli(TestingConfig)


@pytest.fixture
def runner():
    return CliRunner()
