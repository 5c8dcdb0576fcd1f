"""
python -m plastic_kit
"""
import os

from plastic_kit import create_cli
from plastic_kit.config import config_by_name

cli = create_cli(config_by_name.get(os.getenv('PLASTIC_KIT_ENV', 'production'), config_by_name['production']))

if __name__ == '__main__':
    cli(prog_name='plastic-kit')
