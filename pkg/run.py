"""
plastic-kit Entry Point
"""
import os

from plastic_kit import create_cli
from plastic_kit.config import DevelopmentConfig, ProductionConfig

# Determine environment
env = os.getenv('PLASTIC_KIT_ENV', 'production')

if env == 'development':
    config = DevelopmentConfig
else:
    config = ProductionConfig

cli = create_cli(config)

if __name__ == '__main__':
    cli(prog_name='plastic-kit')
