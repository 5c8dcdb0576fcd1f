"""
plastic-kit - Padovan and Perrin Identity Harness
"""
import logging

import click

from plastic_kit.config import Config, load_config
from plastic_kit.extensions import engine, init_logging
from plastic_kit.utils.decorators import handle_errors

__version__ = '1.0.0'

logger = logging.getLogger(__name__)

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR']


class Harness:
    """Resolved settings plus the shared sequence engine, handed to every command."""

    def __init__(self, config: dict):
        self.config = config
        self.engine = engine

    def __repr__(self):
        return f"<Harness scale={self.config.get('GRID_SCALE')} cap={self.config.get('POINT_CAP')}>"


def create_harness(config_class=Config, config_path: str = None, log_level: str = None) -> Harness:
    """Load configuration, apply overrides and initialize logging."""
    config = load_config(config_class, config_path)
    if log_level:
        config['LOG_LEVEL'] = log_level.upper()
    init_logging(config)
    logger.debug('Configuration loaded from %s', config.get('CONFIG_FILE') or 'environment')
    return Harness(config)


def create_cli(config_class=Config) -> click.Group:
    """Create the command-line group and register every command."""

    @click.group(context_settings={'help_option_names': ['-h', '--help']})
    @click.version_option(__version__, prog_name='plastic-kit')
    @click.option('--config', 'config_path', type=click.Path(dir_okay=False), default=None,
                  help='JSON file with point_cap, jobs and grids (overrides PLASTIC_KIT_CONFIG).')
    @click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None)
    @click.pass_context
    @handle_errors
    def cli(ctx, config_path, log_level):
        """Exact Padovan and Perrin arithmetic with an identity verification harness."""
        ctx.obj = create_harness(config_class, config_path, log_level)

    # Register commands
    from plastic_kit.cli import catalog, genfunc, sequences, verify

    for module in (sequences, catalog, verify, genfunc):
        for command in module.commands:
            cli.add_command(command)

    return cli
