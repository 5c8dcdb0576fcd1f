"""
Custom decorators
"""
import logging
from functools import wraps

import click

from plastic_kit.errors import PlasticKitError

logger = logging.getLogger(__name__)


def handle_errors(fn):
    """Decorator that turns harness errors into a stderr message and their exit code."""
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except PlasticKitError as e:
            logger.debug('%s: %s', type(e).__name__, e.to_dict())
            click.echo(f'Error: {e.message}', err=True)
            raise click.exceptions.Exit(e.exit_code)
    return wrapper
