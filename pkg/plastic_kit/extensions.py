"""
Shared Extensions
"""
import logging
import sys

from plastic_kit.services.sequence_service import SeqEngine

LOG_FORMAT = '[%(name)s] %(message)s'

# Shared engine; each worker process gets its own copy
engine = SeqEngine()


class StderrHandler(logging.StreamHandler):
    """Stream handler bound to whatever sys.stderr is when a record is emitted."""

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def init_logging(config: dict) -> logging.Logger:
    """Attach one stderr handler to the package logger at the configured level."""
    logger = logging.getLogger('plastic_kit')
    level = str(config.get('LOG_LEVEL', 'WARNING')).upper()
    logger.setLevel(getattr(logging, level, logging.WARNING))

    if not any(isinstance(h, StderrHandler) for h in logger.handlers):
        handler = StderrHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    return logger
