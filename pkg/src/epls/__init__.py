"""
epls - extremely primitive groups and linear spaces
Core initialization module
"""
import logging

from .core.config import Config

__version__ = '0.3.1'

_configured = False


def configure_logging(level=None):
    """Configure root logging once for command-line use."""
    global _configured
    if _configured:
        return
    logging.basicConfig(
        level=level or Config.LOG_LEVEL,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s'
    )
    _configured = True
    logging.getLogger(__name__).info("Logging configured")
