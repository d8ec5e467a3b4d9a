import logging

__all__ = ['logger']

logger = logging.getLogger('gsslink')
logger.addHandler(logging.NullHandler())
