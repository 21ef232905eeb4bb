import sys
from typing import Optional

from loguru import logger

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
)
RULE = "=" * 60


def setup_logger(level: str = "INFO", log_file: Optional[str] = None, serialize: bool = False):
    """Send logs to stderr, keeping stdout free for command output.

    ``serialize`` switches both sinks to loguru's JSON records. The optional
    file sink always records DEBUG, which includes elimination sizes and
    per-degree dimensions.
    """
    logger.remove()
    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=level.upper(), serialize=serialize)
    if log_file:
        logger.add(log_file, rotation="10 MB", retention="1 week", level="DEBUG", serialize=serialize)
    return logger


def log_section(title: str):
    logger.info(RULE)
    logger.info(title)
    logger.info(RULE)
