"""
Logging configuration for homyd.

Diagnostics always go to stderr so that stdout carries only the
deterministic report text.
"""

import logging
import sys
from typing import Optional

from .colors import fg, rs

RESET = rs

LOGGER_NAME = "homyd"


class LoggingFormatter(logging.Formatter):
    COLORS = {
        logging.DEBUG: fg.BLUE,
        logging.INFO: fg.GREEN,
        logging.WARNING: fg.YELLOW,
        logging.ERROR: fg.RED,
        logging.CRITICAL: fg.MAGENTA,
    }

    def format(self, record):
        log_color = self.COLORS.get(record.levelno, fg.WHITE)
        log_message = super().format(record)
        return f"{log_color}{log_message}{RESET}"


def setup_logging(
    level: int = logging.WARNING,
    format_string: Optional[str] = None,
    log_file: Optional[str] = None,
    color: bool = False,
) -> logging.Logger:
    """
    Setup logging configuration for homyd.

    Args:
        level: Logging level
        format_string: Custom format string
        log_file: Optional log file path
        color: Colorize the stderr handler by level

    Returns:
        Configured logger
    """
    if format_string is None:
        format_string = "%(levelname)s - %(name)s - %(message)s"

    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)

    # Clear existing handlers
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(
        LoggingFormatter(format_string) if color else logging.Formatter(format_string)
    )
    logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter(format_string))
        logger.addHandler(file_handler)

    logger.propagate = False

    return logger


class LoggingContext:
    """Context manager for temporary logging configuration."""

    def __init__(self, level: int = logging.INFO, log_file: Optional[str] = None, color: bool = False):
        self.level = level
        self.log_file = log_file
        self.color = color
        self.original_level = None
        self.original_handlers = None
        self.original_propagate = True

    def __enter__(self):
        logger = logging.getLogger(LOGGER_NAME)
        self.original_level = logger.level
        self.original_handlers = logger.handlers[:]
        self.original_propagate = logger.propagate
        setup_logging(level=self.level, log_file=self.log_file, color=self.color)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        logger = logging.getLogger(LOGGER_NAME)
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)
            handler.close()
        for handler in self.original_handlers:
            logger.addHandler(handler)
        logger.setLevel(self.original_level)
        logger.propagate = self.original_propagate
