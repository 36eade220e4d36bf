"""
Logging Setup
Stderr handler plus a file log under logs/
"""
import logging
import sys
from typing import Optional

from src.config.settings import LOG_FILE, LOG_LEVEL

LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"

_configured = False


def setup_logging(level: Optional[str] = None, log_to_file: bool = True) -> None:
    """
    Configure the package root logger once

    Args:
        level: Level name, defaults to ABPAULI_LOG_LEVEL
        log_to_file: Also append to logs/abpauli.log
    """
    global _configured
    root = logging.getLogger("src")
    root.setLevel((level or LOG_LEVEL).upper())
    if _configured:
        return

    stream = logging.StreamHandler(sys.stderr)
    stream.setFormatter(logging.Formatter(LOG_FORMAT))
    stream.setLevel(logging.WARNING)
    root.addHandler(stream)

    if log_to_file:
        file_handler = logging.FileHandler(LOG_FILE, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(file_handler)

    _configured = True


def get_logger(name: str) -> logging.Logger:
    """Module logger, a child of the package root"""
    return logging.getLogger(name)
