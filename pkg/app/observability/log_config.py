"""
Logging setup for the CLI and the verification runner

Logs go to stderr (stdout carries the JSON reports), optionally also to a
rotating file.
"""
import json
import logging
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional

logger = logging.getLogger(__name__)

TEXT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class JsonLineFormatter(logging.Formatter):
    """One JSON object per log record"""

    def format(self, record: logging.LogRecord) -> str:
        payload = {
            'time': self.formatTime(record, '%Y-%m-%dT%H:%M:%S'),
            'logger': record.name,
            'level': record.levelname,
            'message': record.getMessage(),
        }
        if record.exc_info:
            payload['exc_info'] = self.formatException(record.exc_info)
        return json.dumps(payload, sort_keys=True)


def setup_logging(level: str = 'WARNING', log_format: str = 'text', log_file: Optional[str] = None):
    """
    Configure the root logger

    Args:
        level: Log level name (DEBUG, INFO, ...)
        log_format: "text" or "json"
        log_file: Optional path of a rotating log file
    """
    log_level = getattr(logging, level.upper(), logging.WARNING)

    if log_format.lower() == 'json':
        formatter: logging.Formatter = JsonLineFormatter()
    else:
        formatter = logging.Formatter(fmt=TEXT_FORMAT, datefmt='%Y-%m-%d %H:%M:%S')

    root_logger = logging.getLogger()
    # Re-running setup (tests, repeated CLI calls) must not stack handlers.
    for handler in list(root_logger.handlers):
        if getattr(handler, '_cga_verma', False):
            root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(log_level)
    console_handler._cga_verma = True
    root_logger.addHandler(console_handler)

    if log_file:
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=10*1024*1024,  # 10MB
            backupCount=5
        )
        file_handler.setFormatter(formatter)
        file_handler.setLevel(log_level)
        file_handler._cga_verma = True
        root_logger.addHandler(file_handler)

    root_logger.setLevel(log_level)
    logger.debug("Logging configured: format=%s, level=%s", log_format, level)
