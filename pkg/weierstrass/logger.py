"""Logging setup for the weierstrass tools."""

import logging
import os
from datetime import datetime
from typing import Optional

LOGGER_NAME = "weierstrass"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class Logger:
    """Singleton wrapper around the `weierstrass` stdlib logger."""

    _instance = None
    _logger = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Logger, cls).__new__(cls)
        return cls._instance

    def __init__(self):
        if self._logger is None:
            self._setup_logger()

    def _setup_logger(self):
        """Console handler at WARNING; file output is opt-in via configure_file_handler."""
        self._logger = logging.getLogger(LOGGER_NAME)
        self._logger.setLevel(logging.INFO)

        if not self._logger.handlers:
            console_handler = logging.StreamHandler()
            console_handler.setLevel(logging.WARNING)
            console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            self._logger.addHandler(console_handler)

    @property
    def name(self) -> str:
        return self._logger.name

    def configure_file_handler(self, log_dir: str, log_file: Optional[str] = None) -> str:
        """
        Route INFO and above to a file, replacing any earlier file handler.

        Args:
            log_dir: Directory for log files, created if missing.
            log_file: File name; defaults to weierstrass_YYYYMMDD.log.

        Returns:
            The path of the log file.
        """
        os.makedirs(log_dir, exist_ok=True)
        if log_file is None:
            log_file = f"{LOGGER_NAME}_{datetime.now().strftime('%Y%m%d')}.log"
        log_path = os.path.join(log_dir, log_file)

        self.close_handlers()
        file_handler = logging.FileHandler(log_path, encoding="utf-8")
        file_handler.setLevel(logging.INFO)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        self._logger.addHandler(file_handler)
        return log_path

    def info(self, message: str):
        self._logger.info(message)

    def warning(self, message: str):
        self._logger.warning(message)

    def error(self, message: str):
        self._logger.error(message)

    def debug(self, message: str):
        self._logger.debug(message)

    def close_handlers(self):
        """Close and detach every file handler."""
        for handler in self._logger.handlers[:]:
            if isinstance(handler, logging.FileHandler):
                handler.close()
                self._logger.removeHandler(handler)
