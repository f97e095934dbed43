"""
Логування crossclones.

Усі логери є нащадками «crossclones». Консольний обробник пише в stderr,
бо stdout належить звітам команд; файл з ротацією вмикається лише
параметром log_file.
"""

import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Optional

from config import config

APP_LOGGER_NAME = "crossclones"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
CONSOLE_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s:%(funcName)s:%(lineno)d | %(message)s"
FILE_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(module)s:%(funcName)s:%(lineno)d | %(message)s"


class ColoredFormatter(logging.Formatter):
    """Підфарбовує назву рівня ANSI-кодом."""

    COLORS = {
        'DEBUG': '\033[36m',
        'INFO': '\033[32m',
        'WARNING': '\033[33m',
        'ERROR': '\033[31m',
        'CRITICAL': '\033[35m',
    }
    RESET = '\033[0m'

    def format(self, record: logging.LogRecord) -> str:
        color = self.COLORS.get(record.levelname)
        if color is None:
            return super().format(record)
        original = record.levelname
        record.levelname = f"{color}{original}{self.RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


class CrossLogger:
    """
    Збирає кореневий логер додатка.

    Повторний виклик замінює обробники, тож прапорці CLI можуть
    переналаштувати логер, створений під час імпорту.
    """

    def __init__(
        self,
        level: str = "WARNING",
        log_file: Optional[str] = None,
        rotate_bytes: int = 10 * 1024 * 1024,
        backups: int = 5,
    ):
        self.level = logging.getLevelName(level.upper())
        if not isinstance(self.level, int):
            self.level = logging.WARNING
        self.log_file = log_file
        self.rotate_bytes = rotate_bytes
        self.backups = backups
        self.logger = logging.getLogger(APP_LOGGER_NAME)

    def build(self) -> logging.Logger:
        """Встановлює рівень і обробники та повертає логер «crossclones»."""
        self.logger.handlers.clear()
        self.logger.setLevel(self.level)
        self.logger.propagate = False

        self.logger.addHandler(self._stderr_handler())
        if self.log_file:
            self.logger.addHandler(self._file_handler())
        return self.logger

    def _stderr_handler(self) -> logging.Handler:
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(self.level)
        handler.setFormatter(ColoredFormatter(CONSOLE_FORMAT, datefmt=DATE_FORMAT))
        return handler

    def _file_handler(self) -> logging.Handler:
        path = Path(self.log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        handler = logging.handlers.RotatingFileHandler(
            filename=path,
            maxBytes=self.rotate_bytes,
            backupCount=self.backups,
            encoding='utf-8',
        )
        handler.setLevel(self.level)
        handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt=DATE_FORMAT))
        return handler


def setup_logging(log_level: Optional[str] = None, log_file: Optional[str] = None) -> logging.Logger:
    """
    Налаштовує логер «crossclones».

    Args:
        log_level: Рівень (за замовчуванням з конфігурації)
        log_file: Файл з ротацією (за замовчуванням з конфігурації)
    """
    level = log_level or config.log_level
    logger = CrossLogger(level, log_file if log_file is not None else config.log_file).build()
    logger.debug(f"Логування: рівень {level}, файл {log_file or config.log_file or '-'}")
    return logger


def get_module_logger(module_name: str) -> logging.Logger:
    """Логер «crossclones.<module_name>»."""
    return logging.getLogger(f"{APP_LOGGER_NAME}.{module_name}")


class LoggerMixin:
    """Дає сервісам ліниво створений self.logger з іменем класу."""

    @property
    def logger(self) -> logging.Logger:
        if not hasattr(self, '_logger'):
            self._logger = get_module_logger(self.__class__.__name__)
        return self._logger

    def log_method_call(self, method_name: str, **kwargs) -> None:
        """DEBUG-запис виклику з аргументами."""
        params = ", ".join(f"{k}={v}" for k, v in kwargs.items())
        self.logger.debug(f"{method_name}({params})")


main_logger = setup_logging()

__all__ = [
    'CrossLogger',
    'setup_logging',
    'get_module_logger',
    'LoggerMixin',
    'main_logger',
]
