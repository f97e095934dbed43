# -*- coding: utf-8 -*-
"""
Допоміжний модуль (утиліти) обробників команд.

Містить декоратор перетворення винятків на коди завершення та функції
форматування рядків звіту «ключ: значення».
"""

from functools import wraps
from typing import Callable, Iterable, List, Tuple

from pydantic import ValidationError

from exceptions import CrossCloneError
from logger_config import get_module_logger
from models import Row

logger = get_module_logger(__name__)

CommandResult = Tuple[int, List[str]]


def reports_errors(func: Callable[..., List[str]]) -> Callable[..., CommandResult]:
    """
    Декоратор, що перетворює результат команди на (код, рядки).

    Успіх дає код 0 та рядки звіту. Виняток бібліотеки дає його код
    завершення та єдиний рядок «error: …»; помилка валідації Pydantic
    вважається помилкою використання (код 1).
    """
    @wraps(func)
    def wrapped(*args, **kwargs) -> CommandResult:
        try:
            return 0, func(*args, **kwargs)
        except CrossCloneError as e:
            logger.info(f"Команда {func.__name__} завершилась помилкою: {e}")
            return e.exit_code, [error_line(str(e))]
        except ValidationError as e:
            logger.info(f"Команда {func.__name__}: невалідні дані: {e}")
            return 1, [error_line(e.errors()[0]["msg"])]
    return wrapped


def error_line(message: str) -> str:
    """Однорядкове повідомлення про помилку."""
    return "error: " + " ".join(message.split())


def kv(key: str, value) -> str:
    return f"{key}: {value}"


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def render_row(row: Row) -> str:
    return "(" + ",".join(str(a) for a in row) + ")"


def render_selection(selection: Iterable[Row]) -> str:
    return " ".join(render_row(row) for row in selection)
