"""
Винятки додатка.

Кожен виняток несе код завершення, який CLI повертає користувачу.
"""

from typing import Optional


class CrossCloneError(Exception):
    """Базовий виняток бібліотеки."""

    exit_code = 1

    def __init__(self, message: str, line: Optional[int] = None):
        self.message = message
        self.line = line
        super().__init__(message if line is None else f"рядок {line}: {message}")


class UsageError(CrossCloneError):
    """Неправильне використання: невідповідність арності, синтаксис, невідомі імена."""

    exit_code = 1


class SemanticError(CrossCloneError):
    """Коректний запит без змістовної відповіді (наприклад, відношення не є хрестом)."""

    exit_code = 2


class BudgetExceededError(CrossCloneError):
    """Перевищено налаштований бюджет перебору."""

    exit_code = 3


def check_budget(what: str, needed: int, budget: int) -> None:
    """
    Перевіряє, що потрібний обсяг перебору вкладається в бюджет.

    Raises:
        BudgetExceededError: якщо needed > budget
    """
    if needed > budget:
        raise BudgetExceededError(f"{what}: потрібно {needed}, бюджет {budget}")


__all__ = [
    'CrossCloneError',
    'UsageError',
    'SemanticError',
    'BudgetExceededError',
    'check_budget',
]
