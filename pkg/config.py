"""
Модуль конфігурації додатка.

Використовує Pydantic Settings для валідації та керування конфігурацією.
Бюджети перебору задаються лише явними аргументами (прапорцями CLI):
змінні середовища та .env файли не читаються.
"""

from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class AppConfig(BaseSettings):
    """Конфігурація додатка з валідацією."""

    model_config = SettingsConfigDict(
        case_sensitive=False,
        extra="ignore",
        validate_assignment=True,
    )

    # Бюджети перебору
    expansion_budget: int = Field(
        default=2 ** 20,
        ge=1,
        description="Максимальна кількість кортежів |A|^n при розгортанні хреста"
    )

    operation_budget: int = Field(
        default=2 ** 20,
        ge=1,
        description="Максимальна кількість таблиць операцій |A|^(|A|^k)"
    )

    selection_budget: int = Field(
        default=2 ** 22,
        ge=1,
        description="Максимальна кількість виборів |R|^k та розмір таблиці свідка |A|^m у ланцюгу"
    )

    box_budget: int = Field(
        default=2 ** 16,
        ge=1,
        description="Максимальна кількість елементів обмеженого ящика"
    )

    downset_budget: int = Field(
        default=2 ** 14,
        ge=1,
        description="Максимальна кількість нижніх конусів, що зберігаються під час переліку чи підрахунку"
    )

    oracle_budget: int = Field(
        default=16,
        ge=0,
        le=24,
        description="Максимальна кількість елементів для перебору всіх підмножин"
    )

    # Арність за замовчуванням
    default_arity_binary: int = Field(
        default=3,
        ge=1,
        description="Арність k для |A| = 2"
    )

    default_arity_other: int = Field(
        default=2,
        ge=1,
        description="Арність k для |A| >= 3"
    )

    # Налаштування логування
    log_level: str = Field(
        default="WARNING",
        description="Рівень логування"
    )

    log_file: Optional[str] = Field(
        default=None,
        description="Файл логів"
    )

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Валідація рівня логування."""
        level = v.strip().upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Невідомий рівень логування: {v}")
        return level

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # Лише явні аргументи конструктора
        return (init_settings,)


# Створюємо екземпляр конфігурації
config = AppConfig()


def default_arity(domain_size: int, settings: Optional[AppConfig] = None) -> int:
    """
    Повертає арність k за замовчуванням для носія заданого розміру.

    Args:
        domain_size: Розмір носія |A|
        settings: Конфігурація (за замовчуванням глобальна)

    Returns:
        3 для |A| <= 2, інакше 2 (якщо не перевизначено)
    """
    settings = settings or config
    if domain_size <= 2:
        return settings.default_arity_binary
    return settings.default_arity_other


__all__ = [
    'AppConfig',
    'config',
    'default_arity',
]
