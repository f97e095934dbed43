"""
Рушій поліморфізмів на скінченних носіях.

Таблиці операцій, предикат збереження f ▷ ρ, обмежені множини
поліморфізмів Pol_k(Q) та обмежене порівняння клонів з пошуком
контрприкладу.
"""

from itertools import product
from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple, Union

from sortedcontainers import SortedList

from config import AppConfig, config
from exceptions import UsageError, check_budget
from logger_config import LoggerMixin
from models import (
    BoundedClone,
    CloneVerdict,
    Cross,
    Domain,
    ExtensionalRelation,
    OperationTable,
    PreservationResult,
    Row,
    Verdict,
)

Relation = Union[Cross, ExtensionalRelation]


def apply(operation: OperationTable, args: Row) -> int:
    """Значення f(args)."""
    if len(args) != operation.arity:
        raise UsageError(f"{len(args)} аргументів для операції арності {operation.arity}")
    return operation.value(args)


def operation_from_function(domain: Domain, arity: int, fn: Callable[..., int]) -> OperationTable:
    """Табулює функцію Python у канонічному порядку аргументів."""
    values = tuple(fn(*args) for args in product(domain.elements, repeat=arity))
    return OperationTable(domain=domain, arity=arity, values=values)


def projection(domain: Domain, arity: int, index: int) -> OperationTable:
    """Проєкція e_index^arity."""
    if not 0 <= index < arity:
        raise UsageError(f"Проєкція {index} для арності {arity}")
    return operation_from_function(domain, arity, lambda *args: args[index])


def compose(outer: OperationTable, inner: Sequence[OperationTable]) -> OperationTable:
    """
    Суперпозиція outer ∘ (g₁,…,g_k).

    Raises:
        UsageError: кількість або арності внутрішніх операцій не узгоджені
    """
    if len(inner) != outer.arity:
        raise UsageError(f"Потрібно {outer.arity} внутрішніх операцій, отримано {len(inner)}")
    arities = {g.arity for g in inner}
    if len(arities) != 1:
        raise UsageError("Внутрішні операції мають різні арності")
    arity = arities.pop()
    values = tuple(
        outer.value(tuple(g.values[position] for g in inner))
        for position in range(outer.domain.size ** arity)
    )
    return OperationTable(domain=outer.domain, arity=arity, values=values)


def render_operation(operation: OperationTable) -> str:
    """Текстова форма k:v0v1… (для |A| > 10 значення через кому)."""
    separator = "" if operation.domain.size <= 10 else ","
    return f"{operation.arity}:" + separator.join(str(v) for v in operation.values)


def parse_operation(domain: Domain, text: str) -> OperationTable:
    """
    Розбирає текстову форму k:v0v1….

    Raises:
        UsageError: синтаксична помилка або неправильна таблиця
    """
    head, _, body = text.strip().partition(":")
    try:
        arity = int(head)
        if "," in body or domain.size > 10:
            values = tuple(int(v) for v in body.split(","))
        else:
            values = tuple(int(ch) for ch in body)
        return OperationTable(domain=domain, arity=arity, values=values)
    except ValueError as e:
        raise UsageError(f"Неправильна таблиця операції: {text!r}") from e


class PolymorphismEngine(LoggerMixin):
    """Перебір операцій і перевірка збереження відношень."""

    def __init__(self, settings: Optional[AppConfig] = None):
        """
        Ініціалізація рушія.

        Args:
            settings: Конфігурація з бюджетами (за замовчуванням глобальна)
        """
        self.settings = settings or config

    def preserves(self, operation: OperationTable, relation: ExtensionalRelation) -> PreservationResult:
        """
        Перевіряє f ▷ R перебором усіх виборів (r₁,…,r_k) ∈ R^k.

        Зупиняється на першому порушенні й повертає його вибір та образ.

        Raises:
            UsageError: різні носії
            BudgetExceededError: |R|^k перевищує бюджет
        """
        if operation.domain != relation.domain:
            raise UsageError("Операція та відношення мають різні носії")
        rows = relation.sorted_rows()
        check_budget("вибори рядків", len(rows) ** operation.arity, self.settings.selection_budget)

        size = operation.domain.size
        values = operation.values
        for selection in product(rows, repeat=operation.arity):
            image = []
            for column in zip(*selection):
                position = 0
                for a in column:
                    position = position * size + a
                image.append(values[position])
            image = tuple(image)
            if image not in relation.tuples:
                return PreservationResult(preserved=False, selection=selection, image=image)
        return PreservationResult(preserved=True)

    def preserves_cross(self, operation: OperationTable, rho: Cross) -> PreservationResult:
        """
        Перевіряє f ▷ R(γ₁,…,γₙ) без розгортання хреста.

        Для кожної координати i допустимі стовпці c ∈ A^k є ті, що f
        відправляє поза γ_i; кожен стовпець зводиться до маски рядків j,
        для яких c_j ∈ γ_i. Порушення існує тоді й лише тоді, коли вибір
        стовпців покриває всі k рядків.
        """
        if operation.domain != rho.domain:
            raise UsageError("Операція та хрест мають різні носії")
        k = operation.arity
        full_mask = (1 << k) - 1
        columns = list(product(rho.domain.elements, repeat=k))
        gammas = rho.language.gammas

        options: Dict[int, Dict[int, Row]] = {}
        for index in set(rho.params):
            bits = gammas[index].bits
            masks: Dict[int, Row] = {}
            for column, value in zip(columns, operation.values):
                if bits[value]:
                    continue
                mask = 0
                for j, a in enumerate(column):
                    if bits[a]:
                        mask |= 1 << j
                masks.setdefault(mask, column)
            options[index] = masks

        reach: Dict[int, Tuple[Row, ...]] = {0: ()}
        for index in rho.params:
            grown: Dict[int, Tuple[Row, ...]] = {}
            for mask, chosen in reach.items():
                for option, column in options[index].items():
                    grown.setdefault(mask | option, chosen + (column,))
            reach = grown
            if not reach:
                return PreservationResult(preserved=True)

        if full_mask not in reach:
            return PreservationResult(preserved=True)
        chosen = reach[full_mask]
        selection = tuple(tuple(column[j] for column in chosen) for j in range(k))
        image = tuple(operation.value(column) for column in chosen)
        return PreservationResult(preserved=False, selection=selection, image=image)

    def check(self, operation: OperationTable, relation: Relation) -> PreservationResult:
        """Вибирає інтенсіональну перевірку для хрестів і перебір для решти."""
        if isinstance(relation, Cross):
            return self.preserves_cross(operation, relation)
        return self.preserves(operation, relation)

    def all_operations(self, domain: Domain, arity: int) -> Iterator[OperationTable]:
        """
        Усі k-арні операції рівно по одному разу в лексикографічному порядку таблиць.

        Raises:
            BudgetExceededError: |A|^(|A|^k) перевищує бюджет
        """
        if arity < 1:
            raise UsageError(f"Арність має бути додатною, отримано {arity}")
        length = domain.size ** arity
        check_budget(f"операції арності {arity}", domain.size ** length, self.settings.operation_budget)
        for values in product(domain.elements, repeat=length):
            yield OperationTable.model_construct(domain=domain, arity=arity, values=values)

    def first_violation(self, operation: OperationTable, relations: Sequence[Relation]) -> Optional[int]:
        """Індекс першого відношення, яке f не зберігає, або None."""
        for index, relation in enumerate(relations):
            if not self.check(operation, relation).preserved:
                return index
        return None

    def pol_bounded(self, relations: Sequence[Relation], max_arity: int,
                    domain: Optional[Domain] = None) -> BoundedClone:
        """
        Pol_k(Q): для кожної арності n ≤ k рівно ті операції, що зберігають усі ρ ∈ Q.

        Args:
            relations: Хрести або екстенсіональні відношення
            max_arity: Обмеження арності k
            domain: Носій (обов'язковий, якщо Q порожня)
        """
        domain = self._resolve_domain(relations, domain)
        self.log_method_call("pol_bounded", relations=len(relations), max_arity=max_arity)

        tables = {}
        for arity in range(1, max_arity + 1):
            tables[arity] = SortedList(
                f.values for f in self.all_operations(domain, arity)
                if self.first_violation(f, relations) is None
            )
            self.logger.debug(f"Pol_{arity}: {len(tables[arity])} операцій")
        return BoundedClone(domain=domain, max_arity=max_arity, tables=tables)

    def clone_leq_bounded(self, left: Sequence[Relation], right: Sequence[Relation], max_arity: int,
                          domain: Optional[Domain] = None) -> CloneVerdict:
        """
        Шукає f арності ≤ k, що зберігає все з left, але не все з right.

        Знайдений f спростовує Pol(left) ⊆ Pol(right); відсутність
        контрприкладу нічого не сертифікує.
        """
        domain = self._resolve_domain(list(left) + list(right), domain)
        for arity in range(1, max_arity + 1):
            for f in self.all_operations(domain, arity):
                if self.first_violation(f, left) is not None:
                    continue
                violated = self.first_violation(f, right)
                if violated is not None:
                    self.logger.info(f"Контрприклад {render_operation(f)} порушує відношення #{violated}")
                    return CloneVerdict(
                        verdict=Verdict.REFUTED,
                        max_arity=max_arity,
                        counterexample=f,
                        violated_index=violated,
                    )
        return CloneVerdict(verdict=Verdict.PASS, max_arity=max_arity)

    @staticmethod
    def _resolve_domain(relations: Sequence[Relation], domain: Optional[Domain]) -> Domain:
        domains = {relation.domain for relation in relations}
        if domain is not None:
            domains.add(domain)
        if not domains:
            raise UsageError("Носій не визначено: порожня множина відношень без явного носія")
        if len(domains) > 1:
            raise UsageError("Відношення задані на різних носіях")
        return domains.pop()


# Глобальний екземпляр рушія
polymorph_engine = PolymorphismEngine()

__all__ = [
    'Relation',
    'apply',
    'operation_from_function',
    'projection',
    'compose',
    'render_operation',
    'parse_operation',
    'PolymorphismEngine',
    'polymorph_engine',
]
