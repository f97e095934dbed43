"""
Модуль носіїв, унарних мов і хрестів.

Містить побудову мов Γ, хрестів R(γ₁,…,γₙ), їх розгортання у множину
кортежів, перевірки повноти/порожнечі, відновлення параметрів за
відношенням та обчислення патерну pt(ρ) ∈ N^Γ.
"""

from itertools import product
from typing import Iterable, Optional, Sequence, Tuple, Union

from pydantic import ValidationError

from config import config
from exceptions import SemanticError, UsageError, check_budget
from logger_config import get_module_logger
from models import (
    Cross,
    Domain,
    ExtensionalRelation,
    Language,
    PatternVector,
    Row,
    UnaryRelation,
)

logger = get_module_logger(__name__)


def make_domain(size: int) -> Domain:
    """Створює носій розміру size ≥ 1."""
    try:
        return Domain(size=size)
    except ValidationError as e:
        raise UsageError(f"Розмір носія має бути додатним, отримано {size}") from e


def make_unary(domain: Domain, name: str, members: Iterable[int]) -> UnaryRelation:
    """
    Створює іменоване унарне відношення з переліку елементів.

    Raises:
        UsageError: якщо елемент не належить A
    """
    members = set(members)
    for a in members:
        if not 0 <= a < domain.size:
            raise UsageError(f"Елемент {a} не належить A = {{0..{domain.size - 1}}}")
    return UnaryRelation(name=name, bits=tuple(a in members for a in domain.elements))


def make_language(domain: Domain, named_extensions: Sequence[Tuple[str, Iterable[int]]]) -> Language:
    """
    Створює мову Γ з упорядкованого списку (ім'я, елементи).

    Args:
        domain: Носій
        named_extensions: Пари (ім'я, елементи γ)

    Returns:
        Мова з фіксованим порядком відношень

    Raises:
        UsageError: елемент поза A, повторне ім'я або повторне розширення
    """
    gammas = tuple(make_unary(domain, name, members) for name, members in named_extensions)
    try:
        return Language(domain=domain, gammas=gammas)
    except ValidationError as e:
        raise UsageError(e.errors()[0]["msg"]) from e


def clausal_language(size: int) -> Language:
    """
    Мова клаузальних відношень над ланцюгом 0 < 1 < … < size−1.

    Складається з нетривіальних верхніх конусів ge<a> = {x ≥ a}
    та нижніх конусів le<b> = {x ≤ b}.
    """
    domain = make_domain(size)
    named = [(f"ge{a}", range(a, size)) for a in range(1, size)]
    named += [(f"le{b}", range(0, b + 1)) for b in range(0, size - 1)]
    return make_language(domain, named)


def make_cross(language: Language, params: Sequence[Union[int, str]]) -> Cross:
    """
    Створює хрест з індексів або імен відношень Γ.

    Raises:
        UsageError: порожній список параметрів або невідоме ім'я/індекс
    """
    if not params:
        raise UsageError("Хрест має арність не менше 1 (лише непорожні диз'юнкції)")
    indices = []
    for param in params:
        if isinstance(param, str):
            index = language.index_of(param)
            if index is None:
                raise UsageError(f"Невідоме відношення: {param}")
            indices.append(index)
        else:
            if not 0 <= param < language.dimension:
                raise UsageError(f"Індекс параметра {param} поза межами Γ")
            indices.append(param)
    return Cross(language=language, params=tuple(indices))


def cross_contains(rho: Cross, x: Row) -> bool:
    """
    Перевіряє x ∈ R(γ₁,…,γₙ), тобто ∃ i: x_i ∈ γ_i.

    Raises:
        UsageError: якщо довжина x не дорівнює арності хреста
    """
    if len(x) != rho.arity:
        raise UsageError(f"Кортеж довжини {len(x)} для хреста арності {rho.arity}")
    gammas = rho.language.gammas
    return any(gammas[index].bits[a] for index, a in zip(rho.params, x))


def cross_expand(rho: Cross, budget: Optional[int] = None) -> ExtensionalRelation:
    """
    Розгортає хрест у множину всіх кортежів, що йому належать.

    Raises:
        BudgetExceededError: якщо |A|^n перевищує бюджет розгортання
    """
    budget = budget if budget is not None else config.expansion_budget
    size = rho.domain.size
    check_budget("розгортання хреста", size ** rho.arity, budget)

    rows = frozenset(x for x in product(range(size), repeat=rho.arity) if cross_contains(rho, x))
    return ExtensionalRelation.model_construct(domain=rho.domain, arity=rho.arity, tuples=rows)


def cross_is_full(rho: Cross) -> bool:
    """R(…) = Aⁿ тоді й лише тоді, коли деякий параметр дорівнює A."""
    return any(rho.parameter(i).is_full for i in range(rho.arity))


def cross_is_empty(rho: Cross) -> bool:
    """R(…) = ∅ тоді й лише тоді, коли всі параметри порожні."""
    return all(rho.parameter(i).is_empty for i in range(rho.arity))


def canonical_parameters(rho: Cross) -> Tuple[int, ...]:
    """
    Канонічний кортеж параметрів p(ρ).

    Для власного хреста це його параметри, для повного (A,…,A).

    Raises:
        SemanticError: повний хрест, а A ∉ Γ
    """
    if not cross_is_full(rho):
        return rho.params
    full = rho.language.full_index()
    if full is None:
        raise SemanticError("Повний хрест не має канонічної форми в Γ: A ∉ Γ")
    return (full,) * rho.arity


def cross_pattern(rho: Cross) -> PatternVector:
    """
    Патерн pt(ρ): скільки разів кожне γ ∈ Γ входить у p(ρ).

    Returns:
        Вектор довжини |Γ| із сумою координат, рівною арності
    """
    counts = [0] * rho.language.dimension
    for index in canonical_parameters(rho):
        counts[index] += 1
    return tuple(counts)


def reconstruct_parameters(relation: ExtensionalRelation, language: Language,
                           budget: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """
    Відновлює канонічні параметри відношення або повертає None, якщо R ∉ DD(Γ).

    Доповнення хреста завжди є ящиком B₁×⋯×Bₙ, де B_i = A∖γ_i. Тому
    обчислюємо проєкції доповнення, перевіряємо рівність ящику і шукаємо
    кожне A∖B_i серед відношень Γ.

    Args:
        relation: Екстенсіональне відношення
        language: Мова Γ

    Returns:
        Кортеж індексів Γ або None

    Raises:
        UsageError: нульова арність або інший носій
    """
    if relation.arity < 1:
        raise UsageError("Відношення нульової арності не може бути хрестом")
    if relation.domain != language.domain:
        raise UsageError("Відношення та мова мають різні носії")

    size = language.domain.size
    n = relation.arity
    budget = budget if budget is not None else config.expansion_budget
    check_budget("відновлення параметрів", size ** n, budget)

    complement = [x for x in product(range(size), repeat=n) if x not in relation.tuples]
    if not complement:
        full = language.full_index()
        return None if full is None else (full,) * n

    projections = [set() for _ in range(n)]
    for x in complement:
        for i, a in enumerate(x):
            projections[i].add(a)

    box_size = 1
    for projection in projections:
        box_size *= len(projection)
    if box_size != len(complement):
        logger.debug(f"Доповнення ({len(complement)} кортежів) не є ящиком ({box_size})")
        return None

    params = []
    for projection in projections:
        index = language.index_of_bits(tuple(a not in projection for a in range(size)))
        if index is None:
            return None
        params.append(index)
    return tuple(params)


def cross_permute(rho: Cross, sigma: Sequence[int]) -> Cross:
    """
    Переставляє параметри: новий i-й параметр дорівнює старому параметру з номером sigma[i].

    Raises:
        UsageError: sigma не є перестановкою координат
    """
    if sorted(sigma) != list(range(rho.arity)):
        raise UsageError(f"{list(sigma)} не є перестановкою {rho.arity} координат")
    return Cross(language=rho.language, params=tuple(rho.params[i] for i in sigma))


def cross_duplicate(rho: Cross, position: int) -> Cross:
    """Дублює параметр на позиції position (копія стає поруч)."""
    if not 0 <= position < rho.arity:
        raise UsageError(f"Позиція {position} поза межами арності {rho.arity}")
    params = rho.params[:position + 1] + rho.params[position:]
    return Cross(language=rho.language, params=params)


def cross_from_pattern(language: Language, vector: PatternVector) -> Cross:
    """
    Канонічний хрест патерну: кожне γ повторено vector[γ] разів у порядку Γ.

    Raises:
        UsageError: невірна розмірність або нульовий вектор
    """
    if len(vector) != language.dimension:
        raise UsageError(f"Патерн розмірності {len(vector)} для |Γ| = {language.dimension}")
    params = tuple(index for index, count in enumerate(vector) for _ in range(count))
    if not params:
        raise UsageError("Нульовий патерн не задає жодного хреста")
    return Cross(language=language, params=params)


def relation_permute(relation: ExtensionalRelation, sigma: Sequence[int]) -> ExtensionalRelation:
    """Переставляє координати екстенсіонального відношення."""
    if sorted(sigma) != list(range(relation.arity)):
        raise UsageError(f"{list(sigma)} не є перестановкою {relation.arity} координат")
    rows = frozenset(tuple(x[i] for i in sigma) for x in relation.tuples)
    return ExtensionalRelation.model_construct(domain=relation.domain, arity=relation.arity, tuples=rows)


def full_relation(domain: Domain, arity: int) -> ExtensionalRelation:
    """Aⁿ як екстенсіональне відношення."""
    rows = frozenset(product(range(domain.size), repeat=arity))
    return ExtensionalRelation.model_construct(domain=domain, arity=arity, tuples=rows)


__all__ = [
    'make_domain',
    'make_unary',
    'make_language',
    'clausal_language',
    'make_cross',
    'cross_contains',
    'cross_expand',
    'cross_is_full',
    'cross_is_empty',
    'canonical_parameters',
    'cross_pattern',
    'reconstruct_parameters',
    'cross_permute',
    'cross_duplicate',
    'cross_from_pattern',
    'relation_permute',
    'full_relation',
]
