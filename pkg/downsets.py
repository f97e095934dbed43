"""
Нижні конуси (N^d, ⊑).

Скінченно породжені конуси зберігаються антиланцюгом максимальних
твірних. Для обмежених ящиків {0…B}^d модуль перелічує та рахує всі
нижні конуси, надає оракул перебору підмножин і розклад δ на частини
Y_F та Y_{⊆I∖{i}}.
"""

import re
from functools import lru_cache
from itertools import product
from math import comb
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from config import AppConfig, config
from exceptions import SemanticError, UsageError, check_budget
from logger_config import LoggerMixin
from models import BoundedBox, Downset, PatternVector
from patterns import below, render_pattern, parse_pattern, support

ElementSet = FrozenSet[PatternVector]
DeltaParts = Tuple[ElementSet, Tuple[ElementSet, ...]]


def downset_generate(dimension: int, gens: Iterable[PatternVector]) -> Downset:
    """
    Канонічна форма конуса, породженого gens.

    Відкидає твірні, що лежать ⊑-нижче іншої твірної, та дублікати.

    Raises:
        UsageError: невідповідність розмірності або від'ємні координати
    """
    unique = []
    for g in dict.fromkeys(tuple(g) for g in gens):
        if len(g) != dimension:
            raise UsageError(f"Твірна {render_pattern(g)} має розмірність {len(g)}, очікувалось {dimension}")
        if any(c < 0 for c in g):
            raise UsageError(f"Твірна {render_pattern(g)} містить від'ємні координати")
        unique.append(g)

    maximal = [g for g in unique if not any(h != g and below(g, h) for h in unique)]
    return Downset(dimension=dimension, generators=tuple(sorted(maximal)))


def _check_dimension(downset: Downset, dimension: int) -> None:
    if downset.dimension != dimension:
        raise UsageError(f"Різні розмірності: {downset.dimension} і {dimension}")


def downset_contains(downset: Downset, x: PatternVector) -> bool:
    """x ∈ D ⇔ ∃ g: x ⊑ g."""
    _check_dimension(downset, len(x))
    return any(below(x, g) for g in downset.generators)


def downset_leq(first: Downset, second: Downset) -> bool:
    """Включення конусів: кожна твірна first лежить ⊑-нижче деякої твірної second."""
    _check_dimension(second, first.dimension)
    return all(any(below(g, h) for h in second.generators) for g in first.generators)


def principal_size(g: PatternVector) -> int:
    """|↓{g}| = добуток g_i по носію g."""
    size = 1
    for c in g:
        if c:
            size *= c
    return size


def principal_elements(g: PatternVector) -> ElementSet:
    """↓{g}: координати з носія пробігають 1…g_i, решта нульові."""
    ranges = [range(1, c + 1) if c else (0,) for c in g]
    return frozenset(product(*ranges))


def downset_elements(downset: Downset) -> ElementSet:
    """Усі елементи скінченного конуса."""
    elements = set()
    for g in downset.generators:
        elements |= principal_elements(g)
    return frozenset(elements)


def downset_from_elements(dimension: int, elements: Iterable[PatternVector]) -> Downset:
    """
    Конус за множиною елементів, яка вже замкнена донизу.

    Твірні є елементами без верхнього покриття x + e_i (i ∈ supp x) у множині.
    """
    elements = frozenset(elements)
    maximal = [
        x for x in elements
        if not any(x[:i] + (c + 1,) + x[i + 1:] in elements for i, c in enumerate(x) if c)
    ]
    return Downset(dimension=dimension, generators=tuple(sorted(maximal)))


def lower_covers(x: PatternVector) -> List[PatternVector]:
    """Нижні покриття x відносно ⊑ (зменшення координати ≥ 2 на одиницю)."""
    return [x[:i] + (c - 1,) + x[i + 1:] for i, c in enumerate(x) if c >= 2]


def box_elements(box: BoundedBox) -> List[PatternVector]:
    """Елементи ящика в лексикографічному порядку."""
    return list(product(range(box.bound + 1), repeat=box.dimension))


def in_box(x: PatternVector, box: BoundedBox) -> bool:
    return len(x) == box.dimension and all(0 <= c <= box.bound for c in x)


def is_box_downset(elements: Iterable[PatternVector], box: BoundedBox) -> bool:
    """Перевіряє, що множина лежить у ящику і замкнена донизу відносно ⊑."""
    elements = set(elements)
    for x in elements:
        if not in_box(x, box):
            return False
        if any(y not in elements for y in lower_covers(x)):
            return False
    return True


def render_downset(downset: Downset) -> str:
    """Текстова форма {(g…);(g…)} з лексикографічно відсортованими твірними."""
    return "{" + ";".join(render_pattern(g) for g in sorted(downset.generators)) + "}"


def parse_downset(text: str, dimension: int) -> Downset:
    """
    Розбирає текстову форму {(g…);(g…)}.

    Raises:
        UsageError: синтаксична помилка або невідповідність розмірності
    """
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise UsageError(f"Неправильний формат конуса: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return Downset(dimension=dimension)
    parts = re.split(r"\s*;\s*", inner)
    return downset_generate(dimension, [parse_pattern(part) for part in parts])


def _linear_extension(elements: Iterable[PatternVector]) -> List[PatternVector]:
    return sorted(elements, key=lambda v: (sum(v), v))


def _ideals_by_extension(elements: Sequence[PatternVector], covers: Callable[[PatternVector], List[PatternVector]],
                         budget: int) -> List[ElementSet]:
    """
    Перелічує нижні конуси розширенням ідеалів.

    Елементи йдуть у лінійному розширенні порядку; кожен елемент можна
    додати, лише якщо всі його нижні покриття вже додані.

    Raises:
        BudgetExceededError: конусів більше, ніж budget
    """
    ideals: List[ElementSet] = [frozenset()]
    for x in _linear_extension(elements):
        below_x = covers(x)
        grown = [ideal | {x} for ideal in ideals if all(y in ideal for y in below_x)]
        check_budget("нижні конуси", len(ideals) + len(grown), budget)
        ideals.extend(grown)
    return ideals


def _superset_sums(values: Dict[int, int], size: int) -> Dict[int, int]:
    """
    Для кожного ідеалу I (бітова маска) сума values[J] по ідеалах J ⊇ I.

    Біти нумерують елементи в лінійному розширенні; проходи йдуть від
    найстаршого елемента, тож кожне I ∪ {q} на проході q теж ідеал.
    """
    sums = dict(values)
    for position in reversed(range(size)):
        bit = 1 << position
        for mask in sums:
            if not mask & bit and mask | bit in sums:
                sums[mask] += sums[mask | bit]
    return sums


@lru_cache(maxsize=None)
def _multichain_count(dimension: int, bound: int, budget: int) -> int:
    elements = _linear_extension(product(range(1, bound + 1), repeat=dimension - 1))
    position = {x: index for index, x in enumerate(elements)}
    ideals = _ideals_by_extension(elements, lower_covers, budget)

    chains = {sum(1 << position[x] for x in ideal): 1 for ideal in ideals}
    for _ in range(bound - 1):
        chains = _superset_sums(chains, len(elements))
    return sum(chains.values())


def grid_ideal_count(dimension: int, bound: int, budget: Optional[int] = None) -> int:
    """
    Кількість нижніх конусів ({1…B}^j, ≤).

    Конус у {1…B}^j є спадним ланцюгом I_1 ⊇ … ⊇ I_B своїх шарів
    за останньою координатою, тож рахуємо мультиланцюги довжини B
    у решітці конусів {1…B}^(j−1).

    Raises:
        BudgetExceededError: конусів {1…B}^(j−1) більше, ніж budget
    """
    if dimension == 0:
        return 2
    if bound == 0:
        return 1
    if dimension == 1:
        return bound + 1
    budget = budget if budget is not None else config.downset_budget
    return _multichain_count(dimension, bound, budget)


class DownsetEnumerator(LoggerMixin):
    """Перелік і підрахунок нижніх конусів обмежених ящиків."""

    def __init__(self, settings: Optional[AppConfig] = None):
        """
        Ініціалізація перелічувача.

        Args:
            settings: Конфігурація з бюджетами (за замовчуванням глобальна)
        """
        self.settings = settings or config

    def enumerate_box_downsets(self, box: BoundedBox) -> List[Downset]:
        """
        Усі нижні конуси ящика в канонічній формі, без повторів.

        Raises:
            BudgetExceededError: ящик більший за бюджет
        """
        check_budget("елементи ящика", box.size, self.settings.box_budget)
        ideals = _ideals_by_extension(box_elements(box), lower_covers, self.settings.downset_budget)
        downsets = sorted(
            (downset_from_elements(box.dimension, ideal) for ideal in ideals),
            key=lambda d: (len(d.generators), d.generators),
        )
        self.logger.debug(f"Ящик d={box.dimension}, B={box.bound}: {len(downsets)} конусів")
        return downsets

    def count_box_downsets(self, box: BoundedBox) -> int:
        """
        Кількість нижніх конусів ящика.

        ⊑ пов'язує лише вектори з однаковим носієм, тож ящик розпадається
        на класи носіїв S, кожен ізоморфний ({1…B}^|S|, ≤), а кількість дорівнює
        добутку кількостей конусів класів.
        """
        total = 1
        for size in range(box.dimension + 1):
            per_class = grid_ideal_count(size, box.bound, self.settings.downset_budget)
            total *= per_class ** comb(box.dimension, size)
        self.logger.debug(f"Підрахунок d={box.dimension}, B={box.bound}: {total}")
        return total

    def subset_oracle_downsets(self, box: BoundedBox) -> List[Downset]:
        """
        Оракул: перебір усіх 2^|ящика| підмножин з фільтром замкненості.

        Raises:
            BudgetExceededError: ящик більший за бюджет оракула
        """
        check_budget("елементи ящика для оракула", box.size, self.settings.oracle_budget)
        elements = box_elements(box)
        found = []
        for mask in range(1 << len(elements)):
            subset = [x for bit, x in enumerate(elements) if mask >> bit & 1]
            if is_box_downset(subset, box):
                found.append(downset_from_elements(box.dimension, subset))
        return sorted(found, key=lambda d: (len(d.generators), d.generators))

    def subset_oracle_count(self, box: BoundedBox) -> int:
        return len(self.subset_oracle_downsets(box))

    def decompose_delta(self, elements: Iterable[PatternVector], box: BoundedBox) -> DeltaParts:
        """
        Розклад δ нижнього конуса X ящика.

        Returns:
            (X ∩ Y_F, (X ∩ Y_{⊆I∖{0}}, …, X ∩ Y_{⊆I∖{d−1}}))

        Raises:
            SemanticError: X не є нижнім конусом ящика
        """
        elements = frozenset(elements)
        if not is_box_downset(elements, box):
            raise SemanticError("Множина не є нижнім конусом ящика")

        everything = frozenset(range(box.dimension))
        full_part = frozenset(x for x in elements if support(x) == everything)
        parts = tuple(
            frozenset(x for x in elements if x[i] == 0)
            for i in range(box.dimension)
        )
        return full_part, parts


def reassemble_delta(decomposition: DeltaParts) -> ElementSet:
    """Об'єднання частин розкладу δ."""
    full_part, parts = decomposition
    result = set(full_part)
    for part in parts:
        result |= part
    return frozenset(result)


# Глобальний екземпляр перелічувача
downset_enumerator = DownsetEnumerator()

__all__ = [
    'downset_generate',
    'downset_contains',
    'downset_leq',
    'principal_size',
    'principal_elements',
    'downset_elements',
    'downset_from_elements',
    'lower_covers',
    'box_elements',
    'is_box_downset',
    'render_downset',
    'parse_downset',
    'grid_ideal_count',
    'DownsetEnumerator',
    'downset_enumerator',
    'reassemble_delta',
]
