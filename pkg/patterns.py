"""
Вектори патернів у N^Γ.

Носії, покоординатний порядок ≤, порядок ⊑ зі збереженням носія
та утиліти для послідовностей у дусі леми Діксона.
"""

import re
from itertools import combinations
from typing import FrozenSet, Optional, Sequence, Tuple

from exceptions import UsageError
from models import PatternVector

_PATTERN_RE = re.compile(r'^\(\s*(\d+(\s*,\s*\d+)*)?\s*,?\s*\)$')


def check_dimensions(x: PatternVector, y: PatternVector) -> None:
    """Розмірності мають збігатися; доповнення нулями не допускається."""
    if len(x) != len(y):
        raise UsageError(f"Різні розмірності патернів: {len(x)} і {len(y)}")


def support(x: PatternVector) -> FrozenSet[int]:
    """Множина ненульових координат."""
    return frozenset(i for i, c in enumerate(x) if c != 0)


def leq(x: PatternVector, y: PatternVector) -> bool:
    """Покоординатний порядок x ≤ y."""
    check_dimensions(x, y)
    return all(a <= b for a, b in zip(x, y))


def below(x: PatternVector, y: PatternVector) -> bool:
    """x ⊑ y: x ≤ y покоординатно і supp(x) = supp(y)."""
    check_dimensions(x, y)
    return all(a <= b and (a == 0) == (b == 0) for a, b in zip(x, y))


def find_dominating_pair(seq: Sequence[PatternVector]) -> Optional[Tuple[int, int]]:
    """
    Лексикографічно перша пара i < j з seq[i] ≤ seq[j].

    Returns:
        Пара індексів або None, якщо скінченна послідовність «погана»
    """
    for i, j in combinations(range(len(seq)), 2):
        if leq(seq[i], seq[j]):
            return i, j
    return None


def is_antichain(vectors: Sequence[PatternVector], strict: bool = True) -> bool:
    """
    Перевіряє, що жодні два різні вектори не порівнянні.

    Args:
        vectors: Вектори однієї розмірності
        strict: True для ⊑, False для ≤
    """
    relation = below if strict else leq
    distinct = list(dict.fromkeys(vectors))
    return not any(relation(x, y) or relation(y, x) for x, y in combinations(distinct, 2))


def is_descending(seq: Sequence[PatternVector]) -> bool:
    """Строго спадна послідовність відносно ⊑."""
    return all(below(b, a) and a != b for a, b in zip(seq, seq[1:]))


def pattern_add(x: PatternVector, y: PatternVector) -> PatternVector:
    check_dimensions(x, y)
    return tuple(a + b for a, b in zip(x, y))


def pattern_unit(dimension: int, index: int) -> PatternVector:
    if not 0 <= index < dimension:
        raise UsageError(f"Координата {index} поза межами розмірності {dimension}")
    return tuple(1 if i == index else 0 for i in range(dimension))


def render_pattern(x: PatternVector) -> str:
    """Текстова форма (c0,c1,…)."""
    if len(x) == 1:
        return f"({x[0]})"
    return "(" + ",".join(str(c) for c in x) + ")"


def parse_pattern(text: str) -> PatternVector:
    """
    Розбирає текстову форму (c0,c1,…).

    Raises:
        UsageError: синтаксична помилка
    """
    text = text.strip()
    if not _PATTERN_RE.match(text):
        raise UsageError(f"Неправильний формат патерну: {text!r}")
    inner = text[1:-1].strip().rstrip(",")
    if not inner:
        return ()
    return tuple(int(part) for part in inner.split(","))


__all__ = [
    'check_dimensions',
    'support',
    'leq',
    'below',
    'find_dominating_pair',
    'is_antichain',
    'is_descending',
    'pattern_add',
    'pattern_unit',
    'render_pattern',
    'parse_pattern',
]
