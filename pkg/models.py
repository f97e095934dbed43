"""
Модуль з моделями даних.

Використовує Pydantic для валідації та типізації даних. Усі моделі
незмінні після створення (frozen), тож їх можна вільно передавати між
обчисленнями. Вектори патернів зберігаються як звичайні кортежі цілих
чисел: вони живуть у гарячих циклах перебору.
"""

from enum import Enum
from typing import Dict, Iterator, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sortedcontainers import SortedList

# Вектор з N^Γ: кількість входжень кожного γ
PatternVector = Tuple[int, ...]
# Кортеж елементів носія
Row = Tuple[int, ...]


class Domain(BaseModel):
    """Носій A = {0, …, size−1}."""

    model_config = ConfigDict(frozen=True)

    size: int = Field(ge=1, description="Розмір носія |A|")

    @property
    def elements(self) -> range:
        return range(self.size)


class UnaryRelation(BaseModel):
    """Іменоване унарне відношення γ ⊆ A, задане характеристичним вектором."""

    model_config = ConfigDict(frozen=True, str_strip_whitespace=True)

    name: str = Field(min_length=1)
    bits: Tuple[bool, ...]

    @property
    def members(self) -> frozenset:
        return frozenset(a for a, bit in enumerate(self.bits) if bit)

    @property
    def is_full(self) -> bool:
        return all(self.bits)

    @property
    def is_empty(self) -> bool:
        return not any(self.bits)

    def contains(self, a: int) -> bool:
        return self.bits[a]


class Language(BaseModel):
    """Унарна реляційна мова Γ над носієм; порядок γ фіксує координати патернів."""

    model_config = ConfigDict(frozen=True)

    domain: Domain
    gammas: Tuple[UnaryRelation, ...] = ()

    @model_validator(mode='after')
    def validate_gammas(self) -> 'Language':
        """Перевіряє довжини, унікальність імен та попарну різність розширень."""
        names = set()
        extensions = set()
        for gamma in self.gammas:
            if len(gamma.bits) != self.domain.size:
                raise ValueError(f"Відношення {gamma.name} має довжину {len(gamma.bits)}, а |A| = {self.domain.size}")
            if gamma.name in names:
                raise ValueError(f"Повторне ім'я відношення: {gamma.name}")
            if gamma.bits in extensions:
                raise ValueError(f"Повторне розширення відношення: {gamma.name}")
            names.add(gamma.name)
            extensions.add(gamma.bits)
        return self

    @property
    def dimension(self) -> int:
        return len(self.gammas)

    def index_of(self, name: str) -> Optional[int]:
        for index, gamma in enumerate(self.gammas):
            if gamma.name == name:
                return index
        return None

    def index_of_bits(self, bits: Tuple[bool, ...]) -> Optional[int]:
        for index, gamma in enumerate(self.gammas):
            if gamma.bits == bits:
                return index
        return None

    def full_index(self) -> Optional[int]:
        """Позиція A у Γ або None."""
        return self.index_of_bits((True,) * self.domain.size)


class Cross(BaseModel):
    """Хрест R(γ₁,…,γₙ), збережений інтенсіонально своїм кортежем параметрів."""

    model_config = ConfigDict(frozen=True)

    language: Language
    params: Tuple[int, ...]

    @field_validator('params')
    @classmethod
    def validate_nonempty(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if not v:
            raise ValueError("Хрест має арність не менше 1")
        return v

    @model_validator(mode='after')
    def validate_indices(self) -> 'Cross':
        for index in self.params:
            if not 0 <= index < self.language.dimension:
                raise ValueError(f"Індекс параметра {index} поза межами Γ")
        return self

    @property
    def arity(self) -> int:
        return len(self.params)

    @property
    def domain(self) -> Domain:
        return self.language.domain

    def parameter(self, position: int) -> UnaryRelation:
        return self.language.gammas[self.params[position]]


class ExtensionalRelation(BaseModel):
    """Відношення ρ ⊆ Aⁿ, задане множиною кортежів."""

    model_config = ConfigDict(frozen=True)

    domain: Domain
    arity: int = Field(ge=1)
    tuples: frozenset[Row] = frozenset()

    @model_validator(mode='after')
    def validate_tuples(self) -> 'ExtensionalRelation':
        for row in self.tuples:
            if len(row) != self.arity:
                raise ValueError(f"Кортеж {row} має довжину {len(row)}, очікувалось {self.arity}")
            if any(not 0 <= a < self.domain.size for a in row):
                raise ValueError(f"Кортеж {row} містить елемент поза A")
        return self

    def sorted_rows(self) -> list[Row]:
        return sorted(self.tuples)


class OperationTable(BaseModel):
    """k-арна операція на A як таблиця значень довжини |A|^k (останній аргумент найшвидший)."""

    model_config = ConfigDict(frozen=True)

    domain: Domain
    arity: int = Field(ge=1)
    values: Tuple[int, ...]

    @model_validator(mode='after')
    def validate_values(self) -> 'OperationTable':
        expected = self.domain.size ** self.arity
        if len(self.values) != expected:
            raise ValueError(f"Таблиця має {len(self.values)} значень, очікувалось {expected}")
        if any(not 0 <= v < self.domain.size for v in self.values):
            raise ValueError("Значення операції поза A")
        return self

    def index(self, args: Row) -> int:
        position = 0
        for a in args:
            position = position * self.domain.size + a
        return position

    def value(self, args: Row) -> int:
        return self.values[self.index(args)]


class BoundedClone(BaseModel):
    """Обрізання Pol(Q) до арностей ≤ k; таблиці кожної арності відсортовані."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    domain: Domain
    max_arity: int = Field(ge=1)
    tables: Dict[int, SortedList]

    def contains(self, operation: OperationTable) -> bool:
        per_arity = self.tables.get(operation.arity)
        return per_arity is not None and operation.values in per_arity

    def count(self, arity: Optional[int] = None) -> int:
        if arity is not None:
            return len(self.tables.get(arity, ()))
        return sum(len(tables) for tables in self.tables.values())

    def operations(self, arity: int) -> Iterator[OperationTable]:
        for values in self.tables.get(arity, ()):
            yield OperationTable.model_construct(domain=self.domain, arity=arity, values=values)

    def signature(self) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
        """Канонічний підпис: відсортовані таблиці для кожної арності 1…k."""
        return tuple(tuple(self.tables.get(n, ())) for n in range(1, self.max_arity + 1))

    def issubset(self, other: 'BoundedClone') -> bool:
        for arity, tables in self.tables.items():
            others = other.tables.get(arity, SortedList())
            if any(values not in others for values in tables):
                return False
        return True


class Downset(BaseModel):
    """Скінченно породжений нижній конус (N^d, ⊑) у вигляді антиланцюга твірних."""

    model_config = ConfigDict(frozen=True)

    dimension: int = Field(ge=0)
    generators: Tuple[PatternVector, ...] = ()

    @model_validator(mode='after')
    def validate_generators(self) -> 'Downset':
        for g in self.generators:
            if len(g) != self.dimension:
                raise ValueError(f"Твірна {g} має розмірність {len(g)}, очікувалось {self.dimension}")
            if any(c < 0 for c in g):
                raise ValueError(f"Твірна {g} містить від'ємні координати")
        return self

    @property
    def is_empty(self) -> bool:
        return not self.generators


class BoundedBox(BaseModel):
    """Ящик {0…B}^d з обмеженим порядком ⊑."""

    model_config = ConfigDict(frozen=True)

    dimension: int = Field(ge=0)
    bound: int = Field(ge=0)

    @property
    def size(self) -> int:
        return (self.bound + 1) ** self.dimension


class RelationSet(BaseModel):
    """Скінченна множина Q ⊆ DD(Γ) хрестів над однією мовою."""

    model_config = ConfigDict(frozen=True)

    language: Language
    crosses: Tuple[Cross, ...] = ()

    @model_validator(mode='after')
    def validate_language(self) -> 'RelationSet':
        for rho in self.crosses:
            if rho.language != self.language:
                raise ValueError("Усі хрести множини мають бути над однією мовою")
        return self


class ChainWitness(BaseModel):
    """Свідок f_m: «zero», якщо щонайменше m−1 аргументів дорівнюють zero, інакше «one»."""

    model_config = ConfigDict(frozen=True)

    gamma: int = Field(ge=0)
    m: int = Field(ge=2)
    zero: int = Field(ge=0)
    one: int = Field(ge=0)
    operation: OperationTable


class Workspace(BaseModel):
    """Розібраний робочий простір: носій, мова, іменовані хрести та множини."""

    model_config = ConfigDict(frozen=True)

    domain: Domain
    language: Language
    crosses: Dict[str, Cross] = Field(default_factory=dict)
    sets: Dict[str, RelationSet] = Field(default_factory=dict)
    set_members: Dict[str, Tuple[str, ...]] = Field(default_factory=dict)


class Verdict(str, Enum):
    """Вердикти звітів."""

    CERTIFIED = "certified"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"
    PASS = "pass"
    FAIL = "fail"


class PreservationResult(BaseModel):
    """Результат перевірки f ▷ ρ; при порушенні містить вибір рядків та образ."""

    model_config = ConfigDict(frozen=True)

    preserved: bool
    selection: Optional[Tuple[Row, ...]] = None
    image: Optional[Row] = None


class CloneVerdict(BaseModel):
    """Вердикт обмеженого порівняння Pol(Q1) ⊆ Pol(Q2)."""

    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    max_arity: int
    counterexample: Optional[OperationTable] = None
    violated_index: Optional[int] = None


class CertificateVerdict(BaseModel):
    """Вердикт патернового сертифіката для Pol(Q2) ⊆ Pol(Q1)."""

    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    left: Downset
    right: Downset


class KernelReport(BaseModel):
    """Перевірка ker I ⊆ ker Pol для пари множин."""

    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    encodings_equal: bool
    max_arity: int
    separating: Optional[OperationTable] = None


class ChainStep(BaseModel):
    """Одне строге розділення Pol{ρ_{m−1}} ⊋ Pol{ρ_m}."""

    model_config = ConfigDict(frozen=True)

    m: int
    witness: ChainWitness
    preserves_previous: bool
    breaks_current: bool
    violation: Optional[PreservationResult] = None

    @property
    def separates(self) -> bool:
        return self.preserves_previous and self.breaks_current


class ChainReport(BaseModel):
    """Звіт перевірки спадного ω-ланцюга до M."""

    model_config = ConfigDict(frozen=True)

    gamma: int
    max_m: int
    steps: Tuple[ChainStep, ...]

    @property
    def separations(self) -> int:
        return sum(1 for step in self.steps if step.separates)

    @property
    def verdict(self) -> Verdict:
        return Verdict.PASS if self.separations == self.max_m - 1 else Verdict.FAIL


class CatalogueEntry(BaseModel):
    """Нижній конус ящика разом з номером підпису його обмеженого клону."""

    model_config = ConfigDict(frozen=True)

    downset: Downset
    signature_id: int


class CatalogueReport(BaseModel):
    """Каталог: кількість конусів, кількість різних підписів і нерівність між ними."""

    model_config = ConfigDict(frozen=True)

    bound: int
    max_arity: int
    entries: Tuple[CatalogueEntry, ...]
    signature_count: int

    @property
    def downset_count(self) -> int:
        return len(self.entries)

    @property
    def inequality_holds(self) -> bool:
        return self.signature_count <= self.downset_count


class CountReport(BaseModel):
    """Кількість нижніх конусів ящика та (за бажанням) відповідь оракула."""

    model_config = ConfigDict(frozen=True)

    box: BoundedBox
    count: int
    oracle: Optional[int] = None

    @property
    def agrees(self) -> Optional[bool]:
        return None if self.oracle is None else self.oracle == self.count
