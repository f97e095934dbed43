"""
Зв'язок між патернами та клонами.

Кодування I(Q), сертифікати включення за патернами, перевірка ядер,
обмежене наближення ψ, явний спадний ω-ланцюг та каталог клонів.
"""

from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from downsets import DownsetEnumerator, downset_enumerator, downset_generate, downset_leq
from exceptions import SemanticError, UsageError, check_budget
from logger_config import LoggerMixin
from models import (
    BoundedBox,
    BoundedClone,
    CatalogueEntry,
    CatalogueReport,
    CertificateVerdict,
    ChainReport,
    ChainStep,
    ChainWitness,
    CloneVerdict,
    Cross,
    Downset,
    KernelReport,
    Language,
    OperationTable,
    PatternVector,
    RelationSet,
    Verdict,
)
from polymorph import PolymorphismEngine, operation_from_function, polymorph_engine
from relcore import cross_from_pattern, cross_pattern, make_cross

Signature = Tuple[Tuple[Tuple[int, ...], ...], ...]


def relation_set(language: Language, crosses: Sequence[Cross]) -> RelationSet:
    """
    Створює множину хрестів над мовою.

    Raises:
        SemanticError: хрест над іншою мовою
    """
    for rho in crosses:
        if rho.language != language:
            raise SemanticError("Хрест заданий над іншою мовою")
    return RelationSet(language=language, crosses=tuple(crosses))


def encode_I(relations: RelationSet) -> Downset:
    """I(Q): конус (N^Γ, ⊑), породжений патернами хрестів Q."""
    return downset_generate(
        relations.language.dimension,
        [cross_pattern(rho) for rho in relations.crosses],
    )


def realizable(language: Language, vector: PatternVector) -> bool:
    """Чи є вектор патерном деякого хреста над Γ."""
    if not any(vector):
        return False
    return cross_pattern(cross_from_pattern(language, vector)) == tuple(vector)


def pattern_leq_certificate(first: RelationSet, second: RelationSet) -> CertificateVerdict:
    """
    Сертифікат Pol(second) ⊆ Pol(first) за умовою I(first) ⊆ I(second).

    Достатня умова: при її невиконанні вердикт лише «inconclusive».

    Raises:
        SemanticError: множини задані над різними мовами
    """
    if first.language != second.language:
        raise SemanticError("Множини задані над різними мовами")
    left, right = encode_I(first), encode_I(second)
    verdict = Verdict.CERTIFIED if downset_leq(left, right) else Verdict.INCONCLUSIVE
    return CertificateVerdict(verdict=verdict, left=left, right=right)


class CloneOrderService(LoggerMixin):
    """Сервіс порівняння клонів через патерни та обмежений перебір."""

    def __init__(
        self,
        engine: Optional[PolymorphismEngine] = None,
        enumerator: Optional[DownsetEnumerator] = None,
    ):
        """
        Ініціалізація сервісу.

        Args:
            engine: Рушій поліморфізмів
            enumerator: Перелічувач конусів
        """
        self.engine = engine or polymorph_engine
        self.enumerator = enumerator or downset_enumerator

    def pol(self, relations: RelationSet, max_arity: int) -> BoundedClone:
        """Pol_k(Q) для множини хрестів."""
        return self.engine.pol_bounded(relations.crosses, max_arity, domain=relations.language.domain)

    def compare(self, first: RelationSet, second: RelationSet,
                max_arity: int) -> Tuple[CertificateVerdict, CloneVerdict]:
        """
        Патерновий вердикт для Pol(second) ⊆ Pol(first) разом з обмеженим перебором.

        Returns:
            (сертифікат, вердикт перебору до арності k)
        """
        certificate = pattern_leq_certificate(first, second)
        brute = self.engine.clone_leq_bounded(
            second.crosses, first.crosses, max_arity, domain=first.language.domain
        )
        if certificate.verdict == Verdict.CERTIFIED and brute.verdict == Verdict.REFUTED:
            # Неможливо за коректної реалізації
            self.logger.error("Сертифікований вердикт спростовано перебором")
        return certificate, brute

    def kernel_check(self, first: RelationSet, second: RelationSet, max_arity: int) -> KernelReport:
        """
        Якщо I(first) = I(second), перевіряє Pol_k(first) = Pol_k(second).

        Returns:
            pass/fail з роздільною операцією, або inconclusive при різних кодуваннях
        """
        if first.language != second.language:
            raise SemanticError("Множини задані над різними мовами")
        if encode_I(first) != encode_I(second):
            return KernelReport(verdict=Verdict.INCONCLUSIVE, encodings_equal=False, max_arity=max_arity)

        left, right = self.pol(first, max_arity), self.pol(second, max_arity)
        for arity in range(1, max_arity + 1):
            difference = set(left.tables[arity]).symmetric_difference(right.tables[arity])
            if difference:
                separating = OperationTable(
                    domain=first.language.domain, arity=arity, values=min(difference)
                )
                self.logger.error("Рівні кодування, але різні обмежені клони")
                return KernelReport(
                    verdict=Verdict.FAIL, encodings_equal=True,
                    max_arity=max_arity, separating=separating,
                )
        return KernelReport(verdict=Verdict.PASS, encodings_equal=True, max_arity=max_arity)

    def psi_bounded(self, relations: RelationSet, bound: int, max_arity: int) -> Downset:
        """
        Обмежене наближення ψ(Pol Q).

        Конус, породжений патернами з ящика {0…B}^Γ тих хрестів, які
        зберігає кожна f ∈ Pol_k(Q). Це надмножина справжнього ψ,
        обмеженого ящиком; більше k може лише зменшити результат.
        """
        language = relations.language
        clone = self.pol(relations, max_arity)
        operations = [f for arity in range(1, max_arity + 1) for f in clone.operations(arity)]

        kept = []
        for vector in product(range(bound + 1), repeat=language.dimension):
            if not realizable(language, vector):
                continue
            rho = cross_from_pattern(language, vector)
            if all(self.engine.preserves_cross(f, rho).preserved for f in operations):
                kept.append(vector)
        self.logger.debug(f"ψ: {len(kept)} патернів у ящику B={bound}")
        return downset_generate(language.dimension, kept)

    def build_chain_witness(self, language: Language, gamma: int, m: int) -> ChainWitness:
        """
        Свідок f_m для нетривіального γ: zero = найменший елемент A∖γ, one = найменший елемент γ.

        Raises:
            SemanticError: γ порожнє або дорівнює A
            UsageError: m < 2
            BudgetExceededError: таблиця |A|^m більша за бюджет виборів
        """
        if m < 2:
            raise UsageError(f"Ланцюг починається з m = 2, отримано {m}")
        self._check_witness_budget(language, m)
        if not 0 <= gamma < language.dimension:
            raise UsageError(f"Індекс {gamma} поза межами Γ")
        relation = language.gammas[gamma]
        if relation.is_empty or relation.is_full:
            raise SemanticError(f"Відношення {relation.name} тривіальне: потрібно ∅ ≠ γ ⊊ A")

        zero = min(a for a in language.domain.elements if not relation.contains(a))
        one = min(relation.members)
        operation = operation_from_function(
            language.domain, m,
            lambda *args: zero if sum(1 for a in args if a == zero) >= m - 1 else one,
        )
        return ChainWitness(gamma=gamma, m=m, zero=zero, one=one, operation=operation)

    def verify_chain(self, language: Language, gamma: int, max_m: int) -> ChainReport:
        """
        Для m = 2…M перевіряє f_m ▷ ρ_{m−1} і f_m ⋫ ρ_m, де ρ_m = R(γ,…,γ).

        Кожне успішне розділення є кроком строго спадного ланцюга
        Pol{ρ₁} ⊋ Pol{ρ₂} ⊋ ….

        Raises:
            BudgetExceededError: таблиця f_M більша за бюджет виборів
        """
        if max_m < 2:
            raise UsageError(f"M має бути не менше 2, отримано {max_m}")
        self._check_witness_budget(language, max_m)
        steps = []
        for m in range(2, max_m + 1):
            witness = self.build_chain_witness(language, gamma, m)
            previous = make_cross(language, [gamma] * (m - 1))
            current = make_cross(language, [gamma] * m)
            kept = self.engine.check(witness.operation, previous)
            broken = self.engine.check(witness.operation, current)
            steps.append(ChainStep(
                m=m,
                witness=witness,
                preserves_previous=kept.preserved,
                breaks_current=not broken.preserved,
                violation=None if broken.preserved else broken,
            ))
        report = ChainReport(gamma=gamma, max_m=max_m, steps=tuple(steps))
        self.logger.info(f"Ланцюг для γ #{gamma}: {report.separations} розділень до M={max_m}")
        return report

    def _check_witness_budget(self, language: Language, m: int) -> None:
        check_budget(f"таблиця свідка f_{m}", language.domain.size ** m, self.engine.settings.selection_budget)

    def chain_clones(self, language: Language, gamma: int, max_m: int, max_arity: int) -> List[Signature]:
        """Підписи Pol_k{ρ_m} для m = 1…M."""
        return [
            self.engine.pol_bounded([make_cross(language, [gamma] * m)], max_arity).signature()
            for m in range(1, max_m + 1)
        ]

    def generating_set(self, language: Language, downset: Downset) -> RelationSet:
        """Один канонічний хрест на кожну ненульову твірну конуса."""
        crosses = [cross_from_pattern(language, g) for g in downset.generators if any(g)]
        return RelationSet(language=language, crosses=tuple(crosses))

    def catalogue(self, language: Language, bound: int, max_arity: int) -> CatalogueReport:
        """
        Усі конуси ящика {0…B}^Γ, згруповані за підписом обмеженого клону.

        Pol множини дорівнює перетину Pol її хрестів, тож Pol кожного канонічного
        хреста обчислюється один раз.
        """
        box = BoundedBox(dimension=language.dimension, bound=bound)
        downsets = self.enumerator.enumerate_box_downsets(box)
        domain = language.domain

        everything = self.engine.pol_bounded([], max_arity, domain=domain)
        per_cross: Dict[PatternVector, BoundedClone] = {}
        signatures: Dict[Signature, int] = {}
        entries = []
        for downset in downsets:
            tables = {arity: set(everything.tables[arity]) for arity in range(1, max_arity + 1)}
            for g in downset.generators:
                if not any(g):
                    continue
                if g not in per_cross:
                    per_cross[g] = self.engine.pol_bounded([cross_from_pattern(language, g)], max_arity)
                for arity in tables:
                    tables[arity] &= set(per_cross[g].tables[arity])
            signature = tuple(tuple(sorted(tables[arity])) for arity in range(1, max_arity + 1))
            signature_id = signatures.setdefault(signature, len(signatures))
            entries.append(CatalogueEntry(downset=downset, signature_id=signature_id))

        self.logger.info(f"Каталог: {len(entries)} конусів, {len(signatures)} підписів")
        return CatalogueReport(
            bound=bound, max_arity=max_arity,
            entries=tuple(entries), signature_count=len(signatures),
        )


# Глобальний екземпляр сервісу
clone_order_service = CloneOrderService()

__all__ = [
    'relation_set',
    'encode_I',
    'realizable',
    'pattern_leq_certificate',
    'CloneOrderService',
    'clone_order_service',
]
