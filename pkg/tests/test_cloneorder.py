import random
from itertools import permutations, product

import pytest

from cloneorder import (
    CloneOrderService,
    encode_I,
    pattern_leq_certificate,
    realizable,
    relation_set,
)
from config import AppConfig
from downsets import DownsetEnumerator, downset_generate, downset_leq
from exceptions import BudgetExceededError, SemanticError, UsageError
from models import BoundedBox, Verdict
from patterns import below, leq
from polymorph import PolymorphismEngine, render_operation
from relcore import (
    cross_duplicate,
    cross_expand,
    cross_from_pattern,
    cross_pattern,
    cross_permute,
    make_cross,
    make_domain,
    make_language,
)


@pytest.fixture
def service():
    settings = AppConfig()
    return CloneOrderService(PolymorphismEngine(settings), DownsetEnumerator(settings))


def _set(language, *crosses):
    return relation_set(language, [make_cross(language, params) for params in crosses])


class TestEncoding:
    def test_lower_pattern_absorbed(self, binary_language):
        relations = _set(binary_language, ["g", "g"], ["g"])
        assert encode_I(relations).generators == ((2,),)

    def test_empty_set(self, binary_language):
        assert encode_I(relation_set(binary_language, [])).is_empty

    def test_incomparable(self, signed_language):
        relations = _set(signed_language, ["one"], ["zero"])
        assert encode_I(relations).generators == ((0, 1), (1, 0))

    def test_foreign_language(self, binary_language, signed_language):
        with pytest.raises(SemanticError):
            relation_set(binary_language, [make_cross(signed_language, ["one"])])

    def test_realizable(self, signed_language, full_language):
        assert realizable(signed_language, (2, 1))
        assert not realizable(signed_language, (0, 0))
        # у (1,1) повний параметр перетворює хрест на (0,2)
        assert not realizable(full_language, (1, 1))
        assert realizable(full_language, (0, 2))


class TestCertificate:
    def test_certified(self, binary_language):
        verdict = pattern_leq_certificate(_set(binary_language, ["g"]), _set(binary_language, ["g", "g"]))
        assert verdict.verdict == Verdict.CERTIFIED

    def test_inconclusive(self, binary_language):
        verdict = pattern_leq_certificate(_set(binary_language, ["g", "g"]), _set(binary_language, ["g"]))
        assert verdict.verdict == Verdict.INCONCLUSIVE

    def test_reflexive(self, signed_language):
        relations = _set(signed_language, ["one", "zero"], ["zero"])
        assert pattern_leq_certificate(relations, relations).verdict == Verdict.CERTIFIED

    def test_different_languages(self, binary_language, signed_language):
        with pytest.raises(SemanticError):
            pattern_leq_certificate(_set(binary_language, ["g"]), _set(signed_language, ["one"]))

    def test_compare(self, service, binary_language):
        first, second = _set(binary_language, ["g"]), _set(binary_language, ["g", "g"])
        certificate, brute = service.compare(first, second, 2)
        assert certificate.verdict == Verdict.CERTIFIED
        assert brute.verdict == Verdict.PASS

        certificate, brute = service.compare(second, first, 2)
        assert certificate.verdict == Verdict.INCONCLUSIVE
        assert brute.verdict == Verdict.REFUTED
        assert render_operation(brute.counterexample) == "2:0001"

    def test_random_certificates_are_sound(self, service, signed_language):
        rng = random.Random(20261017)
        vectors = [v for v in product(range(4), repeat=2) if any(v)]
        violations = 0
        for _ in range(200):
            first = relation_set(signed_language, [
                cross_from_pattern(signed_language, rng.choice(vectors)) for _ in range(rng.randint(1, 2))
            ])
            second = relation_set(signed_language, [
                cross_from_pattern(signed_language, rng.choice(vectors)) for _ in range(rng.randint(1, 2))
            ])
            certificate, brute = service.compare(first, second, 3)
            if certificate.verdict == Verdict.CERTIFIED and brute.verdict == Verdict.REFUTED:
                violations += 1
            if encode_I(first) == encode_I(second):
                assert service.pol(first, 3).signature() == service.pol(second, 3).signature()
        assert violations == 0


class TestMonotonicity:
    def test_pattern_order_reverses_clone_order(self, service, signed_language):
        vectors = [v for v in product(range(4), repeat=2) if any(v)]
        clones = {v: service.pol(relation_set(signed_language, [cross_from_pattern(signed_language, v)]), 3)
                  for v in vectors}
        for smaller, larger in product(vectors, repeat=2):
            if below(smaller, larger):
                assert clones[larger].issubset(clones[smaller])

    @pytest.mark.parametrize("extensions", [([1], [0]), ([1], [0, 1]), ([], [1])])
    def test_duplication_shrinks_clone(self, service, extensions):
        language = make_language(make_domain(2), [("a", extensions[0]), ("b", extensions[1])])
        clones = {}

        def pol(rho):
            if rho.params not in clones:
                clones[rho.params] = service.pol(relation_set(language, [rho]), 3)
            return clones[rho.params]

        for arity in range(1, 4):
            for params in product(range(2), repeat=arity):
                rho = make_cross(language, list(params))
                for position in range(arity):
                    grown = cross_duplicate(rho, position)
                    assert pol(grown).issubset(pol(rho))
                    assert leq(cross_pattern(rho), cross_pattern(grown))
                    assert sum(cross_pattern(grown)) == sum(cross_pattern(rho)) + 1

    @pytest.mark.parametrize("extensions", [([1], [0]), ([1], [0, 1]), ([], [1])])
    def test_permutation_keeps_clone(self, service, extensions):
        language = make_language(make_domain(2), [("a", extensions[0]), ("b", extensions[1])])
        for arity in range(1, 4):
            for params in product(range(2), repeat=arity):
                rho = make_cross(language, list(params))
                expected = service.pol(relation_set(language, [rho]), 3).signature()
                for sigma in permutations(range(arity)):
                    moved = cross_permute(rho, list(sigma))
                    assert cross_pattern(moved) == cross_pattern(rho)
                    assert service.pol(relation_set(language, [moved]), 3).signature() == expected


class TestKernel:
    def test_swapped_coordinates(self, service, signed_language):
        report = service.kernel_check(
            _set(signed_language, ["one", "zero"]), _set(signed_language, ["zero", "one"]), 2
        )
        assert report.encodings_equal
        assert report.verdict == Verdict.PASS

    def test_absorbed_generator(self, service, binary_language):
        report = service.kernel_check(
            _set(binary_language, ["g"], ["g", "g"]), _set(binary_language, ["g", "g"]), 3
        )
        assert report.encodings_equal
        assert report.verdict == Verdict.PASS

    def test_empty_sets(self, service, binary_language):
        empty = relation_set(binary_language, [])
        assert service.kernel_check(empty, empty, 2).verdict == Verdict.PASS

    def test_different_encodings(self, service, binary_language):
        report = service.kernel_check(_set(binary_language, ["g"]), _set(binary_language, ["g", "g"]), 2)
        assert not report.encodings_equal
        assert report.verdict == Verdict.INCONCLUSIVE


class TestPsi:
    def test_contains_own_patterns(self, service, binary_language):
        downset = service.psi_bounded(_set(binary_language, ["g", "g"]), 3, 2)
        assert downset.dimension == 1
        assert len(downset.generators) == 1
        top = downset.generators[0][0]
        assert top >= 2
        # k = 2 не бачить різниці між R(g,g) і R(g,g,g)
        assert top == 3

    def test_larger_arity_only_shrinks(self, service, binary_language):
        relations = _set(binary_language, ["g", "g"])
        assert service.psi_bounded(relations, 3, 3).generators == ((2,),)

    def test_all_operations(self, service, binary_language):
        assert service.psi_bounded(relation_set(binary_language, []), 3, 2).is_empty

    def test_full_relation_kept(self, service, full_language):
        downset = service.psi_bounded(relation_set(full_language, []), 2, 2)
        assert downset.generators == ((0, 2),)

    def test_empty_language(self, service):
        language = make_language(make_domain(2), [])
        assert service.psi_bounded(relation_set(language, []), 3, 1).is_empty

    def test_monotone_in_clone(self, service, signed_language):
        pool = [relation_set(signed_language, [])] + [
            relation_set(signed_language, [cross_from_pattern(signed_language, v)])
            for v in product(range(3), repeat=2) if any(v)
        ]
        clones = [service.pol(relations, 2) for relations in pool]
        psis = [service.psi_bounded(relations, 2, 2) for relations in pool]
        for i, j in product(range(len(pool)), repeat=2):
            if clones[i].issubset(clones[j]):
                assert downset_leq(psis[j], psis[i])


class TestChain:
    def test_witness_is_min(self, service, binary_language):
        witness = service.build_chain_witness(binary_language, 0, 2)
        assert render_operation(witness.operation) == "2:0001"
        assert (witness.zero, witness.one) == (0, 1)

    def test_ternary_witness(self, service, ternary_language):
        witness = service.build_chain_witness(ternary_language, 1, 2)
        assert (witness.zero, witness.one) == (0, 1)
        for x, y in product(range(3), repeat=2):
            expected = 0 if 0 in (x, y) else 1
            assert witness.operation.value((x, y)) == expected

    def test_bad_arguments(self, service, full_language, binary_language):
        with pytest.raises(UsageError):
            service.build_chain_witness(binary_language, 0, 1)
        with pytest.raises(SemanticError):
            service.build_chain_witness(full_language, 1, 2)
        empty = make_language(make_domain(2), [("e", [])])
        with pytest.raises(SemanticError):
            service.build_chain_witness(empty, 0, 2)

    def test_first_step(self, service, binary_language):
        report = service.verify_chain(binary_language, 0, 2)
        assert report.separations == 1
        step = report.steps[0]
        assert step.preserves_previous and step.breaks_current
        assert step.violation.image == (0, 0)

    @pytest.mark.parametrize("size,members", [(2, [1]), (3, [1]), (3, [1, 2])])
    def test_four_steps(self, service, size, members):
        language = make_language(make_domain(size), [("g", members)])
        report = service.verify_chain(language, 0, 4)
        assert report.separations == 3
        assert report.verdict == Verdict.PASS
        for step in report.steps:
            assert step.violation is not None
            assert len(step.violation.selection) == step.m

    def test_matches_extensional_check(self, service, binary_language):
        engine = service.engine
        for m in range(2, 5):
            witness = service.build_chain_witness(binary_language, 0, m)
            previous = cross_expand(make_cross(binary_language, ["g"] * (m - 1)))
            current = cross_expand(make_cross(binary_language, ["g"] * m))
            assert engine.preserves(witness.operation, previous).preserved
            assert not engine.preserves(witness.operation, current).preserved

    def test_chain_clones_strictly_decrease(self, service, binary_language):
        signatures = service.chain_clones(binary_language, 0, 3, 3)
        assert len(set(signatures)) == 3

    def test_witness_table_budget(self, binary_language):
        settings = AppConfig(selection_budget=1000)
        service = CloneOrderService(PolymorphismEngine(settings), DownsetEnumerator(settings))
        with pytest.raises(BudgetExceededError):
            service.verify_chain(binary_language, 0, 24)
        with pytest.raises(BudgetExceededError):
            service.build_chain_witness(binary_language, 0, 24)
        assert service.verify_chain(binary_language, 0, 6).separations == 5


class TestCatalogue:
    def test_single_relation(self, service, binary_language):
        report = service.catalogue(binary_language, 3, 2)
        assert report.downset_count == 8
        assert report.inequality_holds
        assert report.signature_count <= report.downset_count

    def test_inequality_and_chain_signatures(self, service, binary_language, signed_language):
        report = service.catalogue(binary_language, 3, 3)
        assert report.inequality_holds
        assert report.signature_count >= 3
        signed = service.catalogue(signed_language, 3, 3)
        assert signed.inequality_holds

    def test_empty_language(self, service):
        language = make_language(make_domain(2), [])
        report = service.catalogue(language, 3, 2)
        assert report.downset_count == 2
        assert report.signature_count == 1

    def test_zero_bound(self, service, binary_language):
        report = service.catalogue(binary_language, 0, 2)
        assert report.downset_count == 2
        assert report.signature_count == 1

    def test_generating_set(self, service, signed_language):
        downset = downset_generate(2, [(2, 0), (1, 1), (0, 0)])
        relations = service.generating_set(signed_language, downset)
        assert [rho.params for rho in relations.crosses] == [(0, 1), (0, 0)]
        assert encode_I(relations) == downset_generate(2, [(2, 0), (1, 1)])

    def test_catalogue_box(self, service, binary_language):
        count = service.enumerator.count_box_downsets(BoundedBox(dimension=1, bound=3))
        assert service.catalogue(binary_language, 3, 1).downset_count == count
