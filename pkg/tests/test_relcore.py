from itertools import chain, combinations, permutations, product

import pytest

from exceptions import BudgetExceededError, UsageError
from models import ExtensionalRelation
from relcore import (
    canonical_parameters,
    clausal_language,
    cross_contains,
    cross_duplicate,
    cross_expand,
    cross_from_pattern,
    cross_is_empty,
    cross_is_full,
    cross_pattern,
    cross_permute,
    full_relation,
    make_cross,
    make_domain,
    make_language,
    reconstruct_parameters,
    relation_permute,
)


def _subsets(size):
    elements = range(size)
    return list(chain.from_iterable(combinations(elements, r) for r in range(size + 1)))


def _languages(size, max_gammas=3):
    """Усі мови з ≤ max_gammas різних підмножин A (з точністю до порядку)."""
    subsets = _subsets(size)
    for count in range(1, max_gammas + 1):
        for chosen in combinations(subsets, count):
            yield make_language(make_domain(size), [(f"g{i}", s) for i, s in enumerate(chosen)])


def _relation(domain, arity, rows):
    return ExtensionalRelation(domain=domain, arity=arity, tuples=frozenset(rows))


class TestContainment:
    def test_second_disjunct(self, binary_language):
        rho = make_cross(binary_language, ["g", "g"])
        assert cross_contains(rho, (0, 1))
        assert not cross_contains(rho, (0, 0))

    def test_empty_parameters(self):
        language = make_language(make_domain(2), [("e", [])])
        rho = make_cross(language, ["e", "e"])
        assert not any(cross_contains(rho, x) for x in product(range(2), repeat=2))

    def test_arity_mismatch(self, binary_language):
        with pytest.raises(UsageError):
            cross_contains(make_cross(binary_language, ["g"]), (0, 1))


class TestExpansion:
    def test_unary_cross_is_its_parameter(self, binary_language):
        assert cross_expand(make_cross(binary_language, ["g"])).tuples == {(1,)}

    def test_binary_cross(self, binary_language):
        rows = cross_expand(make_cross(binary_language, ["g", "g"])).tuples
        assert rows == {(0, 1), (1, 0), (1, 1)}

    def test_full_parameter(self):
        language = make_language(make_domain(3), [("all", [0, 1, 2])])
        assert cross_expand(make_cross(language, ["all"])).tuples == {(0,), (1,), (2,)}

    def test_budget(self, binary_language):
        rho = make_cross(binary_language, ["g"] * 5)
        with pytest.raises(BudgetExceededError):
            cross_expand(rho, budget=16)


class TestFullAndEmpty:
    def test_full(self, full_language, signed_language):
        assert cross_is_full(make_cross(full_language, ["g", "all"]))
        assert not cross_is_full(make_cross(signed_language, ["one", "zero"]))

    def test_empty_parameter_is_not_full(self):
        language = make_language(make_domain(2), [("e", []), ("g", [1])])
        assert not cross_is_full(make_cross(language, ["e"]))
        assert cross_is_empty(make_cross(language, ["e", "e"]))
        assert not cross_is_empty(make_cross(language, ["e", "g"]))

    def test_full_cross_is_not_empty(self, full_language):
        assert not cross_is_empty(make_cross(full_language, ["all"]))

    @pytest.mark.parametrize("size", [2, 3])
    def test_agrees_with_expansion(self, size):
        for language in _languages(size, max_gammas=2):
            for arity in (1, 2):
                for params in product(range(language.dimension), repeat=arity):
                    rho = make_cross(language, list(params))
                    rows = cross_expand(rho).tuples
                    assert cross_is_full(rho) == (len(rows) == size ** arity)
                    assert cross_is_empty(rho) == (not rows)
                    if language.full_index() is None:
                        assert not cross_is_full(rho)
                        assert len(rows) < size ** arity


class TestPattern:
    def test_counts(self, signed_language):
        assert cross_pattern(make_cross(signed_language, ["one", "one", "zero"])) == (2, 1)
        assert cross_pattern(make_cross(signed_language, ["one"])) == (1, 0)

    def test_full_cross_counts_only_full(self, full_language):
        assert cross_pattern(make_cross(full_language, ["g", "all"])) == (0, 2)
        assert canonical_parameters(make_cross(full_language, ["g", "all"])) == (1, 1)

    def test_proper_cross_keeps_parameters(self, signed_language):
        # R(zero, one) не повний: кортежу (1, 0) немає
        rho = make_cross(signed_language, ["zero", "one"])
        assert canonical_parameters(rho) == (1, 0)
        assert cross_pattern(rho) == (1, 1)

    def test_sum_is_arity(self, signed_language):
        for params in product(range(2), repeat=3):
            rho = make_cross(signed_language, list(params))
            assert sum(cross_pattern(rho)) == rho.arity


class TestReconstruction:
    def test_binary_cross(self, binary_language):
        relation = _relation(binary_language.domain, 2, [(0, 1), (1, 0), (1, 1)])
        assert reconstruct_parameters(relation, binary_language) == (0, 0)

    def test_full_relation(self, full_language):
        relation = full_relation(full_language.domain, 2)
        assert reconstruct_parameters(relation, full_language) == (1, 1)

    def test_full_relation_without_full_gamma(self, binary_language):
        assert reconstruct_parameters(full_relation(binary_language.domain, 2), binary_language) is None

    def test_not_a_box(self, signed_language, binary_language):
        relation = _relation(signed_language.domain, 2, [(0, 0)])
        assert reconstruct_parameters(relation, signed_language) is None
        assert reconstruct_parameters(relation, binary_language) is None

    def test_other_domain(self, binary_language):
        relation = _relation(make_domain(3), 1, [(1,)])
        with pytest.raises(UsageError):
            reconstruct_parameters(relation, binary_language)

    @pytest.mark.parametrize("size", [2, 3])
    def test_round_trip_exhaustive(self, size):
        for language in _languages(size):
            for arity in (1, 2, 3):
                for params in product(range(language.dimension), repeat=arity):
                    rho = make_cross(language, list(params))
                    relation = cross_expand(rho)
                    found = reconstruct_parameters(relation, language)
                    if cross_is_full(rho):
                        full = language.full_index()
                        assert found == (None if full is None else (full,) * arity)
                        continue
                    assert found == rho.params
                    assert cross_expand(make_cross(language, list(found))).tuples == relation.tuples

    def test_binary_relations_against_search(self):
        domain = make_domain(2)
        language = make_language(domain, [(f"g{i}", s) for i, s in enumerate(_subsets(2))])
        cells = list(product(range(2), repeat=2))
        accepted = 0
        for mask in range(16):
            rows = [x for bit, x in enumerate(cells) if mask >> bit & 1]
            relation = _relation(domain, 2, rows)
            candidates = [
                params for params in product(range(language.dimension), repeat=2)
                if cross_expand(make_cross(language, list(params))).tuples == relation.tuples
            ]
            found = reconstruct_parameters(relation, language)
            assert (found is not None) == bool(candidates)
            if found is not None:
                accepted += 1
                assert found in candidates
        # дев'ять непорожніх ящиків-доповнень і A²
        assert accepted == 10


class TestTransformations:
    def test_permute_keeps_pattern(self, signed_language):
        rho = make_cross(signed_language, ["one", "zero", "one"])
        for sigma in permutations(range(3)):
            moved = cross_permute(rho, sigma)
            assert cross_pattern(moved) == cross_pattern(rho)
            expected = relation_permute(cross_expand(rho), sigma)
            assert cross_expand(moved).tuples == expected.tuples

    def test_permute_rejects_non_permutation(self, signed_language):
        with pytest.raises(UsageError):
            cross_permute(make_cross(signed_language, ["one", "zero"]), [0, 0])

    def test_duplicate_grows_pattern(self, signed_language):
        rho = make_cross(signed_language, ["one", "zero"])
        assert cross_duplicate(rho, 1).params == (0, 1, 1)
        assert cross_pattern(cross_duplicate(rho, 0)) == (2, 1)

    def test_from_pattern(self, signed_language):
        assert cross_from_pattern(signed_language, (2, 1)).params == (0, 0, 1)
        with pytest.raises(UsageError):
            cross_from_pattern(signed_language, (0, 0))

    def test_empty_cross_rejected(self, binary_language):
        with pytest.raises(UsageError):
            make_cross(binary_language, [])


class TestLanguages:
    def test_duplicate_extension(self):
        with pytest.raises(UsageError):
            make_language(make_domain(2), [("a", [1]), ("b", [1])])

    def test_out_of_range_element(self):
        with pytest.raises(UsageError):
            make_language(make_domain(2), [("g", [2])])

    def test_zero_domain(self):
        with pytest.raises(UsageError):
            make_domain(0)

    def test_clausal(self):
        language = clausal_language(3)
        assert [g.name for g in language.gammas] == ["ge1", "ge2", "le0", "le1"]
        assert language.gammas[language.index_of("ge1")].members == {1, 2}
        assert language.gammas[language.index_of("le0")].members == {0}
