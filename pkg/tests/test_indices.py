import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mzvstar.errors import DomainError
from mzvstar.indices import (
    BinaryWord,
    Index,
    IndexCombination,
    WordCombination,
    contractions,
    harmonic_product,
    index_to_word,
    shuffle_product,
    word_to_index,
)

from helpers import truncated_nested_sum

indices_strategy = st.lists(st.integers(min_value=1, max_value=4), min_size=0, max_size=4).map(
    lambda parts: Index(parts)
)
words_strategy = st.text(alphabet="xy", min_size=0, max_size=6).map(BinaryWord)


class TestIndex:
    def test_parse_and_str(self):
        assert Index.parse("1,2").parts == (1, 2)
        assert str(Index([3, 1, 2])) == "3,1,2"
        assert Index.parse("").is_empty

    def test_parse_garbage(self):
        with pytest.raises(DomainError):
            Index.parse("1,x")
        with pytest.raises(DomainError):
            Index([0, 2])

    def test_derived_quantities(self):
        k = Index([2, 1, 1])
        assert (k.depth, k.weight, k.trailing_ones) == (3, 4, 2)
        assert not k.is_admissible
        assert Index([1, 2]).is_admissible
        assert not Index().is_admissible


class TestHarmonicProduct:
    @pytest.mark.parametrize("k,l", [(2, 3), (1, 4), (3, 5)])
    def test_depth_one_pair(self, k, l):
        got = harmonic_product(Index([k]), Index([l]))
        expected = IndexCombination(
            {Index([k, l]): 1, Index([l, k]): 1, Index([k + l]): 1}
        )
        assert got == expected

    def test_divergent_square(self):
        got = harmonic_product(Index([1]), Index([1]))
        assert got == IndexCombination({Index([1, 1]): 2, Index([2]): 1})

    def test_unit(self):
        u = IndexCombination({Index([2, 1]): Fraction(3, 2), Index([4]): -1})
        assert harmonic_product(IndexCombination.of(Index()), u) == u

    @given(indices_strategy, indices_strategy)
    @settings(max_examples=60, deadline=None)
    def test_commutative(self, a, b):
        assert harmonic_product(a, b) == harmonic_product(b, a)

    @given(indices_strategy, indices_strategy, indices_strategy)
    @settings(max_examples=40, deadline=None)
    def test_associative(self, a, b, c):
        left = harmonic_product(harmonic_product(a, b), c)
        right = harmonic_product(a, harmonic_product(b, c))
        assert left == right

    @pytest.mark.parametrize(
        "u,v",
        [((2,), (3,)), ((1,), (2,)), ((1, 2), (2,)), ((2, 1), (1, 1)), ((1, 1), (1, 2))],
    )
    def test_truncated_sum_homomorphism(self, u, v):
        # the defining decomposition of the double summation range, exactly over
        # rationals at every cap
        cap = 9
        product = harmonic_product(Index(u), Index(v))
        lhs = truncated_nested_sum(u, cap) * truncated_nested_sum(v, cap)
        rhs = sum(
            coeff * truncated_nested_sum(term.parts, cap)
            for term, coeff in product.items()
        )
        assert lhs == rhs

    def test_weight_preserved(self):
        total = Index([2, 1]).weight + Index([1, 3]).weight
        for term, _ in harmonic_product(Index([2, 1]), Index([1, 3])).items():
            assert term.weight == total


class TestShuffleProduct:
    def test_worked_cases(self):
        assert shuffle_product(BinaryWord("y"), BinaryWord("y")) == WordCombination(
            {BinaryWord("yy"): 2}
        )
        assert shuffle_product(BinaryWord("x"), BinaryWord("y")) == WordCombination(
            {BinaryWord("xy"): 1, BinaryWord("yx"): 1}
        )
        assert shuffle_product(BinaryWord("xy"), BinaryWord("y")) == WordCombination(
            {BinaryWord("yxy"): 1, BinaryWord("xyy"): 2}
        )

    @given(words_strategy, words_strategy)
    @settings(max_examples=60, deadline=None)
    def test_commutative(self, a, b):
        assert shuffle_product(a, b) == shuffle_product(b, a)

    @given(words_strategy, words_strategy, words_strategy)
    @settings(max_examples=30, deadline=None)
    def test_associative(self, a, b, c):
        left = shuffle_product(shuffle_product(a, b), c)
        right = shuffle_product(a, shuffle_product(b, c))
        assert left == right

    def test_term_count(self):
        # shuffles of disjoint-length words number C(m+n, n) with multiplicity
        total = sum(
            coeff for _, coeff in shuffle_product(BinaryWord("xy"), BinaryWord("xyy")).items()
        )
        assert total == 10  # C(5, 2)


class TestWords:
    @pytest.mark.parametrize(
        "parts,word",
        [((2,), "xy"), ((1, 2), "xyy"), ((2, 1), "yxy"), ((), ""), ((3, 1, 2), "xyyxxy")],
    )
    def test_conversions(self, parts, word):
        assert index_to_word(Index(parts)) == word
        assert word_to_index(word) == Index(parts)

    def test_admissible_iff_convergent(self):
        for parts in [(2,), (1, 2), (2, 1), (1, 1), (3, 1, 2)]:
            k = Index(parts)
            assert k.is_admissible == index_to_word(k).is_convergent

    @given(indices_strategy)
    @settings(max_examples=80, deadline=None)
    def test_round_trip(self, index):
        assert word_to_index(index_to_word(index)) == index

    def test_bad_words_rejected(self):
        with pytest.raises(DomainError):
            word_to_index("yx")
        with pytest.raises(DomainError):
            word_to_index("xyz")
        with pytest.raises(DomainError):
            BinaryWord("ab")


class TestContractions:
    def test_worked_cases(self):
        assert contractions(Index([1, 2])) == [Index([1, 2]), Index([3])]
        assert contractions(Index([5])) == [Index([5])]
        assert contractions(Index([1, 1, 2])) == [
            Index([1, 1, 2]),
            Index([2, 2]),
            Index([1, 3]),
            Index([4]),
        ]

    def test_count_and_weight(self):
        for parts in [(1, 1), (2, 1, 3), (1, 1, 1, 1), (2, 2, 2, 1, 1)]:
            index = Index(parts)
            out = contractions(index)
            assert len(out) == 2 ** (index.depth - 1)
            assert out[0] == index
            assert all(c.weight == index.weight for c in out)

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            contractions(Index())


class TestCombinations:
    def test_pruning_and_equality(self):
        a = IndexCombination({Index([2]): Fraction(1, 2), Index([3]): 0})
        assert len(a) == 1
        assert a == IndexCombination({Index([2]): Fraction(1, 2)})

    def test_linear_ops(self):
        a = IndexCombination.of(Index([2]), 2)
        b = IndexCombination.of(Index([3]))
        combo = a + b * Fraction(1, 3) - a
        assert combo == IndexCombination({Index([3]): Fraction(1, 3)})
        assert not (combo - combo)

    def test_json_form(self):
        combo = IndexCombination(
            {Index([2, 1]): Fraction(1, 3), Index([4]): Fraction(-2)}
        )
        assert combo.to_json() == [
            {"term": "2,1", "coefficient": "1/3"},
            {"term": "4", "coefficient": "-2"},
        ]

    def test_random_bilinearity(self):
        rng = random.Random(11)
        basis = [Index([1]), Index([2]), Index([1, 2])]
        for _ in range(10):
            u = IndexCombination({b: Fraction(rng.randint(-3, 3)) for b in basis})
            v = IndexCombination({b: Fraction(rng.randint(-3, 3)) for b in basis})
            w = IndexCombination({b: Fraction(rng.randint(-3, 3)) for b in basis})
            lhs = harmonic_product(u + v, w)
            rhs = harmonic_product(u, w) + harmonic_product(v, w)
            assert lhs == rhs
