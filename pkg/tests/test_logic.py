"""Exact connective semantics and algebraic laws of the logic kernel."""

import random
from fractions import Fraction
from functools import reduce
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import farey_values, random_fraction
from mvql import logic
from mvql.errors import NonCrispOperand, TruthRangeError
from mvql.logic import (
    TruthValue,
    bald_membership,
    from_float,
    luk_conj,
    luk_disj,
    luk_neg,
    max_disj,
    min_conj,
    xor_crisp,
)

truth_values = st.fractions(min_value=0, max_value=1, max_denominator=10**4).map(TruthValue)


class TestTruthValue:
    def test_exact_rational(self):
        assert TruthValue("0.1") == Fraction(1, 10)
        assert TruthValue(1, 3) + TruthValue(1, 3) == Fraction(2, 3)

    @pytest.mark.parametrize("bad", [-1, 2, Fraction(3, 2), "-0.5", Fraction(-1, 10**9)])
    def test_range_rejected(self, bad):
        with pytest.raises(TruthRangeError):
            TruthValue(bad)

    def test_float_boundary_is_exact(self):
        assert from_float(0.5) == Fraction(1, 2)
        assert from_float(0.1) == Fraction(0.1)  # the binary rational, not 1/10
        assert float(TruthValue(1, 2)) == 0.5

    def test_immutable_and_hashable(self):
        assert hash(TruthValue(1, 2)) == hash(Fraction(1, 2))


class TestConnectiveExamples:
    def test_neg(self):
        assert luk_neg(0) == 1
        assert luk_neg(TruthValue(1, 2)) == Fraction(1, 2)
        assert luk_neg(TruthValue("0.8")) == Fraction(2, 10)

    def test_conj(self):
        assert luk_conj(TruthValue(1, 2), TruthValue(1, 2)) == 0
        for x in (TruthValue(0), TruthValue(1, 3), TruthValue(1)):
            assert luk_conj(1, x) == x
        assert luk_conj(TruthValue("0.7"), TruthValue("0.6")) == Fraction(3, 10)

    def test_disj(self):
        assert luk_disj(TruthValue(1, 2), TruthValue(1, 2)) == 1
        for x in (TruthValue(0), TruthValue(2, 7), TruthValue(1)):
            assert luk_disj(0, x) == x
        assert luk_disj(TruthValue("0.7"), TruthValue("0.6")) == 1

    def test_min_conj(self):
        assert min_conj(TruthValue(1, 2), TruthValue(1, 2)) == Fraction(1, 2)
        assert min_conj(1, TruthValue(1, 4)) == Fraction(1, 4)
        assert min_conj(TruthValue("0.3"), TruthValue("0.9")) == Fraction(3, 10)

    def test_max_disj(self):
        assert max_disj(TruthValue(1, 2), TruthValue(1, 2)) == Fraction(1, 2)
        assert max_disj(0, TruthValue(1, 4)) == Fraction(1, 4)
        assert max_disj(TruthValue("0.3"), TruthValue("0.9")) == Fraction(9, 10)


class TestXorCrisp:
    @pytest.mark.parametrize(
        "a, b, expected", [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]
    )
    def test_truth_table(self, a, b, expected):
        assert xor_crisp(a, b) == expected

    def test_non_crisp_rejected(self):
        with pytest.raises(NonCrispOperand):
            xor_crisp(TruthValue(1, 2), 1)
        with pytest.raises(NonCrispOperand):
            xor_crisp(1, TruthValue(2, 3))

    def test_fold_is_parity(self):
        for n in range(1, 7):
            for bits in product((0, 1), repeat=n):
                folded = reduce(xor_crisp, bits[1:], TruthValue(bits[0]))
                assert folded == sum(bits) % 2

    def test_associative_commutative_on_crisp(self):
        for a, b, c in product((0, 1), repeat=3):
            assert xor_crisp(xor_crisp(a, b), c) == xor_crisp(a, xor_crisp(b, c))
            assert xor_crisp(a, b) == xor_crisp(b, a)


class TestLaws:
    def test_de_morgan_exact_on_grid(self):
        grid = farey_values(8)
        for v1 in grid:
            for v2 in grid:
                a, b = TruthValue(v1), TruthValue(v2)
                assert luk_neg(luk_conj(a, b)) == luk_disj(luk_neg(a), luk_neg(b))
                assert luk_neg(luk_disj(a, b)) == luk_conj(luk_neg(a), luk_neg(b))

    @given(truth_values, truth_values)
    def test_de_morgan_random(self, a, b):
        assert luk_neg(luk_conj(a, b)) == luk_disj(luk_neg(a), luk_neg(b))
        assert luk_neg(luk_disj(a, b)) == luk_conj(luk_neg(a), luk_neg(b))

    @given(truth_values)
    def test_excluded_middle_and_contradiction(self, v):
        assert luk_disj(v, luk_neg(v)) == 1
        assert luk_conj(v, luk_neg(v)) == 0

    def test_min_max_fail_the_laws_at_one_half(self):
        half = TruthValue(1, 2)
        assert max_disj(half, luk_neg(half)) == Fraction(1, 2) != 1
        assert min_conj(half, luk_neg(half)) == Fraction(1, 2) != 0

    @given(truth_values, truth_values, truth_values)
    def test_commutative_associative(self, a, b, c):
        assert luk_conj(a, b) == luk_conj(b, a)
        assert luk_disj(a, b) == luk_disj(b, a)
        assert luk_conj(luk_conj(a, b), c) == luk_conj(a, luk_conj(b, c))
        assert luk_disj(luk_disj(a, b), c) == luk_disj(a, luk_disj(b, c))

    @given(truth_values, truth_values, truth_values)
    def test_monotone_in_each_argument(self, a, b, c):
        lo, hi = min(b, c), max(b, c)
        assert luk_conj(a, TruthValue(lo)) <= luk_conj(a, TruthValue(hi))
        assert luk_disj(a, TruthValue(lo)) <= luk_disj(a, TruthValue(hi))

    def test_random_rational_pairs_stay_exact(self):
        rng = random.Random(9)
        for _ in range(500):
            a, b = TruthValue(random_fraction(rng)), TruthValue(random_fraction(rng))
            assert luk_neg(luk_conj(a, b)) == luk_disj(luk_neg(a), luk_neg(b))


class TestBaldMembership:
    def test_boundaries(self):
        assert bald_membership(100) == 1
        assert bald_membership(0) == 1
        assert bald_membership(1000) == 0
        assert bald_membership(10**9) == 0

    def test_midpoint_exact(self):
        assert bald_membership(550) == Fraction(1, 2)
        assert bald_membership(101) == Fraction(899, 900)

    def test_monotone_non_increasing(self):
        previous = bald_membership(0)
        for n in range(1, 1201):
            current = bald_membership(n)
            assert current <= previous
            previous = current

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            bald_membership(-1)
