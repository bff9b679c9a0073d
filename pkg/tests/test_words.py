from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from conftest import knot_words
from modknot.errors import BadFraction, MonoletterWord, NotLyndon, NotPrimitive, OddPeriod, ParseError
from modknot.words import (bernoulli_rational, christoffel_lower, compress, dual_word,
                           expand_powers, flip_word, is_lyndon, is_primitive, lyndon_canonical,
                           markov_left, markov_right, max_rotation_index, parse_word,
                           period_from_word, ranks, rotations, substitute, trip_count,
                           word_from_period)

W = expand_powers("L4R3L4R3LR2")
coprime_pairs = st.tuples(st.integers(1, 30), st.integers(2, 31)).filter(
    lambda pq: pq[0] < pq[1] and gcd(*pq) == 1)


def test_expand_and_compress():
    assert W == "LLLLRRRLLLLRRRLRR"
    assert compress(W) == "L4R3L4R3LR2"
    with pytest.raises(ParseError):
        expand_powers("L2X")
    with pytest.raises(ParseError):
        parse_word("")


@pytest.mark.parametrize("w, expect", [("LRLRR", True), ("LRLR", False), ("L", True)])
def test_is_primitive(w, expect):
    assert is_primitive(w) is expect


@pytest.mark.parametrize("w, expect", [("LRRLR", "LRLRR"), ("RRLRL", "LRLRR"), ("L", "L")])
def test_lyndon_canonical(w, expect):
    assert lyndon_canonical(w) == expect


def test_word_from_period():
    assert word_from_period([1, 1, 1, 2]) == "LRLRR"
    assert word_from_period([4, 3, 4, 3, 1, 2]) == W
    assert word_from_period([2, 1, 1, 1]) == "LLRLR"
    with pytest.raises(OddPeriod):
        word_from_period([1, 2, 3])


def test_period_from_word():
    assert period_from_word("LRLRR") == [1, 1, 1, 2]
    assert period_from_word(W) == [4, 3, 4, 3, 1, 2]
    with pytest.raises(MonoletterWord):
        period_from_word("R")


def test_ranks():
    assert ranks("LRLRR") == [1, 4, 2, 5, 3]
    assert ranks("LRLLLLR") == [4, 6, 1, 2, 3, 5, 7]
    assert ranks("LR") == [1, 2]
    with pytest.raises(NotPrimitive):
        ranks("LRLR")


def test_max_rotation_index():
    assert max_rotation_index("LRLRR") == 4
    assert max_rotation_index(W) == 12
    assert max_rotation_index("LR") == 2


def test_markov():
    assert markov_left(W) == expand_powers("L5R3L4R3LR2")
    assert markov_left("LR") == "LLR"
    assert markov_left("LRLRR") == "LLRLRR"
    assert markov_right(W) == expand_powers("L4R3L4R4LR2")
    assert markov_right("LR") == "LRR"
    assert markov_right("LLR") == "LLRR"
    with pytest.raises(NotLyndon):
        markov_left("RL")
    with pytest.raises(NotLyndon):
        markov_right("LRLR")


def test_bernoulli():
    assert bernoulli_rational("LRLRR") == Fraction(11, 31)
    assert bernoulli_rational("LLRR") == Fraction(1, 5)
    assert bernoulli_rational("LR") == Fraction(1, 3)
    with pytest.raises(MonoletterWord):
        bernoulli_rational("LLL")


def test_christoffel_and_substitute():
    assert christoffel_lower(4, 7) == "ABABABB"
    assert christoffel_lower(2, 3) == "ABB"
    assert christoffel_lower(1, 2) == "AB"
    assert substitute("ABB", "L", "LR") == "LLRLR"
    assert substitute("ABABABB", "L", "LR") == "LLRLLRLLRLR"
    assert substitute("A", "L", "LR") == "L"
    for p, q in [(2, 4), (3, 2), (0, 5)]:
        with pytest.raises(BadFraction):
            christoffel_lower(p, q)


def test_dual_and_flip():
    assert dual_word(W) == expand_powers("L2RL3R4L3R4")
    assert lyndon_canonical(dual_word("LR")) == "LR"
    assert dual_word("LLR") == "LRR"
    assert flip_word("LLRLR") == "LRLRR"
    assert flip_word("LR") == "LR"
    assert flip_word("LLLR") == "LRRR"


def test_trip_count():
    assert trip_count(W) == 3
    assert trip_count("LRLRR") == 2
    assert trip_count("LR") == 1


@given(knot_words(max_size=20))
def test_ranks_is_permutation(w):
    assert sorted(ranks(w)) == list(range(1, len(w) + 1))


@given(knot_words(max_size=20), st.integers(0, 19))
def test_lyndon_idempotent_rotation_invariant(w, k):
    c = lyndon_canonical(w)
    assert lyndon_canonical(c) == c
    k %= len(w)
    assert lyndon_canonical(w[k:] + w[:k]) == c
    assert is_lyndon(c)


@given(knot_words(max_size=20))
def test_bernoulli_shift(w):
    x = bernoulli_rational(w)
    y = bernoulli_rational(w[1:] + w[:1])
    assert y == (2 * x) % 1


@given(coprime_pairs)
def test_christoffel_substitution(pq):
    p, q = pq
    lhs = substitute(christoffel_lower(p, q), "L", "LR")
    assert lhs == substitute(christoffel_lower(p, p + q), "L", "R")


@given(coprime_pairs)
def test_christoffel_rank_congruence(pq):
    p, q = pq
    w = substitute(christoffel_lower(p, p + q), "L", "R")
    for j, r in enumerate(ranks(w), 1):
        assert (r - (p * (j - 1) + 1)) % (p + q) == 0


@given(knot_words(max_size=20))
def test_trip_count_half_period(w):
    assert trip_count(w) == len(period_from_word(w)) // 2


@given(knot_words(max_size=20))
def test_dual_flip_preserve(w):
    for v in (dual_word(w), flip_word(w)):
        assert len(v) == len(w) and is_primitive(v)


def test_rotations():
    assert rotations("LRR") == ["LRR", "RRL", "RLR"]
