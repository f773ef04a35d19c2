from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thompson.dyadic import (
    HALF,
    ZERO,
    DyadicRational,
    dyadic_to_word,
    parity,
    parse_dyadic,
    word_parity,
    word_to_dyadic,
)

bits = st.lists(st.integers(0, 1), max_size=20).map(tuple)


@pytest.mark.parametrize("word,value", [((), Fraction(0)), ((0, 1), Fraction(1, 4)), ((1, 0, 1), Fraction(5, 8))])
def test_word_to_dyadic(word, value):
    assert word_to_dyadic(word).to_fraction() == value


def test_dyadic_to_word():
    assert dyadic_to_word(HALF) == (1,)
    assert dyadic_to_word(HALF, 3) == (1, 0, 0)
    assert dyadic_to_word(DyadicRational(5, 3)) == (1, 0, 1)
    with pytest.raises(ValueError):
        dyadic_to_word(DyadicRational(5, 3), 2)


def test_parity_examples():
    assert parity(ZERO) == 0
    assert parity(DyadicRational(5, 3)) == 0
    assert parity(DyadicRational(13, 4)) == 1


def test_circle_convention():
    assert DyadicRational(1, 0) == ZERO
    assert DyadicRational(9, 3) == DyadicRational(1, 3)
    assert HALF + HALF == ZERO
    assert str(DyadicRational(6, 4)) == "3/2^3"


@pytest.mark.parametrize("text,value", [("3/8", Fraction(3, 8)), ("3/2^3", Fraction(3, 8)), ("0.011", Fraction(3, 8)), ("0", 0)])
def test_parse(text, value):
    assert parse_dyadic(text).to_fraction() == value


@pytest.mark.parametrize("text", ["1/3", "abc", "0.12", ""])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_dyadic(text)


@given(bits)
def test_round_trip_and_trailing_zeros(w):
    d = word_to_dyadic(w)
    assert word_to_dyadic(w + (0, 0, 0)) == d
    assert word_to_dyadic(dyadic_to_word(d)) == d
    assert dyadic_to_word(d, len(w)) == w


@given(bits)
def test_parity_is_digit_sum(w):
    assert parity(word_to_dyadic(w)) == sum(w) % 2
    assert word_parity(w) == sum(w) % 2


@given(st.integers(0, 2**12 - 1), st.integers(0, 12), st.integers(0, 2**12 - 1), st.integers(0, 12))
def test_order_matches_fractions(p, k, q, j):
    a, b = DyadicRational(p, k), DyadicRational(q, j)
    fa, fb = Fraction(p, 2**k) % 1, Fraction(q, 2**j) % 1
    assert (a < b) == (fa < fb)
    assert (a == b) == (fa == fb)
    assert (a + b).to_fraction() == (fa + fb) % 1
