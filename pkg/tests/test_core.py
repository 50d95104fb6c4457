import itertools

import pytest
from hypothesis import given, strategies as st

from farey import (
    EQUAL,
    GREATER,
    LESS,
    Fraction,
    NotAscending,
    Overflow,
    OutOfUnitInterval,
    RawPair,
    ZeroDenominator,
    bruteforce_sequence,
    compare,
    integer_width,
    make_fraction,
    mediant,
    neighbor_det,
    reflect,
)


def test_make_fraction_reduces():
    assert make_fraction(2, 4) == Fraction(1, 2)
    assert make_fraction(0, 7) == Fraction(0, 1)
    assert make_fraction(3, 5) == Fraction(3, 5)


def test_make_fraction_rejects_bad_input():
    with pytest.raises(ZeroDenominator):
        make_fraction(1, 0)
    with pytest.raises(OutOfUnitInterval):
        make_fraction(3, 2)
    with pytest.raises(OutOfUnitInterval):
        make_fraction(-1, 2)


def test_strict_constructor_rejects_unreduced():
    with pytest.raises(ValueError):
        Fraction(2, 4)


@given(st.integers(0, 10**6), st.integers(1, 10**6))
def test_make_fraction_always_reduced(num, den):
    if num > den:
        num, den = den, num
    frac = make_fraction(num, den)
    import math

    assert math.gcd(frac.num, frac.den) == 1
    assert 0 <= frac.num <= frac.den
    # same rational value
    assert frac.num * den == num * frac.den


def test_parse_roundtrip():
    frac = Fraction.parse("3/5")
    assert frac == Fraction(3, 5)
    assert str(frac) == "3/5"
    for bad in ("3/5 ", " 3/5", "3 /5", "-1/2", "3", "3/5/7", "a/b", "1.5/2"):
        with pytest.raises(ValueError):
            Fraction.parse(bad)


def test_compare_examples():
    assert compare(Fraction(1, 3), Fraction(2, 5)) == LESS
    assert compare(Fraction(1, 2), Fraction(1, 2)) == EQUAL
    assert compare(Fraction(3, 4), Fraction(2, 3)) == GREATER


def test_compare_total_order_exhaustive_f8():
    elems = list(bruteforce_sequence(8))
    # antisymmetry over all pairs
    for x, y in itertools.product(elems, repeat=2):
        cxy, cyx = compare(x, y), compare(y, x)
        assert cxy == -cyx
        assert (cxy == EQUAL) == (x == y)
    # transitivity over all triples
    for x, y, z in itertools.combinations(elems, 3):
        assert compare(x, y) == LESS and compare(y, z) == LESS
        assert compare(x, z) == LESS


def test_mediant_examples():
    assert mediant(Fraction(0, 1), Fraction(1, 1)) == RawPair(1, 2)
    assert mediant(Fraction(1, 3), Fraction(1, 2)) == RawPair(2, 5)
    # unreduced contract: the formal sum is returned as-is
    raw = mediant(Fraction(1, 3), Fraction(1, 1))
    assert raw == RawPair(2, 4)
    assert raw.reduced() == Fraction(1, 2)


@given(st.data())
def test_mediant_betweenness(data):
    elems = list(bruteforce_sequence(64))
    i = data.draw(st.integers(0, len(elems) - 2))
    j = data.draw(st.integers(i + 1, len(elems) - 1))
    x, y = elems[i], elems[j]
    raw = mediant(x, y)
    assert x.num * raw.den < raw.num * x.den
    assert raw.num * y.den < y.num * raw.den


def test_neighbor_det_examples():
    assert neighbor_det(Fraction(1, 3), Fraction(2, 5)) == 1
    assert neighbor_det(Fraction(0, 1), Fraction(1, 1)) == 1
    assert neighbor_det(Fraction(1, 5), Fraction(1, 3)) == 2


def test_neighbor_det_requires_ascending():
    with pytest.raises(NotAscending):
        neighbor_det(Fraction(1, 2), Fraction(1, 3))
    with pytest.raises(NotAscending):
        neighbor_det(Fraction(1, 2), Fraction(1, 2))


def test_reflect_examples():
    assert reflect(Fraction(0, 1)) == Fraction(1, 1)
    assert reflect(Fraction(1, 2)) == Fraction(1, 2)
    assert reflect(Fraction(2, 5)) == Fraction(3, 5)


def test_reflect_involution_all_of_f64():
    for frac in bruteforce_sequence(64):
        assert reflect(reflect(frac)) == frac


def test_reflection_preserves_neighbor_det():
    # adjacent pairs map to adjacent (swapped) pairs under reflection
    elems = list(bruteforce_sequence(40))
    for x, y in zip(elems, elems[1:]):
        assert neighbor_det(x, y) == 1
        assert neighbor_det(reflect(y), reflect(x)) == 1


def test_overflow_raised_at_small_width():
    with integer_width(8, 16):
        x = make_fraction(200, 201)
        y = make_fraction(199, 200)
        with pytest.raises(Overflow):
            compare(y, x)
        with pytest.raises(Overflow):
            mediant(x, x)
        with pytest.raises(Overflow):
            make_fraction(1, 300)


def test_fraction_rich_comparisons():
    assert Fraction(1, 3) < Fraction(2, 5) <= Fraction(2, 5)
    assert Fraction(3, 4) > Fraction(2, 3) >= Fraction(2, 3)
    assert Fraction(1, 2) != Fraction(1, 3)
    assert hash(Fraction(1, 2)) == hash(make_fraction(2, 4))
