"""Reduced fractions in [0, 1] and the three primitive maps on them.

All arithmetic is exact integer arithmetic. Values are bounded to a
configurable machine width (64-bit by default) and every cross product or
sum is checked against a widened range (128-bit by default); exceeding
either bound raises Overflow instead of silently growing. Python integers
never wrap, so these checks exist to honour the width contract and to make
overflow behaviour testable at artificially small widths.
"""

from __future__ import annotations

import math
import re
from contextlib import contextmanager
from typing import Iterator

from .errors import NotAscending, Overflow, OutOfUnitInterval, ZeroDenominator

VALUE_BITS = 64
WIDE_BITS = 128

LESS = -1
EQUAL = 0
GREATER = 1


class _Limits:
    __slots__ = ("value_max", "wide_max")

    def __init__(self, value_bits: int, wide_bits: int) -> None:
        self.value_max = (1 << value_bits) - 1
        # signed widened range: cross products may be subtracted
        self.wide_max = (1 << (wide_bits - 1)) - 1


_limits = _Limits(VALUE_BITS, WIDE_BITS)


@contextmanager
def integer_width(value_bits: int, wide_bits: int) -> Iterator[None]:
    """Temporarily shrink (or grow) the checked integer widths.

    Intended for tests that confirm Overflow is raised rather than wrapped.
    """
    global _limits
    saved = _limits
    _limits = _Limits(value_bits, wide_bits)
    try:
        yield
    finally:
        _limits = saved


def value_max() -> int:
    return _limits.value_max


def wide_max() -> int:
    return _limits.wide_max


_FRACTION_RE = re.compile(r"\A([0-9]+)/([0-9]+)\Z")


class Fraction:
    """A reduced rational a/b with 0 <= a <= b and gcd(a, b) = 1.

    Instances are immutable by convention and hashable; ordering compares
    exact rational values by cross multiplication, never floating point.
    Use make_fraction() to canonicalize arbitrary input.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int) -> None:
        if den == 0:
            raise ZeroDenominator(f"denominator is zero in {num}/{den}")
        if num < 0 or den < 0 or num > den:
            raise OutOfUnitInterval(f"{num}/{den} is not in [0, 1]")
        if den > _limits.value_max:
            raise Overflow(f"denominator {den} exceeds value width")
        if math.gcd(num, den) != 1:
            raise ValueError(f"{num}/{den} is not reduced; use make_fraction")
        self.num = num
        self.den = den

    @classmethod
    def _unchecked(cls, num: int, den: int) -> "Fraction":
        # fast path for values that are reduced by construction
        f = object.__new__(cls)
        f.num = num
        f.den = den
        return f

    @classmethod
    def parse(cls, text: str) -> "Fraction":
        """Parse the canonical "a/b" wire format (ASCII, no whitespace)."""
        m = _FRACTION_RE.match(text)
        if m is None:
            raise ValueError(f"not a fraction literal: {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    def __repr__(self) -> str:
        return f"Fraction({self.num}, {self.den})"

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fraction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __lt__(self, other: "Fraction") -> bool:
        return compare(self, other) < 0

    def __le__(self, other: "Fraction") -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: "Fraction") -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: "Fraction") -> bool:
        return compare(self, other) >= 0


class RawPair:
    """An unreduced (numerator, denominator) pair, den >= 1.

    The formal mediant lives here: reduction is deliberately a separate
    step, so the fact that neighbour mediants come out already reduced
    stays observable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int) -> None:
        if den < 1:
            raise ZeroDenominator(f"raw pair denominator must be >= 1, got {den}")
        if num < 0:
            raise OutOfUnitInterval(f"raw pair numerator must be >= 0, got {num}")
        self.num = num
        self.den = den

    def reduced(self) -> Fraction:
        g = math.gcd(self.num, self.den)
        return make_fraction(self.num // g, self.den // g)

    def __repr__(self) -> str:
        return f"RawPair({self.num}, {self.den})"

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RawPair):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))


ZERO = Fraction._unchecked(0, 1)
ONE = Fraction._unchecked(1, 1)
HALF = Fraction._unchecked(1, 2)


def make_fraction(num: int, den: int) -> Fraction:
    """Canonicalize num/den into a reduced Fraction in [0, 1].

    Unreduced input is reduced silently; den = 0 and values outside the
    unit interval are rejected.
    """
    if den == 0:
        raise ZeroDenominator(f"denominator is zero in {num}/{den}")
    if num < 0 or den < 0 or num > den:
        raise OutOfUnitInterval(f"{num}/{den} is not in [0, 1]")
    g = math.gcd(num, den)
    num //= g
    den //= g
    if den > _limits.value_max:
        raise Overflow(f"denominator {den} exceeds value width")
    return Fraction._unchecked(num, den)


def compare(x: Fraction, y: Fraction) -> int:
    """Order x against y as exact rationals: LESS, EQUAL, or GREATER.

    Cross multiplication in the widened range; never floating point.
    """
    lhs = x.num * y.den
    rhs = y.num * x.den
    if lhs > _limits.wide_max or rhs > _limits.wide_max:
        raise Overflow(f"cross product overflow comparing {x} and {y}")
    if lhs < rhs:
        return LESS
    if lhs > rhs:
        return GREATER
    return EQUAL


def mediant(x: Fraction, y: Fraction) -> RawPair:
    """The formal sum (x.num + y.num) / (x.den + y.den), left unreduced.

    For x < y its value lies strictly between them; for Farey neighbours
    the pair is provably already reduced.
    """
    num = x.num + y.num
    den = x.den + y.den
    if num > _limits.value_max or den > _limits.value_max:
        raise Overflow(f"mediant of {x} and {y} exceeds value width")
    return RawPair(num, den)


def neighbor_det(x: Fraction, y: Fraction) -> int:
    """The determinant b*c - a*d for x = a/b < y = c/d.

    Equals 1 exactly when x and y are Farey neighbours at any order where
    both appear and are adjacent.
    """
    if compare(x, y) != LESS:
        raise NotAscending(f"neighbor_det requires {x} < {y}")
    lhs = x.den * y.num
    rhs = x.num * y.den
    if lhs > _limits.wide_max or rhs > _limits.wide_max:
        raise Overflow(f"cross product overflow in neighbor_det({x}, {y})")
    return lhs - rhs


def reflect(x: Fraction) -> Fraction:
    """Mirror a/b about 1/2: a/b -> (b-a)/b.

    The image is automatically reduced since gcd(b-a, b) = gcd(a, b) = 1,
    and the map is an involution with unique fixed point 1/2.
    """
    return Fraction._unchecked(x.den - x.num, x.den)
