"""Three independent ways to produce F_n, plus neighbour queries.

The production path is the constant-memory neighbour-recurrence stream.
Mediant refinement (insert (a1+a2)/(b1+b2) wherever b1+b2 reaches the new
order) and a brute-force enumerate-and-sort oracle exist so all three can
be tested against each other; none of them is trusted alone.
"""

from __future__ import annotations

import math
from typing import Iterator, List, Optional, Tuple

from . import core
from .core import Fraction, make_fraction
from .errors import CapExceeded, EndOfSequence, NotAscending, Overflow
from .totient import farey_length

DEFAULT_CAP = 10**7

ASCENDING = "ascending"
DESCENDING = "descending"


def next_term(n: int, prev: Fraction, curr: Fraction) -> Fraction:
    """Successor of curr in F_n, given its predecessor prev.

    With prev = a/b and curr = c/d adjacent in F_n, the successor is
    (k*c - a)/(k*d - b) with k = floor((n + b)/d); adjacency of the input
    pair forces this to be the unique next element.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if core.compare(prev, curr) != core.LESS:
        raise NotAscending(f"next_term requires {prev} < {curr}")
    if curr.num == curr.den:
        raise EndOfSequence(f"{curr} is the last element of F_{n}")
    if core.neighbor_det(prev, curr) != 1:
        raise ValueError(f"{prev} and {curr} are not adjacent in F_{n}")
    k = (n + prev.den) // curr.den
    num = k * curr.num - prev.num
    den = k * curr.den - prev.den
    if k * curr.num > core.wide_max() or num > core.value_max() or den > core.value_max():
        raise Overflow(f"next_term overflow after {curr} at order {n}")
    return Fraction._unchecked(num, den)


class FareyStream:
    """Single-owner cursor over F_n in ascending or descending order.

    Iterating yields Fraction values; prev/curr always hold the last two
    emitted elements, which are adjacent in stream direction. The same
    recurrence as next_term drives both directions.
    """

    __slots__ = ("order", "direction", "_a", "_b", "_c", "_d", "_emitted", "exhausted")

    def __init__(self, order: int, direction: str = ASCENDING) -> None:
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        if direction not in (ASCENDING, DESCENDING):
            raise ValueError(f"unknown direction {direction!r}")
        self.order = order
        self.direction = direction
        # seed pair: 0/1, 1/n ascending; 1/1, (n-1)/n descending
        if direction == ASCENDING:
            self._a, self._b = 0, 1
            self._c, self._d = (1, order) if order > 1 else (1, 1)
        else:
            self._a, self._b = 1, 1
            self._c, self._d = (order - 1, order) if order > 1 else (0, 1)
        self._emitted = 0
        self.exhausted = False

    @property
    def prev(self) -> Optional[Fraction]:
        if self._emitted < 2:
            return None
        return Fraction._unchecked(self._a, self._b)

    @property
    def curr(self) -> Optional[Fraction]:
        if self._emitted == 0:
            return None
        if self._emitted == 1:
            # only the seed's first element has been emitted so far
            return Fraction._unchecked(self._a, self._b)
        return Fraction._unchecked(self._c, self._d)

    def __iter__(self) -> "FareyStream":
        return self

    def __next__(self) -> Fraction:
        if self.exhausted:
            raise StopIteration
        emitted = self._emitted
        if emitted == 0:
            self._emitted = 1
            return Fraction._unchecked(self._a, self._b)
        if emitted == 1:
            self._emitted = 2
            if self._terminal(self._c, self._d):
                self.exhausted = True
            return Fraction._unchecked(self._c, self._d)
        a, b, c, d = self._a, self._b, self._c, self._d
        k = (self.order + b) // d
        num = k * c - a
        den = k * d - b
        if den > core._limits.value_max or num > core._limits.value_max:
            raise Overflow(f"stream overflow after {c}/{d} at order {self.order}")
        self._a, self._b, self._c, self._d = c, d, num, den
        if self._terminal(num, den):
            self.exhausted = True
        return Fraction._unchecked(num, den)

    def _terminal(self, num: int, den: int) -> bool:
        if self.direction == ASCENDING:
            return num == den
        return num == 0


def ascending_stream(n: int) -> FareyStream:
    """F_n from 0/1 up to 1/1."""
    return FareyStream(n, ASCENDING)


def descending_stream(n: int) -> FareyStream:
    """F_n from 1/1 down to 0/1; elementwise the reverse of ascending."""
    return FareyStream(n, DESCENDING)


class FareySequence:
    """A materialized F_n: strictly ascending, endpoints included."""

    __slots__ = ("order", "elements")

    def __init__(self, order: int, elements: List[Fraction]) -> None:
        self.order = order
        self.elements = elements

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i: int) -> Fraction:
        return self.elements[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FareySequence):
            return NotImplemented
        return self.order == other.order and self.elements == other.elements

    def __repr__(self) -> str:
        return f"FareySequence(order={self.order}, len={len(self.elements)})"


def materialize(n: int, cap: int = DEFAULT_CAP) -> FareySequence:
    """Collect ascending_stream(n), refusing if |F_n| would exceed cap."""
    predicted = farey_length(n)
    if predicted > cap:
        raise CapExceeded(
            f"F_{n} has {predicted} elements, exceeding cap {cap}",
            predicted=predicted,
            cap=cap,
        )
    return FareySequence(n, list(ascending_stream(n)))


def refine(seq: FareySequence, cap: int = DEFAULT_CAP) -> FareySequence:
    """Produce F_{n+1} from F_n by mediant insertion.

    A mediant (a1+a2)/(b1+b2) is inserted between each adjacent pair whose
    denominator sum equals the new order; exactly phi(n+1) insertions
    occur and every inserted fraction is (coprime k)/(n+1).
    """
    n = seq.order + 1
    predicted = farey_length(n)
    if predicted > cap:
        raise CapExceeded(
            f"refining to F_{n} needs {predicted} elements, exceeding cap {cap}",
            predicted=predicted,
            cap=cap,
        )
    out: List[Fraction] = []
    previous: Optional[Fraction] = None
    for frac in seq.elements:
        if previous is not None and previous.den + frac.den == n:
            raw = core.mediant(previous, frac)
            # neighbour mediants are already reduced
            out.append(Fraction._unchecked(raw.num, raw.den))
        out.append(frac)
        previous = frac
    return FareySequence(n, out)


def new_terms(n: int) -> List[Fraction]:
    """The elements of F_n absent from F_{n-1}: k/n for k coprime to n."""
    if n < 2:
        raise ValueError(f"new_terms requires n >= 2, got {n}")
    gcd = math.gcd
    return [Fraction._unchecked(k, n) for k in range(1, n) if gcd(k, n) == 1]


def bruteforce_sequence(n: int, cap: int = DEFAULT_CAP) -> FareySequence:
    """Independent oracle: enumerate, deduplicate, and sort all of F_n."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    predicted = farey_length(n)
    if predicted > cap:
        raise CapExceeded(
            f"F_{n} has {predicted} elements, exceeding cap {cap}",
            predicted=predicted,
            cap=cap,
        )
    gcd = math.gcd
    seen = {
        (a, b)
        for b in range(1, n + 1)
        for a in range(0, b + 1)
        if gcd(a, b) == 1
    }
    # exact sort: python Fractions compare by checked cross multiplication
    elements = sorted(Fraction._unchecked(a, b) for a, b in seen)
    return FareySequence(n, elements)


def neighbors(frac: Fraction, n: int) -> Tuple[Optional[Fraction], Optional[Fraction]]:
    """Left and right neighbours of frac in F_n, None at the endpoints.

    Solved in O(log n) from the unimodularity condition: the left
    neighbour p/q satisfies a*q - b*p = 1 with the largest q <= n, so q is
    the top representative of a^{-1} mod b; symmetrically on the right.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if frac.den > n:
        raise ValueError(f"{frac} is not a member of F_{n}")
    a, b = frac.num, frac.den
    left: Optional[Fraction] = None
    right: Optional[Fraction] = None
    if b == 1:
        if a == 0:
            right = Fraction._unchecked(1, n)
        else:
            left = Fraction._unchecked(n - 1, n) if n > 1 else core.ZERO
        return left, right
    inv = pow(a, -1, b)
    q = inv + ((n - inv) // b) * b
    left = Fraction._unchecked((a * q - 1) // b, q)
    s0 = b - inv  # -a^{-1} mod b, in 1..b-1
    s = s0 + ((n - s0) // b) * b
    right = Fraction._unchecked((a * s + 1) // b, s)
    return left, right
