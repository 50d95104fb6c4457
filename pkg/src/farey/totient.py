"""Euler's totient, coprime sums, and Farey sequence lengths.

Two independent code paths compute phi: trial-division factorization for
single queries and a sieve for batches. They cross-validate each other in
the test suite, as do the closed-form and brute-force coprime sums.
"""

from __future__ import annotations

import math
from typing import List

from . import core
from .errors import CapExceeded, Overflow

DEFAULT_SIEVE_CAP = 10**8


class TotientTable:
    """Immutable phi(1..limit), 1-indexed via __getitem__."""

    __slots__ = ("limit", "_values")

    def __init__(self, limit: int, values: List[int]) -> None:
        self.limit = limit
        self._values = values

    def __getitem__(self, k: int) -> int:
        if not 1 <= k <= self.limit:
            raise IndexError(f"totient table index {k} outside 1..{self.limit}")
        return self._values[k]

    def __len__(self) -> int:
        return self.limit

    def values(self) -> List[int]:
        """Entries phi(1), ..., phi(limit) as a list."""
        return self._values[1:]


class LengthTable:
    """Immutable |F_1|..|F_limit|, built from the length recurrence."""

    __slots__ = ("limit", "_lengths")

    def __init__(self, limit: int, lengths: List[int]) -> None:
        self.limit = limit
        self._lengths = lengths

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(f"length table index {n} outside 1..{self.limit}")
        return self._lengths[n]

    def __len__(self) -> int:
        return self.limit


def phi(n: int) -> int:
    """Euler's totient by trial division and the product formula.

    phi(1) = 1 by the empty-product convention.
    """
    if n < 1:
        raise ValueError(f"phi requires n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def phi_sieve(limit: int, cap: int = DEFAULT_SIEVE_CAP) -> TotientTable:
    """Sieve phi(1..limit) in O(limit log log limit).

    Independent of the trial-division path in phi().
    """
    if limit < 1:
        raise ValueError(f"phi_sieve requires limit >= 1, got {limit}")
    if limit > cap:
        raise CapExceeded(
            f"sieve limit {limit} exceeds cap {cap}", predicted=limit, cap=cap
        )
    values = list(range(limit + 1))
    values[1] = 1
    for p in range(2, limit + 1):
        if values[p] == p:  # p prime: untouched so far
            for multiple in range(p, limit + 1, p):
                values[multiple] -= values[multiple] // p
    return TotientTable(limit, values)


def coprime_sum(n: int) -> int:
    """Sum of 1 <= k < n coprime to n, via the closed form n*phi(n)/2.

    The range below n is empty for n = 1, so coprime_sum(1) = 0; the
    closed form applies from n = 2 upward.
    """
    if n < 1:
        raise ValueError(f"coprime_sum requires n >= 1, got {n}")
    if n == 1:
        return 0
    product = n * phi(n)
    if product > core.wide_max():
        raise Overflow(f"n*phi(n) overflows widened range at n={n}")
    return product // 2


def coprime_sum_bruteforce(n: int) -> int:
    """Literal enumeration oracle for coprime_sum."""
    if n < 1:
        raise ValueError(f"coprime_sum_bruteforce requires n >= 1, got {n}")
    gcd = math.gcd
    return sum(k for k in range(1, n) if gcd(n, k) == 1)


def farey_length(n: int) -> int:
    """|F_n| = 1 + sum of phi(1..n), i.e. the length recurrence unrolled."""
    if n < 1:
        raise ValueError(f"farey_length requires n >= 1, got {n}")
    total = 1
    wide = core.wide_max()
    for value in phi_sieve(n).values():
        total += value
        if total > wide:
            raise Overflow(f"farey_length accumulator overflow at n={n}")
    return total


def length_table(limit: int, cap: int = DEFAULT_SIEVE_CAP) -> LengthTable:
    """|F_1|..|F_limit| via the recurrence |F_n| = |F_{n-1}| + phi(n)."""
    table = phi_sieve(limit, cap)
    lengths = [0] * (limit + 1)
    lengths[1] = 2
    wide = core.wide_max()
    for n in range(2, limit + 1):
        lengths[n] = lengths[n - 1] + table[n]
        if lengths[n] > wide:
            raise Overflow(f"length accumulator overflow at n={n}")
    return LengthTable(limit, lengths)
