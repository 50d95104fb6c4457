"""Streaming checkers for every structural claim about F_n.

Each single checker raises TheoremViolation on failure (the identities
are proved, so a failure means the implementation is broken); verify_all
catches those and folds them into per-order reports so a batch never
aborts on one bad entry.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from . import core
from .core import reflect
from .errors import FareyError, Overflow, TheoremViolation
from .generator import ascending_stream, descending_stream
from .totient import farey_length, phi, phi_sieve


@dataclass(frozen=True)
class SumStats:
    """Measured numerator and denominator sums over F_n."""

    order: int
    numerator_sum: int
    denominator_sum: int


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass
class VerificationReport:
    order: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)


def sum_check(n: int) -> SumStats:
    """Stream F_n once and assert denominator_sum = 2 * numerator_sum."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    num_sum = 0
    den_sum = 0
    wide = core.wide_max()
    for frac in ascending_stream(n):
        num_sum += frac.num
        den_sum += frac.den
        if den_sum > wide:
            raise Overflow(f"sum accumulator overflow at order {n}")
    if den_sum != 2 * num_sum:
        raise TheoremViolation(
            f"D_{n} = {den_sum} is not twice N_{n} = {num_sum}",
            order=n,
            numerator_sum=num_sum,
            denominator_sum=den_sum,
        )
    return SumStats(n, num_sum, den_sum)


def sum_check_recurrent(limit: int) -> List[SumStats]:
    """N_n, D_n for all n <= limit via the inductive recurrences.

    Seeded N_1 = 1, D_1 = 2; each step adds the coprime sum n*phi(n)/2 to
    N and n*phi(n) to D. No sequence is generated, only sieve arithmetic.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    table = phi_sieve(limit) if limit >= 2 else None
    num_sum, den_sum = 1, 2
    wide = core.wide_max()
    out = [SumStats(1, 1, 2)]
    for n in range(2, limit + 1):
        step = n * table[n]
        num_sum += step // 2
        den_sum += step
        if den_sum > wide:
            raise Overflow(f"recurrent sum accumulator overflow at order {n}")
        if den_sum != 2 * num_sum:
            raise TheoremViolation(
                f"recurrence gives D_{n} = {den_sum}, N_{n} = {num_sum}",
                order=n,
                numerator_sum=num_sum,
                denominator_sum=den_sum,
            )
        out.append(SumStats(n, num_sum, den_sum))
    return out


def _dual_cursor_check(n: int, compare_reflection: bool) -> int:
    """Walk ascending and descending streams together for ceil(|F_n|/2)
    steps; returns the full palindrome length on success."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    length = farey_length(n)
    half = (length + 1) // 2
    forward = ascending_stream(n)
    backward = descending_stream(n)
    for position in range(half):
        asc = next(forward)
        desc = next(backward)
        if compare_reflection:
            if desc != reflect(asc):
                raise TheoremViolation(
                    f"position {position} of F_{n}: descending {desc} "
                    f"is not the reflection of ascending {asc}",
                    order=n,
                    position=position,
                )
        elif desc.den != asc.den:
            raise TheoremViolation(
                f"position {position} of F_{n}: denominators "
                f"{asc.den} and {desc.den} differ",
                order=n,
                position=position,
            )
    return length


def palindrome_check(n: int) -> int:
    """Assert the denominator list of F_n is a palindrome.

    O(1) memory: two counter-directed cursors, no materialization.
    Returns the palindrome length |F_n|.
    """
    return _dual_cursor_check(n, compare_reflection=False)


def reflection_check(n: int) -> int:
    """Assert mirrored positions of F_n are reflections of each other.

    Strictly stronger than palindrome_check: equal denominators and
    complementary numerators. Returns |F_n|.
    """
    return _dual_cursor_check(n, compare_reflection=True)


def neighbor_chain_check(n: int) -> int:
    """Assert determinant b*c - a*d = 1 for every consecutive pair of F_n.

    Returns the number of pairs checked.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    pairs = 0
    prev = None
    for frac in ascending_stream(n):
        if prev is not None:
            det = prev.den * frac.num - prev.num * frac.den
            if det != 1:
                raise TheoremViolation(
                    f"consecutive pair {prev}, {frac} of F_{n} has determinant {det}",
                    order=n,
                    pair=(prev, frac),
                    det=det,
                )
            pairs += 1
        prev = frac
    return pairs


def length_check(n: int) -> int:
    """Assert streamed |F_n| matches farey_length and its recurrence."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    count = sum(1 for _ in ascending_stream(n))
    expected = farey_length(n)
    if count != expected:
        raise TheoremViolation(
            f"streamed |F_{n}| = {count}, expected {expected}",
            order=n,
            streamed=count,
            expected=expected,
        )
    if n >= 2 and expected != farey_length(n - 1) + phi(n):
        raise TheoremViolation(
            f"|F_{n}| = {expected} breaks the recurrence from |F_{n - 1}|",
            order=n,
        )
    return count


def palindrome_length(n: int) -> int:
    """Length of the denominator palindrome of F_n, i.e. |F_n|."""
    return farey_length(n)


def _run_sum(n: int) -> str:
    stats = sum_check(n)
    return f"N={stats.numerator_sum} D={stats.denominator_sum}"


def _run_sum_recurrent(n: int) -> str:
    stats = sum_check_recurrent(n)[-1]
    return f"N={stats.numerator_sum} D={stats.denominator_sum}"


def _run_palindrome(n: int) -> str:
    return f"length={palindrome_check(n)}"


def _run_reflection(n: int) -> str:
    return f"length={reflection_check(n)}"


def _run_neighbors(n: int) -> str:
    return f"pairs={neighbor_chain_check(n)}"


def _run_length(n: int) -> str:
    return f"count={length_check(n)}"


CHECKS: dict[str, Callable[[int], str]] = {
    "sum": _run_sum,
    "sum-recurrent": _run_sum_recurrent,
    "palindrome": _run_palindrome,
    "reflection": _run_reflection,
    "neighbors": _run_neighbors,
    "length": _run_length,
}

ALL_CHECKS: Tuple[str, ...] = tuple(CHECKS)


def _verify_one(n: int, checks: Sequence[str]) -> VerificationReport:
    report = VerificationReport(order=n)
    for name in checks:
        try:
            detail = CHECKS[name](n)
            report.checks.append(CheckResult(name, True, detail))
        except FareyError as exc:
            report.checks.append(CheckResult(name, False, str(exc)))
    return report


def verify_all(
    orders: Iterable[int],
    checks: Optional[Sequence[str]] = None,
    jobs: Optional[int] = None,
) -> List[VerificationReport]:
    """Run the selected checkers over each order.

    Orders may be processed concurrently (jobs > 1); reports come back in
    ascending order regardless of execution order. Failures are recorded
    in the reports, never raised.
    """
    order_list = sorted(set(orders))
    if not order_list:
        raise ValueError("empty order range")
    selected = list(checks) if checks is not None else list(ALL_CHECKS)
    for name in selected:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}")
    if jobs is not None and jobs > 1 and len(order_list) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda n: _verify_one(n, selected), order_list))
    else:
        reports = [_verify_one(n, selected) for n in order_list]
    return sorted(reports, key=lambda report: report.order)
