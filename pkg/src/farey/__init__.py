"""Exact Farey sequence construction and mechanical verification.

Library layout:
  core       reduced fractions in [0, 1]; mediant, determinant, reflection
  totient    Euler's totient (trial division and sieve), coprime sums, lengths
  generator  streaming / mediant-refinement / brute-force producers of F_n
  invariants streaming checkers for every structural identity of F_n
  cli        the `farey` command line tool
"""

from .core import (
    EQUAL,
    GREATER,
    HALF,
    LESS,
    ONE,
    ZERO,
    Fraction,
    RawPair,
    compare,
    integer_width,
    make_fraction,
    mediant,
    neighbor_det,
    reflect,
)
from .errors import (
    CapExceeded,
    EndOfSequence,
    FareyError,
    NotAscending,
    Overflow,
    OutOfUnitInterval,
    TheoremViolation,
    ZeroDenominator,
)
from .generator import (
    FareySequence,
    FareyStream,
    ascending_stream,
    bruteforce_sequence,
    descending_stream,
    materialize,
    neighbors,
    new_terms,
    next_term,
    refine,
)
from .invariants import (
    CheckResult,
    SumStats,
    VerificationReport,
    length_check,
    neighbor_chain_check,
    palindrome_check,
    palindrome_length,
    reflection_check,
    sum_check,
    sum_check_recurrent,
    verify_all,
)
from .totient import (
    LengthTable,
    TotientTable,
    coprime_sum,
    coprime_sum_bruteforce,
    farey_length,
    length_table,
    phi,
    phi_sieve,
)

__version__ = "0.1.0"
