"""Exact scalar combinatorics: binomial coefficients, double factorials,
Catalan numbers.

Everything runs on Python's arbitrary-precision integers and
`fractions.Fraction`; there are no floating-point code paths anywhere.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from functools import lru_cache

__all__ = ["binom_int", "binom_rat", "double_factorial_odd", "catalan"]

# Bounded memo for the hot grid loops: C(m+k,2k), C(2k,k) and friends recur
# across every congruence grid.  Size overridable via the environment.
_CACHE_SIZE = int(os.environ.get("IVPVERIFY_BINOM_CACHE", str(1 << 16)))


@lru_cache(maxsize=_CACHE_SIZE)
def binom_int(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for any integer n and k >= 0.

    The upper argument may be negative, following the generalized
    definition C(n, k) = n(n-1)...(n-k+1) / k!; in particular
    C(-1, k) = (-1)**k and C(-n, k) = (-1)**k * C(n+k-1, k).

    Negative k is a hard error: the call sites never index below zero,
    and a silent zero would mask bugs.
    """
    if k < 0:
        raise ValueError(f"binom_int: k must be >= 0, got {k}")
    if n >= 0:
        return math.comb(n, k)
    sign = -1 if k % 2 else 1
    return sign * math.comb(k - n - 1, k)


def binom_rat(r: Fraction | int, k: int) -> Fraction:
    """C(r, k) = r(r-1)...(r-k+1) / k! for rational r and integer k >= 0.

    Agrees with :func:`binom_int` whenever r is an integer.
    """
    if k < 0:
        raise ValueError(f"binom_rat: k must be >= 0, got {k}")
    r = Fraction(r)
    num = 1
    for i in range(k):
        num *= r.numerator - i * r.denominator
    return Fraction(num, r.denominator**k * math.factorial(k))


def double_factorial_odd(l: int) -> int:
    """(2l-1)!! = 1 * 3 * 5 * ... * (2l-1), for l >= 1."""
    if l < 1:
        raise ValueError(f"double_factorial_odd: l must be >= 1, got {l}")
    return math.prod(range(1, 2 * l, 2))


def catalan(k: int) -> int:
    """The k-th Catalan number C(2k, k) / (k + 1), exactly.

    The division is checked to be exact and the result is cross-checked
    against the difference form C(2k, k) - C(2k, k-1), with the k = 0
    convention C(0, -1) = 0.
    """
    if k < 0:
        raise ValueError(f"catalan: k must be >= 0, got {k}")
    central = math.comb(2 * k, k)
    value, rem = divmod(central, k + 1)
    assert rem == 0, f"C({2 * k},{k}) not divisible by {k + 1}"
    assert value == central - (math.comb(2 * k, k - 1) if k else 0)
    return value
