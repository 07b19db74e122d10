"""Exact verification of the binomial-sum identity family.

The central object is the degree-2n polynomial

    S_n(x) = sum_{k=0}^n C(-x-1,k)^2 C(x,n-k)^2
           = sum_{k=0}^n C(n+k,2k) C(2k,k)^2 C(x+k,2k)

built here from *both* closed forms independently (`build_lhs`,
`build_rhs`) and compared coefficient by coefficient.  The same module
checks the order-2 recurrence satisfied by both forms, the
Chu-Vandermonde convolution, a telescoping sum of odd-weighted
binomials, and two rational-value identities at x = -1/2 and
x = -1/4, -3/4.

All checks are exact; a failure carries a witness (first differing
coefficient, or the two unequal values).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Union

from .combinat import binom_int, binom_rat
from .gridrun import run_grid
from .ratpoly import RatPoly, binom_poly, reflect_argument
from .report import CaseResult, VerificationReport, make_case

__all__ = [
    "TransformPair",
    "build_lhs",
    "build_rhs",
    "transform_pair",
    "verify_transformation",
    "recurrence_coefficients",
    "verify_recurrence",
    "verify_chu_vandermonde",
    "verify_telescoped_sum",
    "verify_sun_identity_one",
    "verify_sun_identity_two",
    "eval_transform_at",
]

Rational = Union[int, Fraction]


# -- cached polynomial factors ----------------------------------------------

@lru_cache(maxsize=None)
def _reflected_binom(j: int) -> RatPoly:
    """C(-x-1, j) as a polynomial in x."""
    return reflect_argument(binom_poly(j))


@lru_cache(maxsize=None)
def _reflected_binom_sq(j: int) -> RatPoly:
    return _reflected_binom(j) ** 2


@lru_cache(maxsize=None)
def _binom_sq(j: int) -> RatPoly:
    return binom_poly(j) ** 2


@lru_cache(maxsize=None)
def _shifted_central(k: int) -> RatPoly:
    """C(x+k, 2k), the degree-2k factor of the right-hand closed form."""
    return binom_poly(2 * k, shift=k)


# -- the two closed forms ----------------------------------------------------

@lru_cache(maxsize=None)
def build_lhs(n: int) -> RatPoly:
    """sum_{k=0}^n C(-x-1,k)^2 C(x,n-k)^2, a polynomial of degree 2n."""
    if n < 0:
        raise ValueError(f"build_lhs: n must be >= 0, got {n}")
    acc = RatPoly()
    for k in range(n + 1):
        acc = acc + _reflected_binom_sq(k) * _binom_sq(n - k)
    return acc


@lru_cache(maxsize=None)
def build_rhs(n: int) -> RatPoly:
    """sum_{k=0}^n C(n+k,2k) C(2k,k)^2 C(x+k,2k), degree 2n."""
    if n < 0:
        raise ValueError(f"build_rhs: n must be >= 0, got {n}")
    acc = RatPoly()
    for k in range(n + 1):
        weight = binom_int(n + k, 2 * k) * binom_int(2 * k, k) ** 2
        acc = acc + _shifted_central(k) * weight
    return acc


class TransformPair(NamedTuple):
    """Both closed forms of S_n, kept separate so they can be compared."""

    n: int
    lhs: RatPoly
    rhs: RatPoly

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def transform_pair(n: int) -> TransformPair:
    return TransformPair(n, build_lhs(n), build_rhs(n))


def _first_coeff_mismatch(p: RatPoly, q: RatPoly) -> str:
    for i in range(max(p.degree, q.degree) + 1):
        if p.coeff(i) != q.coeff(i):
            return f"coeff of x^{i}: {p.coeff(i)} vs {q.coeff(i)}"
    return "polynomials agree"


def _transform_case(n: int) -> CaseResult:
    pair = transform_pair(n)
    return make_case(
        (("n", n),),
        pair.equal,
        _first_coeff_mismatch(pair.lhs, pair.rhs),
    )


def verify_transformation(n_max: int, jobs: int = 1) -> VerificationReport:
    """Check build_lhs(n) == build_rhs(n) exactly for 0 <= n <= n_max."""
    if n_max < 0:
        raise ValueError(f"verify_transformation: n_max must be >= 0, got {n_max}")
    return run_grid(
        "transform", {"n_max": n_max}, range(n_max + 1), _transform_case, jobs=jobs
    )


# -- order-2 recurrence ------------------------------------------------------

def recurrence_coefficients(n: int) -> tuple[int, RatPoly, int]:
    """Coefficients (a_n, b_n(x), c_n) of the order-2 recurrence

        a_n S_{n+2} - b_n(x) S_{n+1} + c_n S_n = 0,

    with a_n = (n+2)^3, b_n = (2n+3)(2x^2+2x+n^2+3n+3), c_n = (n+1)^3.
    Sanity anchor: S_n(0) = 1 for every n, which forces
    c_n = (2n+3)(n^2+3n+3) - (n+2)^3 = (n+1)^3.
    """
    a = (n + 2) ** 3
    b = (2 * n + 3) * RatPoly([n * n + 3 * n + 3, 2, 2])
    c = (n + 1) ** 3
    return a, b, c


_BASE_CASES = {0: RatPoly([1]), 1: RatPoly([1, 2, 2])}
_FAMILIES = {"lhs": build_lhs, "rhs": build_rhs}


def _recurrence_case(key: tuple[str, int]) -> CaseResult:
    family, n = key
    if family == "base":
        lhs, rhs = build_lhs(n), build_rhs(n)
        expected = _BASE_CASES[n]
        ok = lhs == rhs == expected
        witness = f"S_{n}: lhs {lhs}, rhs {rhs}, expected {expected}"
    else:
        build = _FAMILIES[family]
        a, b, c = recurrence_coefficients(n)
        residual = build(n + 2) * a - b * build(n + 1) + build(n) * c
        ok = residual.is_zero
        witness = f"residual {residual}"
    return make_case((("family", family), ("n", n)), ok, witness)


def verify_recurrence(n_max: int, jobs: int = 1) -> VerificationReport:
    """Check that both closed forms satisfy the order-2 recurrence.

    Covers the shift index n = 0 .. n_max-2 for each family (so S_n up
    to n = n_max is constructed), plus the explicit n = 0, 1 base cases.
    """
    if n_max < 2:
        raise ValueError(f"verify_recurrence: n_max must be >= 2, got {n_max}")
    keys: list[tuple[str, int]] = [("base", 0), ("base", 1)]
    keys += [(fam, n) for fam in ("lhs", "rhs") for n in range(n_max - 1)]
    return run_grid(
        "recurrence", {"n_max": n_max}, keys, _recurrence_case, jobs=jobs
    )


# -- Chu-Vandermonde convolution --------------------------------------------

def _chu_case(k: int) -> CaseResult:
    acc = RatPoly()
    for j in range(k + 1):
        acc = acc + _reflected_binom(j) * binom_poly(k - j)
    expected = RatPoly([(-1) ** k])
    return make_case(
        (("k", k),),
        acc == expected,
        f"sum is {acc}, expected {(-1) ** k}",
    )


def verify_chu_vandermonde(k_max: int, jobs: int = 1) -> VerificationReport:
    """sum_j C(-x-1,j) C(x,k-j) collapses to the constant (-1)^k."""
    if k_max < 0:
        raise ValueError(f"verify_chu_vandermonde: k_max must be >= 0, got {k_max}")
    return run_grid(
        "chu-vandermonde", {"k_max": k_max}, range(k_max + 1), _chu_case, jobs=jobs
    )


# -- telescoping sum ---------------------------------------------------------

def _telescope_case(key: tuple[int, int]) -> CaseResult:
    n, k = key
    lhs = sum(
        (2 * m + 1) * binom_int(m + k, 2 * k) * binom_int(2 * k, k)
        for m in range(k, n)
    )
    rhs = n * binom_int(n, k + 1) * binom_int(n + k, k)
    return make_case((("n", n), ("k", k)), lhs == rhs, f"{lhs} != {rhs}")


def verify_telescoped_sum(n_max: int, jobs: int = 1) -> VerificationReport:
    """sum_{m=k}^{n-1} (2m+1) C(m+k,2k) C(2k,k) = n C(n,k+1) C(n+k,k)."""
    if n_max < 1:
        raise ValueError(f"verify_telescoped_sum: n_max must be >= 1, got {n_max}")
    keys = [(n, k) for n in range(1, n_max + 1) for k in range(n)]
    return run_grid("telescope", {"n_max": n_max}, keys, _telescope_case, jobs=jobs)


# -- rational-value identities at half-integer points ------------------------

def _sun_one_case(n: int) -> CaseResult:
    half = Fraction(-1, 2)
    lhs = 16 ** n * sum(
        binom_rat(half, k) ** 2 * binom_rat(half, n - k) ** 2 for k in range(n + 1)
    )
    rhs = sum(
        binom_int(2 * k, k) ** 3 * binom_int(k, n - k) * (-16) ** (n - k)
        for k in range(n + 1)
    )
    return make_case((("n", n),), lhs == rhs, f"{lhs} != {rhs}")


def verify_sun_identity_one(n_max: int, jobs: int = 1) -> VerificationReport:
    """16^n sum C(-1/2,k)^2 C(-1/2,n-k)^2 = sum C(2k,k)^3 C(k,n-k) (-16)^(n-k)."""
    if n_max < 0:
        raise ValueError(f"verify_sun_identity_one: n_max must be >= 0, got {n_max}")
    return run_grid(
        "sun-one", {"n_max": n_max}, range(n_max + 1), _sun_one_case, jobs=jobs
    )


def _sun_two_case(n: int) -> CaseResult:
    quarter, three_quarter = Fraction(-1, 4), Fraction(-3, 4)
    lhs = 64 ** n * sum(
        binom_rat(quarter, k) ** 2 * binom_rat(three_quarter, n - k) ** 2
        for k in range(n + 1)
    )
    rhs = sum(
        binom_int(2 * k, k) ** 3 * binom_int(2 * (n - k), n - k) * 16 ** (n - k)
        for k in range(n + 1)
    )
    return make_case((("n", n),), lhs == rhs, f"{lhs} != {rhs}")


def verify_sun_identity_two(n_max: int, jobs: int = 1) -> VerificationReport:
    """64^n sum C(-1/4,k)^2 C(-3/4,n-k)^2 = sum C(2k,k)^3 C(2n-2k,n-k) 16^(n-k)."""
    if n_max < 0:
        raise ValueError(f"verify_sun_identity_two: n_max must be >= 0, got {n_max}")
    return run_grid(
        "sun-two", {"n_max": n_max}, range(n_max + 1), _sun_two_case, jobs=jobs
    )


# -- pointwise cross-evaluation ----------------------------------------------

def eval_transform_at(n: int, x0: Rational) -> Fraction:
    """Evaluate both closed forms of S_n at x0 and return the common value.

    The two sums are evaluated independently (no shared polynomial
    construction), so agreement here is a genuine cross-check; a
    mismatch would mean the identity itself fails at (n, x0) and raises
    RuntimeError.
    """
    if n < 0:
        raise ValueError(f"eval_transform_at: n must be >= 0, got {n}")
    x0 = Fraction(x0)
    lhs = sum(
        binom_rat(-x0 - 1, k) ** 2 * binom_rat(x0, n - k) ** 2 for k in range(n + 1)
    )
    rhs = sum(
        binom_int(n + k, 2 * k) * binom_int(2 * k, k) ** 2 * binom_rat(x0 + k, 2 * k)
        for k in range(n + 1)
    )
    if lhs != rhs:
        raise RuntimeError(
            f"closed forms disagree at n={n}, x={x0}: {lhs} vs {rhs}"
        )
    return Fraction(lhs)
