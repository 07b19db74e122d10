"""Integer-side verification: integer-valuedness of the weighted
transformation sums, divisibility of the Schmidt-combination
coefficients, and the mod-n^2 congruence family.

Severity matters here.  Most grid cells instantiate proved statements
(severity "theorem"); the l >= 2 congruence rows and the m >= 3 spot
checks instantiate open conjectures (severity "conjecture"), so a
failing cell there would be a counterexample, not a bug in a proof.
Every verdict is computed on exact integers -- no modular reduction
happens before the final divisibility test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
from typing import Optional

from .combinat import binom_int, catalan, double_factorial_odd
from .gridrun import run_grid
from .identities import build_lhs
from .ratpoly import RatPoly, binom_poly, is_integer_valued
from .report import CaseResult, VerificationReport, make_case

__all__ = [
    "SchmidtCoeffs",
    "CongruenceCase",
    "schmidt_combination_coeffs",
    "check_lemma_schmidt",
    "theorem1_polynomial",
    "check_theorem1",
    "theorem2_polynomial",
    "check_theorem2",
    "catalan_form_polynomial",
    "check_catalan_form",
    "conjecture_final_value",
    "check_conjecture_final",
    "check_conjecture_sun_m",
    "sun_ii_polynomial",
    "check_conjecture_sun_ii",
]

_EPS_BOTH = (1, -1)


def _validate_eps(eps: int) -> None:
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")


def _eps_echo(eps_set) -> str:
    return ",".join("+1" if e > 0 else "-1" for e in sorted(set(eps_set), reverse=True))


def _eps_keys(eps_set) -> tuple[int, ...]:
    out = tuple(sorted(set(eps_set), reverse=True))
    if not out:
        raise ValueError("eps set must be non-empty")
    for e in out:
        _validate_eps(e)
    return out


# -- Schmidt-combination coefficients ----------------------------------------

@dataclass(frozen=True)
class SchmidtCoeffs:
    """Integer coefficient vector of sum_k eps^k (2k+1)^(2l-1) S_k(x_0..x_k),

    where S_k(x_0,...,x_k) = sum_j C(k+j,2j) C(2j,j) x_j.  Collecting by
    x_j gives coeffs[j] = sum_{k=j}^{n-1} eps^k (2k+1)^(2l-1) C(k+j,2j)
    C(2j,j).  The divisibility claim: every entry is a multiple of n.
    """

    l: int
    n: int
    eps: int
    coeffs: tuple[int, ...]

    def first_indivisible(self) -> Optional[int]:
        for j, c in enumerate(self.coeffs):
            if c % self.n:
                return j
        return None

    def all_divisible(self) -> bool:
        return self.first_indivisible() is None


def schmidt_combination_coeffs(l: int, n: int, eps: int) -> SchmidtCoeffs:
    if l < 1 or n < 1:
        raise ValueError(f"schmidt_combination_coeffs: need l, n >= 1, got {l}, {n}")
    _validate_eps(eps)
    power = 2 * l - 1
    coeffs = tuple(
        sum(
            eps ** k * (2 * k + 1) ** power * binom_int(k + j, 2 * j)
            for k in range(j, n)
        )
        * binom_int(2 * j, j)
        for j in range(n)
    )
    return SchmidtCoeffs(l=l, n=n, eps=eps, coeffs=coeffs)


def _schmidt_case(key: tuple[int, int, int]) -> CaseResult:
    l, n, eps = key
    sc = schmidt_combination_coeffs(l, n, eps)
    bad = sc.first_indivisible()
    witness = None
    if bad is not None:
        witness = f"coefficient j={bad} is {sc.coeffs[bad]}, not divisible by {n}"
    return make_case((("l", l), ("n", n), ("eps", eps)), bad is None, witness)


def check_lemma_schmidt(
    l_max: int, n_max: int, eps=_EPS_BOTH, jobs: int = 1
) -> VerificationReport:
    """Every Schmidt-combination coefficient is divisible by n, over the grid."""
    if l_max < 1 or n_max < 1:
        raise ValueError(f"check_lemma_schmidt: need bounds >= 1, got {l_max}, {n_max}")
    eps_keys = _eps_keys(eps)
    keys = [
        (l, n, e)
        for l in range(1, l_max + 1)
        for n in range(1, n_max + 1)
        for e in eps_keys
    ]
    config = {"l_max": l_max, "n_max": n_max, "eps": _eps_echo(eps_keys)}
    return run_grid("lemma-schmidt", config, keys, _schmidt_case, jobs=jobs)


# -- weighted-sum polynomials and integer-valuedness -------------------------

@lru_cache(maxsize=None)
def theorem1_polynomial(l: int, n: int, eps: int) -> RatPoly:
    """(1/n) sum_{k=0}^{n-1} eps^k (2k+1)^(2l-1) S_k(x)."""
    if l < 1 or n < 1:
        raise ValueError(f"theorem1_polynomial: need l, n >= 1, got {l}, {n}")
    _validate_eps(eps)
    power = 2 * l - 1
    acc = RatPoly()
    for k in range(n):
        acc = acc + build_lhs(k) * (eps ** k * (2 * k + 1) ** power)
    return acc * Fraction(1, n)


def _int_valued_case(key, poly: RatPoly) -> CaseResult:
    ok, x0 = is_integer_valued(poly)
    witness = None if ok else f"p({x0}) = {poly(x0)} is not an integer"
    return make_case(key, ok, witness)


def _theorem1_case(key: tuple[int, int, int]) -> CaseResult:
    l, n, eps = key
    return _int_valued_case(
        (("l", l), ("n", n), ("eps", eps)), theorem1_polynomial(l, n, eps)
    )


def check_theorem1(
    l_max: int, n_max: int, eps=_EPS_BOTH, jobs: int = 1
) -> VerificationReport:
    """The 1/n weighted sums are integer-valued across the whole grid."""
    if l_max < 1 or n_max < 1:
        raise ValueError(f"check_theorem1: need bounds >= 1, got {l_max}, {n_max}")
    eps_keys = _eps_keys(eps)
    keys = [
        (l, n, e)
        for l in range(1, l_max + 1)
        for n in range(1, n_max + 1)
        for e in eps_keys
    ]
    config = {"l_max": l_max, "n_max": n_max, "eps": _eps_echo(eps_keys)}
    return run_grid("theorem1", config, keys, _theorem1_case, jobs=jobs)


@lru_cache(maxsize=None)
def theorem2_polynomial(n: int) -> RatPoly:
    """(1/n^2) sum_{k=0}^{n-1} (2k+1) S_k(x)."""
    if n < 1:
        raise ValueError(f"theorem2_polynomial: n must be >= 1, got {n}")
    acc = RatPoly()
    for k in range(n):
        acc = acc + build_lhs(k) * (2 * k + 1)
    return acc * Fraction(1, n * n)


def _theorem2_case(n: int) -> CaseResult:
    return _int_valued_case((("n", n),), theorem2_polynomial(n))


def check_theorem2(n_max: int, jobs: int = 1) -> VerificationReport:
    if n_max < 1:
        raise ValueError(f"check_theorem2: n_max must be >= 1, got {n_max}")
    return run_grid(
        "theorem2", {"n_max": n_max}, range(1, n_max + 1), _theorem2_case, jobs=jobs
    )


# -- Catalan-weighted rewriting of the theorem2 sum --------------------------

@lru_cache(maxsize=None)
def _shifted_central(k: int) -> RatPoly:
    """C(x+k, 2k)."""
    return binom_poly(2 * k, shift=k)


@lru_cache(maxsize=None)
def catalan_form_polynomial(n: int) -> RatPoly:
    """sum_{k=0}^{n-1} catalan(k) C(n-1,k) C(n+k,k) C(x+k,2k).

    Term-for-term this is (1/n) C(n,k+1) C(n+k,k) C(2k,k) C(x+k,2k);
    pulling the 1/(k+1) into the central binomial makes every scalar
    weight a visible integer.
    """
    if n < 1:
        raise ValueError(f"catalan_form_polynomial: n must be >= 1, got {n}")
    acc = RatPoly()
    for k in range(n):
        weight = catalan(k) * binom_int(n - 1, k) * binom_int(n + k, k)
        acc = acc + _shifted_central(k) * weight
    return acc


def _catalan_case(key: tuple) -> CaseResult:
    part = key[0]
    if part == "identity":
        n = key[1]
        p, q = theorem2_polynomial(n), catalan_form_polynomial(n)
        ok = p == q
        witness = None
        if not ok:
            i = next(
                i for i in range(max(p.degree, q.degree) + 1) if p.coeff(i) != q.coeff(i)
            )
            witness = f"coeff of x^{i}: {p.coeff(i)} vs {q.coeff(i)}"
        return make_case((("part", part), ("n", n)), ok, witness)
    _, n, x0 = key
    bad = None
    for k in range(n):
        weight = catalan(k) * binom_int(n - 1, k) * binom_int(n + k, k)
        term = weight * _shifted_central(k)(x0)
        if term.denominator != 1:
            bad = f"k={k} summand {term} is not an integer"
            break
    return make_case((("part", part), ("n", n), ("x", x0)), bad is None, bad)


def check_catalan_form(
    n_max: int, x_min: int = -10, x_max: int = 10, jobs: int = 1
) -> VerificationReport:
    """Two claims per n: the Catalan-weighted sum equals the 1/n^2
    weighted sum as an exact polynomial, and each of its summands is an
    integer at every integer x in [x_min, x_max].
    """
    if n_max < 1:
        raise ValueError(f"check_catalan_form: n_max must be >= 1, got {n_max}")
    if x_min > x_max:
        raise ValueError(f"check_catalan_form: empty x range [{x_min}, {x_max}]")
    keys: list[tuple] = [("identity", n) for n in range(1, n_max + 1)]
    keys += [
        ("terms", n, x0)
        for n in range(1, n_max + 1)
        for x0 in range(x_min, x_max + 1)
    ]
    config = {"n_max": n_max, "x_min": x_min, "x_max": x_max}
    return run_grid("catalan-form", config, keys, _catalan_case, jobs=jobs)


# -- the mod-n^2 congruence family -------------------------------------------

@dataclass(frozen=True)
class CongruenceCase:
    """One congruence instance: value, modulus, and the division verdict."""

    l: int
    n: int
    k: int
    value: int
    modulus: int

    @property
    def holds(self) -> bool:
        return self.value % self.modulus == 0


def conjecture_final_value(l: int, n: int, k: int) -> CongruenceCase:
    """(2l-1)!! sum_{m=k}^{n-1} (2m+1)^(2l-1) C(m+k,2k) C(2k,k)^2 mod n^2."""
    if l < 1 or n < 1:
        raise ValueError(f"conjecture_final_value: need l, n >= 1, got {l}, {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"conjecture_final_value: need 0 <= k <= n-1, got k={k}, n={n}")
    power = 2 * l - 1
    central_sq = binom_int(2 * k, k) ** 2
    total = double_factorial_odd(l) * central_sq * sum(
        (2 * m + 1) ** power * binom_int(m + k, 2 * k) for m in range(k, n)
    )
    return CongruenceCase(l=l, n=n, k=k, value=total, modulus=n * n)


def _conjecture_final_case(key: tuple[int, int, int]) -> CaseResult:
    l, n, k = key
    case = conjecture_final_value(l, n, k)
    severity = "theorem" if l == 1 else "conjecture"
    ok = case.holds
    witness = f"value {case.value} = {case.value % case.modulus} mod {case.modulus}"
    if l == 1 and ok:
        # The proved route: at l=1 the sum telescopes to a closed product.
        closed = n * binom_int(n, k + 1) * binom_int(n + k, k) * binom_int(2 * k, k)
        ok = case.value == closed
        witness = f"value {case.value} != closed form {closed}"
    return make_case((("l", l), ("n", n), ("k", k)), ok, witness, severity=severity)


def check_conjecture_final(l_max: int, n_max: int, jobs: int = 1) -> VerificationReport:
    """The congruence mod n^2 over l <= l_max, n <= n_max, 0 <= k < n.

    l = 1 rows also have to match the closed form
    n C(n,k+1) C(n+k,k) C(2k,k) exactly.
    """
    if l_max < 1 or n_max < 1:
        raise ValueError(
            f"check_conjecture_final: need bounds >= 1, got {l_max}, {n_max}"
        )
    keys = [
        (l, n, k)
        for l in range(1, l_max + 1)
        for n in range(1, n_max + 1)
        for k in range(n)
    ]
    config = {"l_max": l_max, "n_max": n_max}
    return run_grid("conjecture-final", config, keys, _conjecture_final_case, jobs=jobs)


# -- numeric spot checks for general power m ---------------------------------

@lru_cache(maxsize=1 << 20)
def _power_sum_at(m: int, k: int, x0: int) -> int:
    """sum_j C(-x0-1,j)^m C(x0,k-j)^m at the integer point x0."""
    return sum(
        binom_int(-x0 - 1, j) ** m * binom_int(x0, k - j) ** m for j in range(k + 1)
    )


def _sun_m_case(key: tuple[int, int, int, int], m: int) -> CaseResult:
    l, n, eps, x0 = key
    power = 2 * l - 1
    total = sum(
        eps ** k * (2 * k + 1) ** power * _power_sum_at(m, k, x0) for k in range(n)
    )
    ok = total % n == 0
    witness = f"sum {total} at x={x0} is not divisible by {n}"
    severity = "theorem" if m <= 2 else "conjecture"
    return make_case(
        (("l", l), ("n", n), ("eps", eps), ("x", x0)), ok, witness, severity=severity
    )


def check_conjecture_sun_m(
    m: int,
    l_max: int,
    n_max: int,
    eps=_EPS_BOTH,
    x_min: int = -10,
    x_max: int = 10,
    jobs: int = 1,
) -> VerificationReport:
    """Pointwise integrality of (1/n) sum_k eps^k (2k+1)^(2l-1)
    sum_j C(-x-1,j)^m C(x,k-j)^m at integer x in [x_min, x_max].

    The polynomial in question has degree m(n-1), so when the x range
    contains at least m(n-1)+1 consecutive integers the pointwise check
    is a complete integer-valuedness certificate for that n; beyond
    that bound it is a spot check.  The report's notes state where the
    cutoff falls.  m <= 2 instances are proved; m >= 3 ones are open.
    """
    if m < 1:
        raise ValueError(f"check_conjecture_sun_m: m must be >= 1, got {m}")
    if l_max < 1 or n_max < 1:
        raise ValueError(
            f"check_conjecture_sun_m: need bounds >= 1, got {l_max}, {n_max}"
        )
    if x_min > x_max:
        raise ValueError(f"check_conjecture_sun_m: empty x range [{x_min}, {x_max}]")
    eps_keys = _eps_keys(eps)
    points = x_max - x_min + 1
    n_complete = (points - 1) // m + 1
    if n_complete >= n_max:
        regime = f"complete integer-valuedness certificate for every n <= {n_max}"
    else:
        regime = (
            f"complete certificate for n <= {n_complete}, "
            f"spot check for {n_complete} < n <= {n_max}"
        )
    notes = [
        f"degree is m(n-1) = {m}(n-1); x range holds {points} consecutive points: "
        + regime
    ]
    keys = [
        (l, n, e, x0)
        for l in range(1, l_max + 1)
        for n in range(1, n_max + 1)
        for e in eps_keys
        for x0 in range(x_min, x_max + 1)
    ]
    config = {
        "m": m,
        "l_max": l_max,
        "n_max": n_max,
        "eps": _eps_echo(eps_keys),
        "x_min": x_min,
        "x_max": x_max,
    }
    return run_grid(
        "conjecture-sun-m",
        config,
        keys,
        partial(_sun_m_case, m=m),
        jobs=jobs,
        notes=notes,
    )


# -- the (2l-1)!!/n^2 strengthening ------------------------------------------

@lru_cache(maxsize=None)
def sun_ii_polynomial(l: int, n: int) -> RatPoly:
    """((2l-1)!!/n^2) sum_{k=0}^{n-1} (2k+1)^(2l-1) S_k(x)."""
    if l < 1 or n < 1:
        raise ValueError(f"sun_ii_polynomial: need l, n >= 1, got {l}, {n}")
    return theorem1_polynomial(l, n, 1) * Fraction(double_factorial_odd(l), n)


def _sun_ii_case(key: tuple[int, int]) -> CaseResult:
    l, n = key
    ok, x0 = is_integer_valued(sun_ii_polynomial(l, n))
    witness = None if ok else f"p({x0}) = {sun_ii_polynomial(l, n)(x0)} is not an integer"
    severity = "theorem" if l == 1 else "conjecture"
    return make_case((("l", l), ("n", n)), ok, witness, severity=severity)


def check_conjecture_sun_ii(l_max: int, n_max: int, jobs: int = 1) -> VerificationReport:
    """Integer-valuedness of the (2l-1)!!/n^2 weighted sums.

    l = 1 is the proved 1/n^2 statement; l >= 2 instances follow from
    the open mod-n^2 congruence, so they carry conjecture severity.
    """
    if l_max < 1 or n_max < 1:
        raise ValueError(
            f"check_conjecture_sun_ii: need bounds >= 1, got {l_max}, {n_max}"
        )
    keys = [(l, n) for l in range(1, l_max + 1) for n in range(1, n_max + 1)]
    config = {"l_max": l_max, "n_max": n_max}
    return run_grid("conjecture-sun-ii", config, keys, _sun_ii_case, jobs=jobs)
