"""Integer Laurent polynomials in q, with q-integers, q-binomials, and
the congruence family modulo the squared q-integer.

Divisibility in the Laurent ring reduces to ordinary polynomial
division: normalize both operands by q^(-min exponent) so each has a
nonzero constant term; any Laurent cofactor between two such
polynomials is then itself a genuine polynomial, so integer long
division with a stall check decides the question completely.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

from .combinat import binom_int
from .congruences import conjecture_final_value
from .gridrun import run_grid
from .report import CaseResult, VerificationReport, make_case

__all__ = [
    "LaurentPoly",
    "QBinomial",
    "q_integer",
    "q_binom",
    "laurent_divisible",
    "q_sun_sum",
    "check_q_sun",
    "q_specialization_check",
]


class LaurentPoly:
    """Immutable polynomial in q with integer coefficients and possibly
    negative exponents.

    coeffs[i] is the coefficient of q**(min_exp + i); both ends are kept
    trimmed, and the zero polynomial is the empty tuple with min_exp 0.
    """

    __slots__ = ("min_exp", "coeffs")

    min_exp: int
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"LaurentPoly coefficients must be int, got {type(c)}")
        while cs and cs[-1] == 0:
            cs.pop()
        drop = 0
        while drop < len(cs) and cs[drop] == 0:
            drop += 1
        cs = cs[drop:]
        min_exp = min_exp + drop if cs else 0
        object.__setattr__(self, "min_exp", min_exp)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def max_exp(self) -> int:
        """Largest exponent with nonzero coefficient (min_exp - 1 if zero)."""
        return self.min_exp + len(self.coeffs) - 1

    def coeff(self, e: int) -> int:
        i = e - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.min_exp == other.min_exp and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == LaurentPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash((self.min_exp, self.coeffs))

    # -- ring operations ----------------------------------------------------

    def shift(self, s: int) -> "LaurentPoly":
        """Multiply by q**s."""
        if self.is_zero:
            return self
        return LaurentPoly(self.coeffs, self.min_exp + s)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly([-c for c in self.coeffs], self.min_exp)

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly([other])
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_exp - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_exp - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly([other])
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly([c * other for c in self.coeffs], self.min_exp)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(out, self.min_exp + other.min_exp)

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "LaurentPoly":
        if exp < 0:
            raise ValueError("LaurentPoly only supports non-negative powers")
        result = LaurentPoly([1])
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def eval_at_one(self) -> int:
        """Specialize q = 1: simply the sum of the coefficients."""
        return sum(self.coeffs)

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.min_exp + i
            if e == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}q" if e == 1 else f"{mag}q^{e}"
            parts.append(("- " if c < 0 else "+ ") + term)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def q_integer(n: int) -> LaurentPoly:
    """[n] = 1 + q + ... + q^(n-1)."""
    if n < 1:
        raise ValueError(f"q_integer: n must be >= 1, got {n}")
    return LaurentPoly([1] * n)


@lru_cache(maxsize=None)
def _q_binom_poly(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial via the q-Pascal rule B(n,k) = B(n-1,k-1) + q^k B(n-1,k)."""
    if k < 0 or k > n:
        return LaurentPoly()
    if k == 0 or k == n:
        return LaurentPoly([1])
    return _q_binom_poly(n - 1, k - 1) + _q_binom_poly(n - 1, k).shift(k)


class QBinomial(NamedTuple):
    """A q-binomial together with its defining indices."""

    n: int
    k: int
    value: LaurentPoly


def q_binom(n: int, k: int) -> QBinomial:
    """The Gaussian coefficient [n choose k]; zero polynomial when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"q_binom: need n, k >= 0, got {n}, {k}")
    return QBinomial(n, k, _q_binom_poly(n, k))


def laurent_divisible(f: LaurentPoly, g: LaurentPoly) -> tuple[bool, LaurentPoly]:
    """Decide whether f = g*h for some integer-coefficient Laurent h.

    Returns (True, quotient) or (False, obstruction), where the
    obstruction is the nonzero partial remainder at which integer long
    division stopped: either a term whose coefficient the divisor's
    leading coefficient does not divide, or a nonzero tail of degree
    below deg g.

    Writing f = q^a F and g = q^b G with F, G having nonzero constant
    terms, any Laurent cofactor h with Gh = F must itself be a genuine
    polynomial (a negative shift in h would force a zero constant term
    on one side), so dividing F by G over the integers is a complete
    decision procedure; the Laurent quotient is the polynomial quotient
    shifted by q^(a-b).
    """
    if g.is_zero:
        raise ValueError("laurent_divisible: divisor must be nonzero")
    if f.is_zero:
        return True, LaurentPoly()
    rem = list(f.coeffs)
    div = g.coeffs
    lead = div[-1]
    span = len(rem) - len(div) + 1
    if span <= 0:
        return False, f
    quot = [0] * span
    for i in range(span - 1, -1, -1):
        c = rem[i + len(div) - 1]
        if not c:
            continue
        step, leftover = divmod(c, lead)
        if leftover:
            return False, LaurentPoly(rem, f.min_exp)
        quot[i] = step
        for j, d in enumerate(div):
            rem[i + j] -= step * d
    if any(rem):
        return False, LaurentPoly(rem, f.min_exp)
    return True, LaurentPoly(quot, f.min_exp - g.min_exp)


def q_sun_sum(n: int, k: int) -> LaurentPoly:
    """sum_{m=k}^{n-1} [2m+1] [m+k choose 2k] [2k choose k]^2 q^(-(k+1)m)."""
    if n < 1:
        raise ValueError(f"q_sun_sum: n must be >= 1, got {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"q_sun_sum: need 0 <= k <= n-1, got k={k}, n={n}")
    acc = LaurentPoly()
    for m in range(k, n):
        term = q_integer(2 * m + 1) * _q_binom_poly(m + k, 2 * k)
        acc = acc + term.shift(-(k + 1) * m)
    central = _q_binom_poly(2 * k, k)
    return acc * (central * central)


def _q_sun_case(key: tuple[int, int]) -> CaseResult:
    n, k = key
    modulus = q_integer(n)
    ok, witness_poly = laurent_divisible(q_sun_sum(n, k), modulus * modulus)
    witness = None if ok else f"remainder {witness_poly} after division by [{n}]^2"
    return make_case((("n", n), ("k", k)), ok, witness)


def check_q_sun(n_max: int, jobs: int = 1) -> VerificationReport:
    """The q-sum is divisible by [n]^2 for every 1 <= n <= n_max, 0 <= k < n."""
    if n_max < 1:
        raise ValueError(f"check_q_sun: n_max must be >= 1, got {n_max}")
    keys = [(n, k) for n in range(1, n_max + 1) for k in range(n)]
    return run_grid("q-sun", {"n_max": n_max}, keys, _q_sun_case, jobs=jobs)


def _q_specialize_case(key: tuple[int, int]) -> CaseResult:
    n, k = key
    at_one = q_sun_sum(n, k).eval_at_one()
    classical = conjecture_final_value(1, n, k).value
    return make_case(
        (("n", n), ("k", k)),
        at_one == classical,
        f"q=1 value {at_one} != classical sum {classical}",
    )


def q_specialization_check(n_max: int, jobs: int = 1) -> VerificationReport:
    """Setting q = 1 in the q-sum reproduces the classical weighted sum
    sum_m (2m+1) C(m+k,2k) C(2k,k)^2 cell for cell."""
    if n_max < 1:
        raise ValueError(f"q_specialization_check: n_max must be >= 1, got {n_max}")
    keys = [(n, k) for n in range(1, n_max + 1) for k in range(n)]
    return run_grid("q-specialize", {"n_max": n_max}, keys, _q_specialize_case, jobs=jobs)
