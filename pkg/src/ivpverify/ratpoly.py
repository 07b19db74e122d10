"""Dense univariate polynomials with exact rational coefficients.

`RatPoly` stores coefficients little-endian: index i holds the
coefficient of x**i, trailing zeros trimmed.  Instances are immutable
values; every operation returns a new polynomial.  The zero polynomial
has an empty coefficient tuple and degree -1, so that the degree
sentinel compares below every genuine degree.

The module also provides the binomial basis C(x,0), C(x,1), ... and the
resulting decision procedure for integer-valuedness: a polynomial takes
integer values at every integer argument exactly when its coefficients
in the binomial basis (the iterated forward differences at 0) are all
integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

__all__ = [
    "RatPoly",
    "BinomialBasis",
    "binom_poly",
    "reflect_argument",
    "to_binomial_basis",
    "from_binomial_basis",
    "is_integer_valued",
]

Scalar = Union[int, Fraction]


def _as_fraction(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class RatPoly:
    """Immutable dense polynomial over Fraction."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reporting -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int) -> Fraction:
        """Coefficient of x**i (zero beyond the stored degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == RatPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring operations ----------------------------------------------------

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs])

    def __add__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            other = RatPoly([other])
        elif not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "RatPoly":
        return self + (-other if isinstance(other, RatPoly) else RatPoly([-_as_fraction(other)]))

    def __rsub__(self, other) -> "RatPoly":
        return (-self) + other

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatPoly()
            return RatPoly([c * other for c in self.coeffs])
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatPoly()
        # Clear denominators first: one integer convolution plus a single
        # normalization per output coefficient beats gcd work on every
        # intermediate product.
        da = math.lcm(*(c.denominator for c in self.coeffs))
        db = math.lcm(*(c.denominator for c in other.coeffs))
        a = [int(c * da) for c in self.coeffs]
        b = [int(c * db) for c in other.coeffs]
        conv = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        den = da * db
        return RatPoly([Fraction(v, den) for v in conv])

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "RatPoly":
        if exp < 0:
            raise ValueError("RatPoly only supports non-negative powers")
        result = RatPoly([1])
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def __call__(self, x0: Scalar) -> Fraction:
        """Evaluate at x0 by Horner's rule, exactly."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            parts.append(("- " if c < 0 else "+ ") + term)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"RatPoly({self})"


def binom_poly(k: int, shift: int = 0) -> RatPoly:
    """The degree-k polynomial C(x + shift, k) in x.

    C(x + shift, k) = (x+shift)(x+shift-1)...(x+shift-k+1) / k!
    """
    if k < 0:
        raise ValueError(f"binom_poly: k must be >= 0, got {k}")
    p = RatPoly([1])
    for i in range(k):
        p = p * RatPoly([shift - i, 1])
    return p * Fraction(1, math.factorial(k))


def reflect_argument(p: RatPoly) -> RatPoly:
    """Substitute -x-1 for x, i.e. return p(-x-1).

    The substitution is an involution and a bijection of the integers,
    so it preserves integer-valuedness.  Computed by Horner-style
    composition, exactly.
    """
    t = RatPoly([-1, -1])
    acc = RatPoly()
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


@dataclass(frozen=True)
class BinomialBasis:
    """Coefficients of a polynomial relative to C(x,0), C(x,1), ...

    Entry i equals the i-th forward difference of the polynomial at 0.
    The source polynomial is integer-valued iff every entry is an
    integer.
    """

    coeffs: tuple[Fraction, ...]

    def all_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def first_non_integer(self) -> Optional[int]:
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                return i
        return None

    def to_poly(self) -> RatPoly:
        return from_binomial_basis(self.coeffs)


def to_binomial_basis(p: RatPoly) -> BinomialBasis:
    """Newton forward-difference transform on the values p(0), ..., p(deg)."""
    vals = [p(i) for i in range(p.degree + 1)]
    out = []
    while vals:
        out.append(vals[0])
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return BinomialBasis(tuple(out))


def from_binomial_basis(basis: "BinomialBasis | Iterable[Scalar]") -> RatPoly:
    """Reconstruct sum_i c_i * C(x, i) from binomial-basis coefficients."""
    coeffs = basis.coeffs if isinstance(basis, BinomialBasis) else [_as_fraction(c) for c in basis]
    acc = RatPoly()
    b = RatPoly([1])
    for i, c in enumerate(coeffs):
        acc = acc + b * c
        b = b * RatPoly([-i, 1]) * Fraction(1, i + 1)
    return acc


def is_integer_valued(p: RatPoly) -> tuple[bool, Optional[int]]:
    """Decide whether p maps every integer to an integer.

    Returns (True, None) or (False, x0) where x0 in [0, deg p] is a
    witness with p(x0) not an integer: if i is the first fractional
    binomial-basis coefficient then p(i) itself is fractional, because
    C(i, j) vanishes for j > i and the earlier terms are integral.
    """
    witness = to_binomial_basis(p).first_non_integer()
    return (witness is None, witness)
