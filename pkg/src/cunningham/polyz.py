"""Dense univariate polynomials with arbitrary-precision integer coefficients.

A polynomial is stored as a tuple of ints in ascending degree order, so
``Polynomial([1, 2, 3])`` is ``3x^2 + 2x + 1``.  The zero polynomial is the
empty tuple; otherwise the last coefficient (the leading one) is nonzero.
All arithmetic is exact.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        coeffs = tuple(int(c) for c in coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @staticmethod
    def zero() -> Polynomial:
        return Polynomial()

    @staticmethod
    def one() -> Polynomial:
        return Polynomial((1,))

    @staticmethod
    def constant(c: int) -> Polynomial:
        return Polynomial((c,))

    @staticmethod
    def monomial(coeff: int, degree: int) -> Polynomial:
        """coeff * x**degree"""
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return Polynomial((0,) * degree + (coeff,))

    @staticmethod
    def from_terms(terms) -> Polynomial:
        """Build from (exponent, coefficient) pairs or a mapping; repeated
        exponents accumulate."""
        pairs = list(terms.items() if hasattr(terms, "items") else terms)
        if not pairs:
            return Polynomial()
        if min(e for e, _ in pairs) < 0:
            raise ValueError("exponents must be nonnegative")
        coeffs = [0] * (max(e for e, _ in pairs) + 1)
        for e, c in pairs:
            coeffs[e] += c
        return Polynomial(coeffs)

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    # -- ring arithmetic ----------------------------------------------

    def __add__(self, other: Polynomial | int) -> Polynomial:
        other = _coerce(other)
        return Polynomial(
            a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        other = _coerce(other)
        return Polynomial(
            a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other: int) -> Polynomial:
        return _coerce(other) - self

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, n: int) -> Polynomial:
        """Multiply by x**n."""
        if self.is_zero:
            return self
        return Polynomial((0,) * n + self.coeffs)

    # -- evaluation ---------------------------------------------------

    def eval_at(self, point: int | Fraction) -> int | Fraction:
        """Exact Horner evaluation; returns an int for int input."""
        acc: int | Fraction = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    __call__ = eval_at

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    # -- structure ----------------------------------------------------

    def reciprocal(self) -> Polynomial:
        """x**deg(f) * f(1/x): the coefficient sequence reversed.

        Degree drops when f(0) = 0; undefined for the zero polynomial.
        """
        if self.is_zero:
            raise ValueError("the zero polynomial has no reciprocal")
        return Polynomial(reversed(self.coeffs))

    def is_reciprocal(self) -> bool:
        """True when f equals +/- its reciprocal (palindromic or antipalindromic)."""
        r = self.reciprocal()
        return self == r or self == -r

    def chain_step(self, eps: int) -> Polynomial:
        """One recurrence step x*f + eps with eps in {-1, +1}."""
        if eps not in (-1, 1):
            raise ValueError("eps must be -1 or +1")
        return Polynomial((eps,) + self.coeffs)

    def content_and_primitive(self) -> tuple[int, int, Polynomial]:
        """(content, sign, primitive) with f = sign * content * primitive.

        The primitive part has coefficient gcd 1 and positive leading
        coefficient; content is positive.
        """
        if self.is_zero:
            raise ValueError("the zero polynomial has no content decomposition")
        content = math.gcd(*self.coeffs) if len(self.coeffs) > 1 else abs(self.coeffs[0])
        sign = 1 if self.coeffs[-1] > 0 else -1
        prim = Polynomial(c // (sign * content) for c in self.coeffs)
        return content, sign, prim

    def primitive(self) -> Polynomial:
        return self.content_and_primitive()[2]


def _coerce(value: Polynomial | int) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial((value,))


X = Polynomial((0, 1))


def divmod_exact_lc(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Division with remainder when every quotient step divides exactly.

    Raises ValueError if some leading coefficient does not divide, which is
    the usual integer-coefficient situation; use pseudo_rem there instead.
    """
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    glc = g.coeffs[-1]
    quot = [0] * max(len(rem) - dg, 0)
    while len(rem) > dg and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) <= dg:
            break
        q, r = divmod(rem[-1], glc)
        if r:
            raise ValueError("leading coefficient does not divide")
        pos = len(rem) - 1 - dg
        quot[pos] = q
        for i, gc in enumerate(g.coeffs):
            rem[pos + i] -= q * gc
    return Polynomial(quot), Polynomial(rem)


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """f / g over the integers, or None when g does not divide f exactly."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if f.is_zero:
        return Polynomial()
    if len(f.coeffs) < len(g.coeffs):
        return None
    try:
        q, r = divmod_exact_lc(f, g)
    except ValueError:
        return None
    return q if r.is_zero else None


def pseudo_rem(f: Polynomial, g: Polynomial) -> Polynomial:
    """Pseudo-remainder of lc(g)**(deg f - deg g + 1) * f by g."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = f
    dg = len(g.coeffs) - 1
    glc = g.coeffs[-1]
    while not rem.is_zero and len(rem.coeffs) - 1 >= dg:
        shift = len(rem.coeffs) - 1 - dg
        rem = rem * glc - g.shift(shift) * rem.coeffs[-1]
    return rem


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    if f.is_zero:
        return g.primitive()
    if g.is_zero:
        return f.primitive()
    a, b = f.primitive(), g.primitive()
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    while not b.is_zero:
        r = pseudo_rem(a, b)
        a, b = b, (r.primitive() if not r.is_zero else Polynomial())
    return a


def descartes_sign_changes(f: Polynomial) -> int:
    """Sign changes in the nonzero coefficients, read in degree order."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no sign-change count")
    signs = [c > 0 for c in f.coeffs if c]
    return sum(a != b for a, b in zip(signs, signs[1:]))
