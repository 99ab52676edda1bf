"""Dense univariate polynomials in ``z`` with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Polynomial:
    """Immutable polynomial stored as ascending coefficients without trailing zeros.

    The zero polynomial has an empty coefficient tuple and degree -1.
    Rational scalars mix freely with polynomials in ``+``, ``-``, ``*`` and
    may divide a polynomial.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: Sequence[Fraction]) -> Polynomial:
        # coefficients already Fractions; only trailing zeros need stripping
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        p = object.__new__(cls)
        p._coeffs = tuple(cs)
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def z(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def affine(cls, slope, intercept) -> Polynomial:
        """``slope * z + intercept``."""
        return cls((intercept, slope))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def __call__(self, z) -> Fraction:
        z = as_fraction(z)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial._raw([i * c for i, c in enumerate(self._coeffs)][1:])

    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw([-c for c in self._coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Polynomial):
            s = as_fraction(other)
            if s == 0:
                return Polynomial()
            return Polynomial._raw([c * s for c in self._coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant() or other.is_zero():
                return NotImplemented
            other = other._coeffs[0]
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        s = as_fraction(other)
        if s == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return Polynomial._raw([c / s for c in self._coeffs])

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result, base = Polynomial((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divide_linear(self, root) -> Polynomial:
        """Quotient of ``self / (z - root)`` by synthetic division; remainder must vanish."""
        root = as_fraction(root)
        if self.is_zero():
            return Polynomial()
        cs = self._coeffs
        out = [Fraction(0)] * (len(cs) - 1)
        carry = Fraction(0)
        for i in range(len(cs) - 1, 0, -1):
            carry = cs[i] + carry * root
            out[i - 1] = carry
        if cs[0] + carry * root != 0:
            raise ValueError(f"z - {root} does not divide the polynomial")
        return Polynomial._raw(out)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Rational)):
            return self._coeffs == Polynomial((other,))._coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Polynomial", self._coeffs))
        return self._hash

    def __repr__(self):
        return f"Polynomial([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = format_rational(c) + ("*" if mono else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")


def format_rational(q) -> str:
    """Render ``p/q`` with no whitespace, or ``p`` when the denominator is 1."""
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def rising_factorial_affine(slope, intercept, k: int) -> Polynomial:
    """Expand ``<slope*z + intercept>_k`` factor by factor."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    slope, intercept = as_fraction(slope), as_fraction(intercept)
    coeffs = [Fraction(1)]
    for i in range(k):
        c0 = intercept + i
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d] += c * c0
            nxt[d + 1] += c * slope
        coeffs = nxt
    return Polynomial._raw(coeffs)
