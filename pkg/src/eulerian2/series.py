"""Truncated formal power series over an exact coefficient ring.

A series carries its coefficients ``c_0 .. c_T`` and the truncation order
``T``.  Every operation is exact and correct through ``x^T`` of the result;
nothing beyond the stored order is ever guessed.  Binary operations truncate
to the smaller of the two orders.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Iterable

from .exceptions import DomainError, RingMismatchError, SingularSeriesError, TruncationError
from .polynomial import Polynomial, as_fraction


class CoefficientRing:
    """A commutative ring with exact equality and division by rational scalars."""

    name = "abstract"

    def coerce(self, value):
        raise NotImplementedError

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def is_zero(self, value) -> bool:
        return value == self.zero()

    def constant_value(self, value) -> Fraction | None:
        """The rational value of ``value`` if it is a rational constant, else None."""
        raise NotImplementedError

    def __repr__(self):
        return f"<ring {self.name}>"


class _Rationals(CoefficientRing):
    name = "QQ"

    def coerce(self, value):
        if isinstance(value, Polynomial):
            if not value.is_constant():
                raise RingMismatchError("non-constant polynomial is not a rational")
            return value.coefficient(0)
        return as_fraction(value)

    def constant_value(self, value):
        return value


class _Polynomials(CoefficientRing):
    name = "QQ[z]"

    def coerce(self, value):
        if isinstance(value, Polynomial):
            return value
        return Polynomial.constant(value)

    def constant_value(self, value):
        return value.coefficient(0) if value.is_constant() else None


QQ = _Rationals()
QQ_z = _Polynomials()


class TruncatedSeries:
    __slots__ = ("ring", "coeffs")

    def __init__(self, coeffs: Iterable, ring: CoefficientRing = QQ, order: int | None = None):
        cs = [ring.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise DomainError("truncation order must be nonnegative")
        cs = cs[: order + 1]
        cs.extend(ring.zero() for _ in range(order + 1 - len(cs)))
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def from_function(cls, fn, order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
        return cls((fn(k) for k in range(order + 1)), ring, order)

    @classmethod
    def one(cls, order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
        return cls([1], ring, order)

    @classmethod
    def x(cls, order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
        return cls([0, 1], ring, order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        if not 0 <= k <= self.order:
            raise TruncationError(f"coefficient {k} is beyond truncation order {self.order}")
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise TruncationError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], self.ring, order)

    def shift_down(self, k: int = 1) -> TruncatedSeries:
        """Divide by ``x^k``; the first ``k`` coefficients must vanish."""
        if any(not self.ring.is_zero(c) for c in self.coeffs[:k]):
            raise DomainError(f"series is not divisible by x^{k}")
        if k > self.order:
            raise TruncationError("nothing left after shifting")
        return TruncatedSeries(self.coeffs[k:], self.ring)

    def map(self, fn, ring: CoefficientRing | None = None) -> TruncatedSeries:
        return TruncatedSeries((fn(c) for c in self.coeffs), ring or self.ring, self.order)

    def scale(self, s) -> TruncatedSeries:
        return self.map(lambda c: c * s)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.name, self.coeffs))

    def __add__(self, other):
        return series_add(self, _lift(other, self))

    __radd__ = __add__

    def __neg__(self):
        return self.map(lambda c: -c)

    def __sub__(self, other):
        return series_add(self, -_lift(other, self))

    def __rsub__(self, other):
        return series_add(_lift(other, self), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational, Polynomial)):
            return self.scale(self.ring.coerce(other))
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return series_pow_int(self, n)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], ring={self.ring.name}, order={self.order})"


def _lift(value, like: TruncatedSeries) -> TruncatedSeries:
    if isinstance(value, TruncatedSeries):
        return value
    return TruncatedSeries([value], like.ring, like.order)


def _check_rings(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.ring is not b.ring:
        raise RingMismatchError(f"cannot combine series over {a.ring.name} and {b.ring.name}")


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_rings(a, b)
    t = min(a.order, b.order)
    return TruncatedSeries([a.coeffs[i] + b.coeffs[i] for i in range(t + 1)], a.ring, t)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product through ``min(T_a, T_b)``."""
    _check_rings(a, b)
    t = min(a.order, b.order)
    ac, bc, zero = a.coeffs, b.coeffs, a.ring.zero()
    out = []
    for n in range(t + 1):
        acc = zero
        for i in range(n + 1):
            acc = acc + ac[i] * bc[n - i]
        out.append(acc)
    return TruncatedSeries(out, a.ring, t)


def _constant_inverse(a: TruncatedSeries) -> Fraction:
    c0 = a.ring.constant_value(a.coeffs[0])
    if c0 is None or c0 == 0:
        raise SingularSeriesError("constant term is not invertible")
    return 1 / c0


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be a nonzero rational."""
    inv0 = _constant_inverse(a)
    ac, zero = a.coeffs, a.ring.zero()
    out = [a.ring.coerce(inv0)]
    for n in range(1, a.order + 1):
        acc = zero
        for i in range(1, n + 1):
            acc = acc + ac[i] * out[n - i]
        out.append(-acc * inv0)
    return TruncatedSeries(out, a.ring, a.order)


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """Logarithm of a series with constant term 1.

    Uses ``r' = a'/a`` in the form ``n r_n = n a_n - sum_{k<n} k r_k a_{n-k}``.
    """
    if a.coeffs[0] != a.ring.one():
        raise DomainError("log requires constant term 1")
    ac = a.coeffs
    out = [a.ring.zero()]
    for n in range(1, a.order + 1):
        acc = ac[n] * n
        for k in range(1, n):
            acc = acc - out[k] * ac[n - k] * k
        out.append(acc / n)
    return TruncatedSeries(out, a.ring, a.order)


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """Exponential of a series with constant term 0, via ``e' = a' e``."""
    if not a.ring.is_zero(a.coeffs[0]):
        raise DomainError("exp requires constant term 0")
    ac = a.coeffs
    out = [a.ring.one()]
    for n in range(1, a.order + 1):
        acc = a.ring.zero()
        for k in range(1, n + 1):
            if not a.ring.is_zero(ac[k]):
                acc = acc + ac[k] * out[n - k] * k
        out.append(acc / n)
    return TruncatedSeries(out, a.ring, a.order)


def series_pow_int(a: TruncatedSeries, n: int) -> TruncatedSeries:
    """``a**n`` by repeated squaring; negative ``n`` inverts first."""
    if not isinstance(n, int):
        raise TypeError("exponent must be an integer")
    if n < 0:
        a, n = series_inverse(a), -n
    result = TruncatedSeries.one(a.order, a.ring)
    base = a
    while n:
        if n & 1:
            result = series_mul(result, base)
        n >>= 1
        if n:
            base = series_mul(base, base)
    return result


def egf_coefficient(a: TruncatedSeries, n: int):
    """``n!`` times the coefficient of ``x^n``."""
    if n < 0 or n > a.order:
        raise TruncationError(f"coefficient {n} is beyond truncation order {a.order}")
    return a.coeffs[n] * factorial(n)


def exp_series(order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """``e^x`` through ``x^order``."""
    return TruncatedSeries.from_function(lambda k: Fraction(1, factorial(k)), order, ring)


def expm1_over_x(order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """``(e^x - 1)/x``, whose coefficients are ``1/(k+1)!``."""
    return TruncatedSeries.from_function(lambda k: Fraction(1, factorial(k + 1)), order, ring)


def bernoulli_egf(order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """``x/(e^x - 1)`` through ``x^order``."""
    return series_inverse(expm1_over_x(order, ring))


def log_expm1_over_x(order: int, ring: CoefficientRing = QQ) -> TruncatedSeries:
    """``log((e^x - 1)/x)`` through ``x^order``."""
    return series_log(expm1_over_x(order, ring))
