"""Exact generators for the scalar number families.

Bernoulli numbers, Stirling numbers of both kinds, Cauchy numbers of the
second kind, harmonic numbers, binomials, odd double factorials and rising
factorials.  Everything is memoized a row or a prefix at a time; a cached
answer is always identical to a fresh computation.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, prod

from .exceptions import DomainError
from .polynomial import Polynomial, as_fraction, rising_factorial_affine
from .series import QQ, TruncatedSeries, bernoulli_egf, egf_coefficient, series_inverse, series_log

_lock = threading.Lock()
_bernoulli: list[Fraction] = []
_cauchy2: list[Fraction] = []
_harmonic: list[Fraction] = [Fraction(0)]


def _check_index(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"{name} must be a nonnegative integer, got {n!r}")


def _grow(n: int) -> int:
    # extend prefixes geometrically so repeated queries stay cheap
    return max(2 * n, 16)


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2, read off the inverted series ``x/(e^x - 1)``."""
    _check_index(n)
    if n >= len(_bernoulli):
        order = _grow(n)
        s = bernoulli_egf(order)
        values = [egf_coefficient(s, k) for k in range(order + 1)]
        with _lock:
            if len(values) > len(_bernoulli):
                _bernoulli[:] = values
    return _bernoulli[n]


def cauchy2_egf(order: int) -> TruncatedSeries:
    """``-x / ((1 - x) log(1 - x))`` through ``x^order``."""
    one_minus_x = TruncatedSeries([1, -1], QQ, order + 1)
    # -log(1-x)/x = 1 + x/2 + x^2/3 + ...
    g = -series_log(one_minus_x).shift_down(1)
    denom = g * TruncatedSeries([1, -1], QQ, order)
    return series_inverse(denom)


def cauchy2(n: int) -> Fraction:
    _check_index(n)
    if n >= len(_cauchy2):
        order = _grow(n)
        s = cauchy2_egf(order)
        values = [egf_coefficient(s, k) for k in range(order + 1)]
        with _lock:
            if len(values) > len(_cauchy2):
                _cauchy2[:] = values
    return _cauchy2[n]


def harmonic(n: int) -> Fraction:
    _check_index(n)
    with _lock:
        while len(_harmonic) <= n:
            _harmonic.append(_harmonic[-1] + Fraction(1, len(_harmonic)))
    return _harmonic[n]


@lru_cache(maxsize=None)
def stirling2_row(n: int) -> tuple[int, ...]:
    """``(S(n,0), ..., S(n,n))``."""
    if n == 0:
        return (1,)
    prev = stirling2_row(n - 1) + (0,)
    return tuple(m * prev[m] + (prev[m - 1] if m else 0) for m in range(n + 1))


def stirling2(n: int, m: int) -> int:
    if n < 0 or m < 0 or m > n:
        return 0
    _warm(stirling2_row, n)
    return stirling2_row(n)[m]


@lru_cache(maxsize=None)
def stirling1_row(n: int) -> tuple[int, ...]:
    """Signed ``(s(n,0), ..., s(n,n))``: coefficients of the falling factorial."""
    if n == 0:
        return (1,)
    prev = stirling1_row(n - 1) + (0,)
    return tuple((prev[k - 1] if k else 0) - (n - 1) * prev[k] for k in range(n + 1))


def stirling1_signed(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    _warm(stirling1_row, n)
    return stirling1_row(n)[k]


def _warm(row_fn, n: int) -> None:
    # fill bottom-up so deep rows never hit the recursion limit
    for i in range(0, n, 256):
        row_fn(i)


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise DomainError("binomial top index must be nonnegative")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = 1*3*5*...*(2n-1)."""
    if n < 1:
        raise DomainError("double_factorial_odd needs n >= 1")
    return prod(range(1, 2 * n, 2))


@lru_cache(maxsize=None)
def rising_factorial_poly(k: int) -> Polynomial:
    """``<z>_k = z(z+1)...(z+k-1)`` as a polynomial in ``z``."""
    _check_index(k, "k")
    return rising_factorial_affine(1, 0, k)


def rising_factorial_eval(a, k: int) -> Fraction:
    """``a(a+1)...(a+k-1)`` evaluated directly at a rational point."""
    _check_index(k, "k")
    a = as_fraction(a)
    acc = Fraction(1)
    for i in range(k):
        acc *= a + i
    return acc
