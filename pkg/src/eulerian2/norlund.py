"""Nörlund polynomials ``B_n^(z)``, the EGF coefficients of ``(x/(e^x-1))^z``.

Three independent constructions are provided so they can be checked against
each other:

* ``norlund_via_egf`` expands ``exp(-z log((e^x-1)/x))`` over ``QQ[z]``;
* ``norlund_via_theorem1`` sums second-order Eulerian numbers against the
  rising factorials ``<z>_k`` and ``<n+1-z>_{n-k}``;
* ``norlund_via_interpolation`` interpolates the exact values at
  ``z = 0, -1, ..., -n`` given by ``S(m+n, m) / binom(m+n, n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .eulerian import eulerian_row
from .exceptions import DomainError
from .polynomial import Polynomial, rising_factorial_affine
from .series import (
    QQ,
    QQ_z,
    TruncatedSeries,
    bernoulli_egf,
    egf_coefficient,
    log_expm1_over_x,
    series_exp,
    series_pow_int,
)
from .special import binomial, rising_factorial_poly, stirling2


@dataclass(frozen=True)
class NorlundPolynomial:
    n: int
    poly: Polynomial

    def __call__(self, z) -> Fraction:
        return self.poly(z)

    @property
    def degree(self) -> int:
        return self.poly.degree

    def coefficient(self, i: int) -> Fraction:
        return self.poly.coefficient(i)


def _check_n(n: int, lowest: int = 0) -> None:
    if not isinstance(n, int) or n < lowest:
        raise DomainError(f"n must be an integer >= {lowest}, got {n!r}")


@lru_cache(maxsize=None)
def norlund_via_egf(n: int) -> NorlundPolynomial:
    _check_n(n)
    log_series = log_expm1_over_x(n)
    minus_z = Polynomial.affine(-1, 0)
    exponent = TruncatedSeries((minus_z * c for c in log_series.coeffs), QQ_z, n)
    return NorlundPolynomial(n, egf_coefficient(series_exp(exponent), n))


@lru_cache(maxsize=None)
def norlund_via_theorem1(n: int) -> NorlundPolynomial:
    """``n!/(2n)! * sum_k (-1)^k C_{n,k} <z>_k <n+1-z>_{n-k}``."""
    if n == 0:
        raise DomainError("the Eulerian sum is empty at n = 0; use norlund_via_egf")
    _check_n(n, 1)
    row = eulerian_row(n)
    acc = Polynomial()
    for k in range(1, n + 1):
        term = rising_factorial_poly(k) * rising_factorial_affine(-1, n + 1, n - k)
        acc = acc + term * ((-1) ** k * row[k])
    return NorlundPolynomial(n, acc * Fraction(factorial(n), factorial(2 * n)))


def norlund_at_negative_int(n: int, m: int) -> Fraction:
    """``B_n^(-m) = S(m+n, m) / binom(m+n, n)``."""
    _check_n(n)
    _check_n(m)
    return Fraction(stirling2(m + n, m), binomial(m + n, n))


@lru_cache(maxsize=None)
def norlund_via_interpolation(n: int) -> NorlundPolynomial:
    """Lagrange interpolant through ``(-m, B_n^(-m))`` for ``m = 0..n``."""
    _check_n(n)
    nodes = [-m for m in range(n + 1)]
    values = [norlund_at_negative_int(n, m) for m in range(n + 1)]
    master = Polynomial((1,))
    for x in nodes:
        master = master * Polynomial((-x, 1))
    acc = Polynomial()
    for i, (xi, yi) in enumerate(zip(nodes, values)):
        if yi == 0:
            continue
        denom = Fraction(1)
        for j, xj in enumerate(nodes):
            if j != i:
                denom *= xi - xj
        acc = acc + master.divide_linear(xi) * (yi / denom)
    return NorlundPolynomial(n, acc)


@lru_cache(maxsize=None)
def _bernoulli_power(order: int, N: int):
    return series_pow_int(bernoulli_egf(order, QQ), N)


def norlund_int_power(n: int, N: int) -> Fraction:
    """``B_n^(N)`` as the EGF coefficient of the N-th power of ``x/(e^x-1)``."""
    _check_n(n)
    _check_n(N)
    return egf_coefficient(_bernoulli_power(n, N), n)


def derivative_at_zero(p: NorlundPolynomial | Polynomial, order: int) -> Fraction:
    """Exact ``d^order/dz^order`` at ``z = 0`` for order 1 or 2."""
    if order not in (1, 2):
        raise DomainError(f"only derivative orders 1 and 2 are supported, got {order!r}")
    poly = p.poly if isinstance(p, NorlundPolynomial) else p
    return factorial(order) * poly.coefficient(order)


def norlund(n: int, method: str = "egf") -> NorlundPolynomial:
    try:
        build = METHODS[method]
    except KeyError:
        raise DomainError(f"unknown method {method!r}; choose from {sorted(METHODS)}") from None
    return build(n)


METHODS = {
    "egf": norlund_via_egf,
    "theorem1": norlund_via_theorem1,
    "interp": norlund_via_interpolation,
}
