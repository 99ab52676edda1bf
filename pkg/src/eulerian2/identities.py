"""Exact verification of the identities linking the number families.

Each ``check_*`` function evaluates both sides of one identity exactly and
returns an :class:`IdentityReport`.  ``holds`` is true precisely when the two
canonical values are equal.  ``expected`` is false for parameter values where
the formula, as printed, is known to fail (a documented exception) or lies
outside its validity range; those reports carry an explanatory note.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Iterator

from .eulerian import DEFAULT_ENUMERATION_CAP, HARD_ENUMERATION_CAP, descent_histogram, eulerian_row
from .exceptions import DomainError
from .norlund import (
    derivative_at_zero,
    norlund_at_negative_int,
    norlund_int_power,
    norlund_via_egf,
    norlund_via_theorem1,
)
from .series import log_expm1_over_x
from .special import (
    bernoulli,
    binomial,
    cauchy2,
    harmonic,
    rising_factorial_eval,
    stirling1_signed,
    stirling2,
)

SIGN_MODES = ("corrected", "as_printed")

UNDEFINED = None


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: dict[str, int]
    lhs: Any
    rhs: Any
    holds: bool
    note: str | None = None
    expected: bool = True

    @property
    def unexpected_failure(self) -> bool:
        return self.expected and not self.holds


def _report(identity, params, lhs, rhs, note=None, expected=True) -> IdentityReport:
    holds = lhs is not UNDEFINED and rhs is not UNDEFINED and lhs == rhs
    return IdentityReport(identity, dict(params), lhs, rhs, holds, note, expected)


def _safe(fn: Callable[[], Any]):
    try:
        return fn()
    except (ZeroDivisionError, DomainError):
        return UNDEFINED


def _out_of_range(text: str) -> str:
    return f"outside validity range: {text}"


def inverse_binomial(n: int, k: int) -> Fraction:
    return Fraction(1, binomial(n, k))


def bernoulli_over_index(n: int) -> Fraction:
    return bernoulli(n) / n


def bernoulli_quotient_convolution(n: int) -> Fraction:
    """``sum_{k=2}^{n-2} (B_k/k)(B_{n-k}/(n-k))``; empty sums give 0."""
    return sum(
        (bernoulli_over_index(k) * bernoulli_over_index(n - k) for k in range(2, n - 1)),
        Fraction(0),
    )


def binomial_bernoulli_quotient_convolution(n: int) -> Fraction:
    return sum(
        (binomial(n, k) * bernoulli_over_index(k) * bernoulli_over_index(n - k) for k in range(2, n - 1)),
        Fraction(0),
    )


# -- Nörlund closed form and its specialisations -------------------------------------


def check_theorem1(n: int) -> IdentityReport:
    lhs = norlund_via_egf(n).poly
    if n < 1:
        return _report("theorem1", {"n": n}, lhs, UNDEFINED,
                       _out_of_range("the Eulerian sum is empty for n < 1"), expected=False)
    return _report("theorem1", {"n": n}, lhs, norlund_via_theorem1(n).poly)


def closed_form_at(n: int, z) -> Fraction:
    """The Eulerian closed form for ``B_n^(z)`` evaluated at a rational point."""
    row = eulerian_row(n)
    total = sum(
        (
            (-1) ** k * row[k] * rising_factorial_eval(z, k) * rising_factorial_eval(-z + n + 1, n - k)
            for k in range(1, n + 1)
        ),
        Fraction(0),
    )
    return total * Fraction(factorial(n), factorial(2 * n))


def stirling2_via_eulerian(n: int, m: int) -> int:
    """``sum_k binom(2n+m-k, 2n) C_{n,k}``."""
    row = eulerian_row(n)
    return sum(binomial(2 * n + m - k, 2 * n) * row[k] for k in range(1, n + 1))


def check_lemma1(n: int, m: int) -> IdentityReport:
    params = {"n": n, "m": m}
    if n < 1 or m < 0:
        return _report("lemma1", params, UNDEFINED, UNDEFINED,
                       _out_of_range("n >= 1 and m >= 0"), expected=False)
    lhs = (Fraction(stirling2(m + n, m)), norlund_at_negative_int(n, m))
    rhs = (Fraction(stirling2_via_eulerian(n, m)), closed_form_at(n, -m))
    return _report("lemma1", params, lhs, rhs)


def check_gessel_stanley(n: int, m_max: int) -> IdentityReport:
    params = {"n": n, "m_max": m_max}
    if n < 1 or m_max < 0:
        return _report("gessel_stanley", params, UNDEFINED, UNDEFINED,
                       _out_of_range("n >= 1 and m_max >= 0"), expected=False)
    lhs = tuple(Fraction(stirling2(m + n, m)) for m in range(m_max + 1))
    rhs = tuple(Fraction(stirling2_via_eulerian(n, m)) for m in range(m_max + 1))
    return _report("gessel_stanley", params, lhs, rhs)


# -- Bernoulli identities -------------------------------------------------------------


def alternating_inverse_binomial_sum(n: int) -> Fraction:
    """``sum_{k=1}^n (-1)^(k-1) C_{n,k} / binom(2n+1, k)``."""
    row = eulerian_row(n)
    return sum(
        ((-1) ** (k - 1) * row[k] * inverse_binomial(2 * n + 1, k) for k in range(1, n + 1)),
        Fraction(0),
    )


def check_theorem3(n: int) -> IdentityReport:
    if n < 1:
        return _report("theorem3", {"n": n}, UNDEFINED, 2 * bernoulli(max(n + 1, 0)),
                       _out_of_range("n >= 1"), expected=False)
    return _report("theorem3", {"n": n}, alternating_inverse_binomial_sum(n), 2 * bernoulli(n + 1))


def beta_integral(a: int, b: int) -> Fraction:
    """``int_0^1 u^a (u-1)^b du`` by binomial expansion and termwise integration."""
    return sum(
        (Fraction(binomial(b, j) * (-1) ** (b - j), a + j + 1) for j in range(b + 1)),
        Fraction(0),
    )


def printed_beta_closed_form(n: int, k: int, shift: int = 0) -> Fraction:
    """``(-1)^k / (2(n+1)) / binom(2n+1, k + shift)``; ``shift=0`` is the printed indexing."""
    return Fraction((-1) ** k, 2 * (n + 1)) * inverse_binomial(2 * n + 1, k + shift)


def check_beta_integral(n: int, k: int, shift: int = 0) -> IdentityReport:
    """Compare ``int_0^1 u^(k+1) (u-1)^(2n-k) du`` with the closed form at a given indexing."""
    params = {"n": n, "k": k, "shift": shift}
    lhs = beta_integral(k + 1, 2 * n - k)
    rhs = _safe(lambda: printed_beta_closed_form(n, k, shift))
    if shift == 0:
        return _report("beta_integral", params, lhs, rhs,
                       "documented exception: the printed closed form uses binom(2n+1, k); "
                       "the integral equals it with binom(2n+1, k+1)", expected=False)
    return _report("beta_integral", params, lhs, rhs)


def check_rzadkowski_urlinska(n: int) -> IdentityReport:
    if n < 1:
        return _report("rzadkowski_urlinska", {"n": n}, UNDEFINED, UNDEFINED,
                       _out_of_range("n >= 1"), expected=False)
    row = eulerian_row(n)
    integrals = [beta_integral(k + 1, 2 * n - k) for k in range(n)]
    lhs = sum((row[k + 1] * integrals[k] for k in range(n)), Fraction(0))
    rhs = bernoulli(n + 1) / (n + 1)
    as_printed = sum(integrals[k] == printed_beta_closed_form(n, k) for k in range(n))
    shifted = sum(integrals[k] == printed_beta_closed_form(n, k, 1) for k in range(n))
    note = (
        f"inline closed form matches {as_printed}/{n} integrals with binom(2n+1,k) "
        f"and {shifted}/{n} with binom(2n+1,k+1)"
    )
    return _report("rzadkowski_urlinska", {"n": n}, lhs, rhs, note)


def check_miki(n: int) -> IdentityReport:
    if n < 1:
        return _report("miki", {"n": n}, UNDEFINED, UNDEFINED, _out_of_range("n >= 3"), expected=False)
    lhs = bernoulli_quotient_convolution(n)
    rhs = 2 * harmonic(n) * bernoulli_over_index(n) + binomial_bernoulli_quotient_convolution(n)
    if n < 3:
        return _report("miki", {"n": n}, lhs, rhs,
                       "documented exception: " + _out_of_range("n >= 3"), expected=False)
    return _report("miki", {"n": n}, lhs, rhs)


def harmonic_weighted_sum(n: int, sign_mode: str = "corrected") -> Fraction:
    """``sum_k (-1)^k (H_{k-1} - H_{2n-k}) C_{n,k} / binom(2n-1, k-1)``.

    ``as_printed`` uses the opposite difference ``H_{2n-k} - H_{k-1}``.
    """
    if sign_mode not in SIGN_MODES:
        raise DomainError(f"sign_mode must be one of {SIGN_MODES}, got {sign_mode!r}")
    flip = 1 if sign_mode == "corrected" else -1
    row = eulerian_row(n)
    return sum(
        (
            (-1) ** k * flip * (harmonic(k - 1) - harmonic(2 * n - k)) * row[k]
            * inverse_binomial(2 * n - 1, k - 1)
            for k in range(1, n + 1)
        ),
        Fraction(0),
    )


def check_theorem4(n: int, sign_mode: str = "corrected") -> IdentityReport:
    mode = sign_mode.replace("-", "_")
    note = None
    if mode == "as_printed":
        note = "as printed: difference H_{2n-k} - H_{k-1} has the opposite sign to its derivation"
    if n < 1:
        return _report("theorem4", {"n": n}, UNDEFINED, UNDEFINED, _out_of_range("n >= 3"), expected=False)
    lhs = harmonic_weighted_sum(n, mode)
    rhs = _safe(lambda: Fraction(n * n, n - 1) * bernoulli(n - 1) + n * bernoulli_quotient_convolution(n))
    if n < 3:
        return _report("theorem4", {"n": n}, lhs, rhs, _out_of_range("n >= 3"), expected=False)
    return _report("theorem4", {"n": n}, lhs, rhs, note)


# -- derivatives in z at z = 0 --------------------------------------------------------


def first_derivative_sum(n: int) -> Fraction:
    """``(1/2n) sum_k (-1)^k C_{n,k} / binom(2n-1, k-1)``."""
    row = eulerian_row(n)
    s = sum(
        ((-1) ** k * row[k] * inverse_binomial(2 * n - 1, k - 1) for k in range(1, n + 1)),
        Fraction(0),
    )
    return s / (2 * n)


def check_mequation(n: int) -> IdentityReport:
    if n < 1:
        return _report("mequation", {"n": n}, UNDEFINED, UNDEFINED, _out_of_range("n >= 2"), expected=False)
    lhs = -bernoulli_over_index(n)
    rhs = first_derivative_sum(n)
    if n < 2:
        return _report("mequation", {"n": n}, lhs, rhs,
                       "documented exception: fails at n = 1 (true derivative is B_1 = -1/2)", expected=False)
    return _report("mequation", {"n": n}, lhs, rhs)


def check_derivatives(n: int, order: int = 1) -> IdentityReport:
    """Derivative of ``B_n^(z)`` at ``z = 0`` against ``-B_n/n`` (order 1) or
    ``n/(n-1) B_{n-1} + sum binom(n,k) (B_k/k)(B_{n-k}/(n-k))`` (order 2)."""
    params = {"n": n, "order": order}
    if n < 1 or order not in (1, 2):
        return _report("derivatives", params, UNDEFINED, UNDEFINED,
                       _out_of_range("n >= 1, order in {1, 2}"), expected=False)
    lhs = derivative_at_zero(norlund_via_egf(n), order)
    if order == 1:
        rhs = -bernoulli_over_index(n)
        if n < 2:
            return _report("derivatives", params, lhs, rhs,
                           "documented exception: first derivative formula fails at n = 1", expected=False)
        return _report("derivatives", params, lhs, rhs)
    rhs = _safe(lambda: Fraction(n, n - 1) * bernoulli(n - 1) + binomial_bernoulli_quotient_convolution(n))
    if n < 3:
        return _report("derivatives", params, lhs, rhs,
                       "documented exception: second derivative formula fails at n = 2"
                       if n == 2 else _out_of_range("n >= 3"), expected=False)
    return _report("derivatives", params, lhs, rhs)


def check_derivatives_miki(n: int) -> IdentityReport:
    """Second derivative at 0 against the form rewritten with the Miki identity."""
    params = {"n": n, "order": 2}
    if n < 1:
        return _report("derivatives_miki", params, UNDEFINED, UNDEFINED, _out_of_range("n >= 3"), expected=False)
    lhs = derivative_at_zero(norlund_via_egf(n), 2)
    rhs = _safe(
        lambda: Fraction(n, n - 1) * bernoulli(n - 1)
        + bernoulli_quotient_convolution(n)
        - 2 * harmonic(n) * bernoulli_over_index(n)
    )
    if n < 3:
        return _report("derivatives_miki", params, lhs, rhs,
                       "documented exception: rewritten second derivative formula fails at n = 2"
                       if n == 2 else _out_of_range("n >= 3"), expected=False)
    return _report("derivatives_miki", params, lhs, rhs)


# -- integer orders -------------------------------------------------------------------


def stirling_bernoulli_sum(n: int, N: int) -> Fraction:
    """``sum_{k=0}^{N-1} (-1)^(N-1-k) s(N, N-k) B_{n-k}/(n-k)``."""
    return sum(
        ((-1) ** (N - 1 - k) * stirling1_signed(N, N - k) * bernoulli_over_index(n - k) for k in range(N)),
        Fraction(0),
    )


def check_dilcher(n: int, N: int) -> IdentityReport:
    params = {"n": n, "N": N}
    lhs = _safe(lambda: norlund_int_power(n, N))
    rhs = _safe(lambda: N * binomial(n, N) * stirling_bernoulli_sum(n, N))
    if not 1 <= N <= n:
        return _report("dilcher", params, lhs, rhs, _out_of_range("n >= N >= 1"), expected=False)
    return _report("dilcher", params, lhs, rhs)


def inverse_binomial_sum(n: int, N: int) -> Fraction:
    """``sum_{k=1}^n (-1)^k C_{n,k} / binom(2n-1, N+k-1)``."""
    row = eulerian_row(n)
    return sum(
        ((-1) ** k * row[k] * inverse_binomial(2 * n - 1, N + k - 1) for k in range(1, n + 1)),
        Fraction(0),
    )


def check_theorem2(n: int, N: int) -> IdentityReport:
    params = {"n": n, "N": N}
    lhs = _safe(lambda: inverse_binomial_sum(n, N))
    rhs = _safe(lambda: 2 * n * stirling_bernoulli_sum(n, N))
    if not 1 <= N <= n:
        return _report("theorem2", params, lhs, rhs, _out_of_range("1 <= N <= n"), expected=False)
    note = None
    if N == n:
        tie = lhs == (-1) ** n * 2 * cauchy2(n)
        note = f"N = n: lhs {'equals' if tie else 'differs from'} (-1)^n * 2 * cauchy2(n)"
    return _report("theorem2", params, lhs, rhs, note)


def check_cauchy_eulerian(n: int) -> IdentityReport:
    if n < 1:
        return _report("cauchy_eulerian", {"n": n}, UNDEFINED, UNDEFINED, _out_of_range("n >= 1"), expected=False)
    row = eulerian_row(n)
    rhs = sum(
        ((-1) ** (n - k) * row[k] * inverse_binomial(2 * n - 1, n + k - 1) for k in range(1, n + 1)),
        Fraction(0),
    )
    return _report("cauchy_eulerian", {"n": n}, 2 * cauchy2(n), rhs)


def check_log_series(T: int) -> IdentityReport:
    if T < 1:
        return _report("log_series", {"T": T}, UNDEFINED, UNDEFINED, _out_of_range("T >= 1"), expected=False)
    s = log_expm1_over_x(T)
    lhs = tuple(s[n] for n in range(1, T + 1))
    rhs = tuple((-1) ** n * bernoulli(n) / (n * factorial(n)) for n in range(1, T + 1))
    return _report("log_series", {"T": T}, lhs, rhs)


def check_eulerian_oracle(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> IdentityReport:
    lhs = tuple(Fraction(c) for c in descent_histogram(n, cap))
    rhs = tuple(Fraction(c) for c in eulerian_row(n))
    return _report("eulerian_oracle", {"n": n}, lhs, rhs)


# -- suite ----------------------------------------------------------------------------


@dataclass
class SuiteConfig:
    n_max: int = 20
    enumeration_cap: int = 7
    identities: list[str] | None = None
    sign_mode: str = "corrected"
    output_format: str = "plain"

    def __post_init__(self):
        if self.n_max < 1:
            raise DomainError("n_max must be >= 1")
        if not 1 <= self.enumeration_cap <= HARD_ENUMERATION_CAP:
            raise DomainError(f"enumeration_cap must lie in 1..{HARD_ENUMERATION_CAP}")
        self.sign_mode = self.sign_mode.replace("-", "_")
        if self.sign_mode not in SIGN_MODES:
            raise DomainError(f"sign_mode must be one of {SIGN_MODES}")
        if self.identities is not None:
            unknown = set(self.identities) - set(IDENTITIES)
            if unknown:
                raise DomainError(f"unknown identities: {sorted(unknown)}")


def _gen_eulerian_oracle(c: SuiteConfig):
    for n in range(1, min(c.enumeration_cap, c.n_max) + 1):
        yield check_eulerian_oracle(n, c.enumeration_cap)


def _gen_lemma1(c):
    for n in range(1, c.n_max + 1):
        for m in range(c.n_max + 1):
            yield check_lemma1(n, m)


def _gen_derivatives(c):
    for n in range(1, c.n_max + 1):
        yield check_derivatives(n, 1)
        if n >= 2:
            yield check_derivatives(n, 2)


def _gen_pairs(check):
    def gen(c):
        for n in range(1, c.n_max + 1):
            for N in range(1, n + 1):
                yield check(n, N)

    return gen


def _gen_range(check, start=1):
    def gen(c):
        for n in range(start, c.n_max + 1):
            yield check(n)

    return gen


def _gen_beta(c):
    for n in range(1, c.n_max + 1):
        for k in range(n):
            yield check_beta_integral(n, k)


# run order; ``beta_integral`` is only run when requested by name
IDENTITIES: dict[str, Callable[[SuiteConfig], Iterator[IdentityReport]]] = {
    "eulerian_oracle": _gen_eulerian_oracle,
    "log_series": lambda c: iter([check_log_series(c.n_max)]),
    "theorem1": _gen_range(check_theorem1),
    "lemma1": _gen_lemma1,
    "gessel_stanley": lambda c: (check_gessel_stanley(n, c.n_max) for n in range(1, c.n_max + 1)),
    "theorem3": _gen_range(check_theorem3),
    "rzadkowski_urlinska": _gen_range(check_rzadkowski_urlinska),
    "miki": _gen_range(check_miki, start=2),
    "theorem4": lambda c: (check_theorem4(n, c.sign_mode) for n in range(3, c.n_max + 1)),
    "mequation": _gen_range(check_mequation),
    "derivatives": _gen_derivatives,
    "derivatives_miki": _gen_range(check_derivatives_miki, start=2),
    "dilcher": _gen_pairs(check_dilcher),
    "theorem2": _gen_pairs(check_theorem2),
    "cauchy_eulerian": _gen_range(check_cauchy_eulerian),
    "beta_integral": _gen_beta,
}

DEFAULT_IDENTITIES = [name for name in IDENTITIES if name != "beta_integral"]


def run_suite(config: SuiteConfig | None = None) -> list[IdentityReport]:
    config = config or SuiteConfig()
    selected = config.identities if config.identities is not None else DEFAULT_IDENTITIES
    reports = []
    for name in IDENTITIES:
        if name in selected:
            reports.extend(IDENTITIES[name](config))
    return reports


def documented_exceptions(reports) -> set[tuple[str, tuple]]:
    return {(r.identity, tuple(sorted(r.params.items()))) for r in reports if not r.expected}


def failures(reports) -> set[tuple[str, tuple]]:
    return {(r.identity, tuple(sorted(r.params.items()))) for r in reports if not r.holds}
