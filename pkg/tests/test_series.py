import random
from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerian2.exceptions import DomainError, RingMismatchError, SingularSeriesError, TruncationError
from eulerian2.polynomial import Polynomial
from eulerian2.series import (
    QQ,
    QQ_z,
    TruncatedSeries,
    bernoulli_egf,
    egf_coefficient,
    exp_series,
    expm1_over_x,
    log_expm1_over_x,
    series_add,
    series_exp,
    series_inverse,
    series_log,
    series_mul,
    series_pow_int,
)


def S(*coeffs, order=None, ring=QQ):
    return TruncatedSeries(coeffs, ring, order)


def schoolbook(a, b):
    t = min(len(a), len(b))
    return [sum((a[i] * b[n - i] for i in range(n + 1)), F(0)) for n in range(t)]


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def series(draw, unit=None, max_order=12):
    t = draw(st.integers(0, max_order))
    cs = draw(st.lists(rationals, min_size=t + 1, max_size=t + 1))
    if unit == "one":
        cs[0] = F(1)
    elif unit == "zero":
        cs[0] = F(0)
    elif unit == "nonzero" and cs[0] == 0:
        cs[0] = F(1, 3)
    return TruncatedSeries(cs, QQ)


def test_construction_pads_to_order():
    s = S(1, 2, order=4)
    assert s.coeffs == (1, 2, 0, 0, 0)
    assert s.order == 4


class TestAdd:
    def test_cancellation(self):
        assert S(1, 1) + S(1, -1) == S(2, 0)

    def test_identity(self):
        s = S(3, F(1, 2), 7)
        assert S(0, order=2) + s == s

    def test_l_series_prefixes(self):
        a = S(0, F(1, 2), F(1, 24))
        b = S(0, F(1, 2), F(-1, 24))
        assert series_add(a, b) == S(0, 1, 0)

    def test_result_order_is_min(self):
        assert (S(1, 1, 1) + S(1, 1)).order == 1

    def test_mismatched_rings(self):
        with pytest.raises(RingMismatchError):
            series_add(S(1, 1), S(1, 1, ring=QQ_z))


class TestMul:
    def test_difference_of_squares(self):
        assert S(1, 1, 0) * S(1, -1, 0) == S(1, 0, -1)

    def test_identity(self):
        s = S(2, 3, F(5, 7))
        assert s * S(1, order=2) == s

    def test_exp_times_exp_neg(self):
        e = exp_series(8)
        e_neg = TruncatedSeries([F((-1) ** k, factorial(k)) for k in range(9)])
        assert series_mul(e, e_neg) == TruncatedSeries.one(8)

    @given(series(), series())
    def test_against_schoolbook(self, a, b):
        assert list(series_mul(a, b).coeffs) == schoolbook(a.coeffs, b.coeffs)


class TestInverse:
    def test_geometric(self):
        assert series_inverse(S(1, -1, order=6)) == S(*[1] * 7)

    def test_bernoulli_prefix(self):
        # long division of 1 by 1 + x/2 + x^2/6 + x^3/24
        assert series_inverse(expm1_over_x(3)) == S(1, F(-1, 2), F(1, 12), 0)

    def test_singular(self):
        with pytest.raises(SingularSeriesError):
            series_inverse(S(0, 1))
        with pytest.raises(SingularSeriesError):
            series_inverse(S(Polynomial.z(), ring=QQ_z))

    @given(series(unit="nonzero"))
    def test_involution_and_product(self, s):
        inv = series_inverse(s)
        assert series_inverse(inv) == s
        assert s * inv == TruncatedSeries.one(s.order)


class TestLog:
    def test_log_one(self):
        assert series_log(S(1, order=5)) == S(0, order=5)

    def test_log_expm1_over_x(self):
        assert log_expm1_over_x(4) == S(0, F(1, 2), F(1, 24), 0, F(-1, 2880))

    def test_log_one_minus_x(self):
        assert series_log(S(1, -1, order=6)) == S(0, *[F(-1, k) for k in range(1, 7)])

    def test_domain(self):
        with pytest.raises(DomainError):
            series_log(S(2, 1))

    @given(series(unit="one"))
    def test_exp_log_round_trip(self, s):
        assert series_exp(series_log(s)) == s

    @given(series(unit="one"))
    def test_derivative_relation(self, s):
        # r' * s == s' through order T-1
        r = series_log(s)
        t = s.order
        if t == 0:
            return
        r_prime = TruncatedSeries([k * r[k] for k in range(1, t + 1)])
        s_prime = TruncatedSeries([k * s[k] for k in range(1, t + 1)])
        assert r_prime * s.truncate(t - 1) == s_prime


class TestExp:
    def test_exp_zero(self):
        assert series_exp(S(0, order=4)) == S(1, order=4)

    def test_exp_x(self):
        assert series_exp(TruncatedSeries.x(7)) == exp_series(7)

    def test_domain(self):
        with pytest.raises(DomainError):
            series_exp(S(1, 1))

    def test_polynomial_ring_second_coefficient(self):
        z = Polynomial.z()
        L = log_expm1_over_x(2)
        e = series_exp(TruncatedSeries([-z * c for c in L.coeffs], QQ_z))
        assert e[2] == Polynomial([0, F(-1, 24), F(1, 8)])

    @given(series(unit="zero"))
    def test_log_exp_round_trip(self, a):
        assert series_log(series_exp(a)) == a


class TestPow:
    def test_trivial_powers(self):
        s = S(2, 3, 4)
        assert s ** 0 == S(1, order=2)
        assert s ** 1 == s

    def test_bernoulli_square(self):
        # brute-force self-convolution of the Bernoulli EGF
        B = [F(1), F(-1, 2), F(1, 6)]
        conv = sum(F(factorial(2), factorial(k) * factorial(2 - k)) * B[k] * B[2 - k] for k in range(3))
        assert egf_coefficient(series_pow_int(bernoulli_egf(2), 2), 2) == conv == F(5, 6)

    @given(series(unit="nonzero", max_order=8), st.integers(-4, 6))
    def test_matches_repeated_product(self, s, n):
        base = s if n >= 0 else series_inverse(s)
        expected = TruncatedSeries.one(s.order)
        for _ in range(abs(n)):
            expected = expected * base
        assert series_pow_int(s, n) == expected

    def test_negative_power_singular(self):
        with pytest.raises(SingularSeriesError):
            series_pow_int(S(0, 1), -1)


class TestEgfCoefficient:
    def test_exp(self):
        assert egf_coefficient(exp_series(6), 5) == 1

    def test_bernoulli(self):
        s = bernoulli_egf(12)
        assert egf_coefficient(s, 1) == F(-1, 2)
        assert egf_coefficient(s, 12) == F(-691, 2730)

    def test_truncation(self):
        with pytest.raises(TruncationError):
            egf_coefficient(exp_series(3), 4)


@pytest.mark.parametrize("N", range(9))
def test_ring_genericity(N):
    T = 16
    over_q = series_pow_int(bernoulli_egf(T), N)
    z = Polynomial.z()
    L = log_expm1_over_x(T)
    over_poly = series_exp(TruncatedSeries([-z * c for c in L.coeffs], QQ_z))
    assert [c(N) for c in over_poly.coeffs] == list(over_q.coeffs)


def test_random_products_seeded():
    rng = random.Random(7)
    for _ in range(50):
        t = rng.randint(0, 32)
        a = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(t + 1)]
        b = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(t + 1)]
        assert list(series_mul(TruncatedSeries(a), TruncatedSeries(b)).coeffs) == schoolbook(a, b)
