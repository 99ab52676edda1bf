from fractions import Fraction as F

import pytest

from eulerian2.polynomial import Polynomial, format_rational, parse_rational, rising_factorial_affine


def test_trailing_zeros_stripped():
    assert Polynomial([1, 2, 0, 0]).coeffs == (F(1), F(2))
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial().degree == -1


def test_arithmetic():
    z = Polynomial.z()
    p = (z + 1) * (z - 1)
    assert p == Polynomial([-1, 0, 1])
    assert p - z * z == -1
    assert (p / 2).coeffs == (F(-1, 2), 0, F(1, 2))
    assert 3 * z == Polynomial([0, 3])
    assert (z + 1) ** 3 == Polynomial([1, 3, 3, 1])


def test_evaluate_and_derivative():
    p = Polynomial([1, F(1, 2), 3])
    assert p(2) == 1 + 1 + 12
    assert p.derivative() == Polynomial([F(1, 2), 6])


def test_divide_linear():
    z = Polynomial.z()
    p = (z - 2) * (z + F(1, 3)) * (z + 5)
    assert p.divide_linear(2) == (z + F(1, 3)) * (z + 5)
    with pytest.raises(ValueError):
        p.divide_linear(1)


def test_rising_factorial_affine():
    # <n+1-z>_2 at n = 3: (4 - z)(5 - z)
    z = Polynomial.z()
    assert rising_factorial_affine(-1, 4, 2) == (4 - z) * (5 - z)
    assert rising_factorial_affine(1, 0, 0) == 1


@pytest.mark.parametrize("q, text", [(F(-1, 2), "-1/2"), (F(4, 2), "2"), (0, "0"), (F(691, -2730), "-691/2730")])
def test_format_rational(q, text):
    assert format_rational(q) == text
    assert parse_rational(text) == q


def test_hash_matches_equality():
    assert hash(Polynomial([1, 2])) == hash(Polynomial([F(2, 2), 2, 0]))
