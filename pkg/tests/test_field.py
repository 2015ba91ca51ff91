"""
精确标量域 Q(i, √2)
"""

from fractions import Fraction

import pytest

from src.algebra.field import Scalar, is_zero, parse_rational, to_scalar
from src.core.exceptions import FieldError


def test_units_square():
    assert Scalar.i() * Scalar.i() == -1
    assert Scalar.sqrt2() * Scalar.sqrt2() == 2
    assert Scalar.sqrt_minus2() * Scalar.sqrt_minus2() == -2


def test_inverse_is_exact(rng):
    for _ in range(20):
        x = Scalar(*(Fraction(int(n), int(d)) for n, d in zip(rng.integers(-5, 6, 4), rng.integers(1, 5, 4))))
        if x.is_zero():
            continue
        assert x * x.inverse() == 1
        assert (x / x) == 1


def test_mixed_arithmetic_with_fractions():
    x = Scalar(1, 2, 3, 4)
    assert x + Fraction(1, 2) == Scalar(Fraction(3, 2), 2, 3, 4)
    assert 1 - x == Scalar(0, -2, -3, -4)
    assert (x * 2).components == (2, 4, 6, 8)
    assert x ** 0 == 1
    assert x ** -1 == x.inverse()


def test_sqrt_of_rational_squares():
    assert Scalar(Fraction(9, 4)).sqrt() == Fraction(3, 2)
    assert Scalar(-4).sqrt() == Scalar(0, 2)
    with pytest.raises(FieldError):
        Scalar(2).sqrt()
    with pytest.raises(FieldError):
        Scalar.i().sqrt()


def test_division_by_zero():
    with pytest.raises(FieldError):
        Scalar(0).inverse()
    with pytest.raises(FieldError):
        Scalar(1) / 0


def test_rational_conversion_and_hash():
    assert Scalar(3).to_fraction() == 3
    assert hash(Scalar(Fraction(1, 3))) == hash(Fraction(1, 3))
    assert to_scalar(Fraction(1, 2)) == Scalar(Fraction(1, 2))
    with pytest.raises(FieldError):
        Scalar.sqrt2().to_fraction()


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-2") == -2
    with pytest.raises(FieldError):
        parse_rational("x")
    with pytest.raises(FieldError):
        parse_rational("1/0")


def test_json_and_zero():
    assert Scalar(Fraction(1, 2)).to_json() == "1/2"
    assert Scalar(0, 1).to_json() == ["0", "1", "0", "0"]
    assert is_zero(Scalar(0)) and is_zero(Fraction(0)) and not is_zero(1)
