import math
from fractions import Fraction

import pytest

from hvcheck.scalars import (binomial, factorial, int_power, rat,
                             rational_from_string, rational_to_string)


def test_parse_reduces():
    assert rational_from_string("6/4") == Fraction(3, 2)
    assert rational_from_string("0/7") == Fraction(0)
    assert rational_from_string("-5") == Fraction(-5)
    assert rational_from_string("  +7/3 ") == Fraction(7, 3)


@pytest.mark.parametrize("bad", ["1.5", "2e3", "a/b", "1/2/3", "", "/3", "1/-2"])
def test_parse_rejects_non_rationals(bad):
    with pytest.raises(ValueError):
        rational_from_string(bad)


def test_parse_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rational_from_string("3/0")


def test_to_string_round_trip():
    for text in ["3/2", "-5", "0", "22/7"]:
        assert rational_to_string(rational_from_string(text)) == text


def test_rat_refuses_floats():
    with pytest.raises(TypeError):
        rat(0.5)


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(10) == 3628800
    with pytest.raises(ValueError):
        factorial(-1)


def test_factorial_recurrence():
    for n in range(0, 21):
        assert factorial(n + 1) == (n + 1) * factorial(n)


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(7, 0) == 1
    assert binomial(5, 5) == 1
    with pytest.raises(ValueError):
        binomial(5, 6)


def test_pascal_identity():
    for s in range(2, 17):
        for i in range(1, s):
            assert binomial(s, i) == binomial(s - 1, i - 1) + binomial(s - 1, i)


def test_int_power_values():
    assert int_power(Fraction(2, 3), -2) == Fraction(9, 4)
    assert int_power(5, 0) == 1
    assert int_power(-2, 3) == -8
    with pytest.raises(ZeroDivisionError):
        int_power(0, -1)


def test_int_power_inverse():
    for num in (-3, 2, 7):
        x = Fraction(num, 4)
        for m in range(-10, 11):
            assert int_power(x, m) * int_power(x, -m) == 1


def test_reduced_form_invariant():
    # Fraction keeps gcd 1 and positive denominator through arithmetic
    vals = [Fraction(6, 4), Fraction(-9, 12), Fraction(5), Fraction(0)]
    for a in vals:
        for b in vals:
            for c in (a + b, a - b, a * b):
                assert math.gcd(c.numerator, c.denominator) == 1
                assert c.denominator > 0
