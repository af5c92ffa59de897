"""Exact rational scalars.

Everything in this package computes over arbitrary-precision rationals; no
floating point is allowed anywhere.  Scalars are ``fractions.Fraction``
values, which keep gcd(|num|, den) = 1 and den > 0 as class invariants.
The wire format is always "p/q" in lowest terms or a bare integer string;
decimal or scientific notation is rejected on input and never produced.
"""

import math
import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def rational_from_string(text):
    """Parse "p/q" or a bare integer literal into a Fraction."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError("not a rational literal (expected 'p/q' or integer): %r" % (text,))
    num, slash, den = s.partition("/")
    if slash:
        d = int(den)
        if d == 0:
            raise ZeroDivisionError("zero denominator in %r" % (text,))
        return Fraction(int(num), d)
    return Fraction(int(num))


def rational_to_string(x):
    return str(Fraction(x))


def rat(x):
    """Coerce int, Fraction or a "p/q" string to Fraction.  Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return rational_from_string(x)
    raise TypeError("cannot use %r as an exact rational" % (x,))


def factorial(n):
    if n < 0:
        raise ValueError("factorial of negative %d" % n)
    return Fraction(math.factorial(n))


def binomial(s, i):
    if i < 0 or s < 0 or i > s:
        raise ValueError("binomial(%d, %d) outside 0 <= i <= s" % (s, i))
    return Fraction(math.comb(s, i))


def int_power(x, m):
    x = rat(x)
    if m < 0 and x == 0:
        raise ZeroDivisionError("cannot invert zero (power %d)" % m)
    return x ** m
