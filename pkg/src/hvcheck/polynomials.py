"""Sparse exact polynomials in one variable t.

A polynomial is a dict exponent -> nonzero Fraction.  Ordinary polynomials
use nonnegative exponents; Laurent polynomials (used for twisting data)
allow negative ones.  The degree of the zero polynomial is -inf so degree
additivity statements stay total.

A global degree cap (default 64) guards against runaway growth: every
computation here stays in low degree, so hitting the cap indicates a bug in
the caller rather than a legitimate large instance.
"""

import re
from fractions import Fraction

from .scalars import binomial, rat, rational_from_string
from .support import add_into, normalized

DEGREE_CAP = 64

NEG_INF = float("-inf")


class DegreeCapExceeded(ValueError):
    pass


def degree(f):
    return max(f) if f else NEG_INF


def _check_cap(f, cap):
    if f and cap is not None and max(f) > cap:
        raise DegreeCapExceeded("degree %d exceeds cap %d" % (max(f), cap))
    return f


def const(c):
    c = rat(c)
    return {0: c} if c else {}


def monomial(k, c=1):
    c = rat(c)
    return {k: c} if c else {}


def poly_mul(f, g, cap=DEGREE_CAP):
    out = {}
    for i, a in f.items():
        for j, b in g.items():
            add_into(out, {i + j: a * b})
    return _check_cap(out, cap)


def shift(f, m, cap=DEGREE_CAP):
    """Substitute t -> t - m, expanded exactly via binomial coefficients."""
    if m == 0:
        return dict(f)
    out = {}
    for k, c in f.items():
        if k < 0:
            raise ValueError("shift is defined for ordinary polynomials only")
        row = {j: c * binomial(k, j) * Fraction(-m) ** (k - j) for j in range(k + 1)}
        add_into(out, row)
    return _check_cap(normalized(out), cap)


def eval_poly(f, c):
    c = rat(c)
    total = Fraction(0)
    for k, a in f.items():
        total += a * c ** k
    return total


def j_poly(n, m):
    """The monic degree-m product of (t - j) for j running over n+1 .. n+m."""
    if m < 0:
        raise ValueError("j_poly needs a nonnegative degree, got %d" % m)
    out = {0: Fraction(1)}
    for j in range(n + 1, n + m + 1):
        out = poly_mul(out, {1: Fraction(1), 0: Fraction(-j)})
    return out


def j_coords(f, n):
    """Coordinates of f in the basis {j_poly(n, m)}, by descending elimination.

    Returns [c_0, ..., c_deg(f)] with f = sum c_m * j_poly(n, m); the zero
    polynomial yields [].
    """
    g = normalized(dict(f))
    if not g:
        return []
    top = max(g)
    coords = [Fraction(0)] * (top + 1)
    for m in range(top, -1, -1):
        c = g.get(m, Fraction(0))
        if c:
            coords[m] = c
            add_into(g, j_poly(n, m), -c)
    if g:
        raise AssertionError("elimination left a residue; basis conversion bug")
    return coords


# ---------------------------------------------------------------------------
# text form: "3/2*t^2 - t + 5"; Laurent exponents as "t^-1"

def poly_to_string(f):
    if not f:
        return "0"
    parts = []
    for k in sorted(f, reverse=True):
        c = Fraction(f[k])
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            tpow = "t" if k == 1 else "t^%d" % k
            body = tpow if mag == 1 else "%s*%s" % (mag, tpow)
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += " %s %s" % (sign, body)
    return text


_TERM_RE = re.compile(
    r"^\s*(?:(?P<coef>[+-]?\d+(?:/\d+)?)\s*\*?\s*)?"
    r"(?P<var>t(?:\^(?P<exp>-?\d+))?)?\s*$")


def poly_from_string(text, laurent=False):
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return {}
    # a minus right after '^' is an exponent sign, not a term separator
    s = s.replace("^-", "^~").replace("-", "+-").replace("^~", "^-")
    out = {}
    for chunk in s.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        neg = chunk.startswith("-")
        if neg:
            chunk = chunk[1:].strip()
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError("bad polynomial term %r in %r" % (chunk, text))
        coef = rational_from_string(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("var"):
            k = int(m.group("exp")) if m.group("exp") else 1
        else:
            k = 0
        if k < 0 and not laurent:
            raise ValueError("negative exponent %d needs a Laurent polynomial" % k)
        if neg:
            coef = -coef
        add_into(out, {k: coef})
    return out
