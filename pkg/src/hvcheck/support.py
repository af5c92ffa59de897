"""Finite-support coefficient maps.

Algebra elements, polynomials and module vectors are all plain dicts from a
hashable label to an exact coefficient (int or Fraction).  Zero coefficients
are never stored, so ``==`` on two such dicts is exact equality and the zero
object is the empty dict.
"""


def normalized(m):
    """Drop zero coefficients (returns a new dict)."""
    return {k: v for k, v in m.items() if v != 0}


def add_into(acc, m, c=1):
    """In-place ``acc += c*m``, pruning entries that cancel to zero."""
    if not c:
        return acc
    for k, v in m.items():
        w = acc.get(k, 0) + c * v
        if w:
            acc[k] = w
        else:
            acc.pop(k, None)
    return acc


def add(a, b):
    return add_into(dict(a), b)


def sub(a, b):
    return add_into(dict(a), b, -1)


def scale(c, m):
    if not c:
        return {}
    return {k: c * v for k, v in m.items()}


def combine(pairs):
    """Sum of ``c * m`` over an iterable of (c, map) pairs."""
    acc = {}
    for c, m in pairs:
        add_into(acc, m, c)
    return acc
