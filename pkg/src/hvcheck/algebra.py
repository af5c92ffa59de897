"""The twisted Heisenberg-Virasoro algebra.

Basis generators are L(m) and I(m) for integer modes m, plus three central
extension charges C(1), C(2), C(3).  The mode-0 Heisenberg generator I(0) is
itself central; the alternative name C(0) is canonicalized to I(0) on input.
Defining brackets:

    [L_m, L_n] = (n - m) L_{m+n} + delta_{m+n,0} (m^3 - m)/12 C_1
    [L_m, I_n] = n I_{m+n}       + delta_{m+n,0} (m^2 + m)    C_2
    [I_m, I_n] = n delta_{m+n,0} C_3
    [  - , C_i] = 0

Elements are finite-support dicts generator -> coefficient.

Finite quotients: for a shape (r, d) with d in {0, 1}, the span of L(0..r)
and I(d..r+d) carries the bracket of the nonnegative part with every target
index above the bound truncated to zero.
"""

import re
from fractions import Fraction

from .report import CheckReport
from .scalars import rational_from_string
from .support import add_into, scale


def L(m):
    return ("L", int(m))


def I(m):
    return ("I", int(m))


def C(k):
    if k == 0:
        return I(0)
    if k not in (1, 2, 3):
        raise ValueError("central charge label must be 0..3, got %r" % (k,))
    return ("C", k)


def gen_to_string(gen):
    kind, idx = gen
    return "%s(%d)" % (kind, idx)


_GEN_RE = re.compile(r"^\s*([LIC])\(\s*(-?\d+)\s*\)\s*$")


def gen_from_string(text):
    m = _GEN_RE.match(text)
    if not m:
        raise ValueError("bad generator syntax %r (expected L(m), I(m) or C(k))" % (text,))
    kind, idx = m.group(1), int(m.group(2))
    if kind == "L":
        return L(idx)
    if kind == "I":
        return I(idx)
    return C(idx)


def gens_in_range(lo, hi):
    """All L and I generators with modes in [lo, hi], in a fixed order."""
    return [L(m) for m in range(lo, hi + 1)] + [I(m) for m in range(lo, hi + 1)]


# ---------------------------------------------------------------------------
# brackets

def bracket_gens(g, h):
    """Bracket of two basis generators, as an element dict."""
    kg, a = g
    kh, b = h
    if kg == "C" or kh == "C":
        return {}
    if kg == "L" and kh == "L":
        out = {}
        if a != b:
            out[L(a + b)] = Fraction(b - a)
        if a + b == 0:
            c = Fraction(a ** 3 - a, 12)
            if c:
                out[C(1)] = c
        return out
    if kg == "L" and kh == "I":
        out = {}
        if b != 0:
            out[I(a + b)] = Fraction(b)
        if a + b == 0:
            c = Fraction(a * a + a)
            if c:
                out[C(2)] = c
        return out
    if kg == "I" and kh == "L":
        return scale(-1, bracket_gens(h, g))
    # I with I
    if a + b == 0 and b != 0:
        return {C(3): Fraction(b)}
    return {}


def bracket(x, y):
    """Bilinear extension of bracket_gens to element dicts (or bare generators)."""
    if isinstance(x, tuple):
        x = {x: Fraction(1)}
    if isinstance(y, tuple):
        y = {y: Fraction(1)}
    out = {}
    for g, cg in x.items():
        for h, ch in y.items():
            add_into(out, bracket_gens(g, h), cg * ch)
    return out


# ---------------------------------------------------------------------------
# element text form: "+"-joined coef*gen terms, e.g. "2*L(3) + 1/2*I(-1)"

def elt_to_string(elt):
    if not elt:
        return "0"
    parts = []
    for g in sorted(elt, key=lambda g: (g[0], g[1])):
        c = Fraction(elt[g])
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        body = gen_to_string(g) if mag == 1 else "%s*%s" % (mag, gen_to_string(g))
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += " %s %s" % (sign, body)
    return text


def elt_from_string(text):
    s = text.strip()
    if s == "0":
        return {}
    # a minus inside a mode argument is not a term separator
    s = s.replace("(-", "(~").replace("-", "+-").replace("(~", "(-")
    out = {}
    for chunk in s.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        neg = chunk.startswith("-")
        if neg:
            chunk = chunk[1:].strip()
        if "*" in chunk:
            coef_text, gen_text = chunk.split("*", 1)
            coef = rational_from_string(coef_text)
        else:
            coef, gen_text = Fraction(1), chunk
        if neg:
            coef = -coef
        add_into(out, {gen_from_string(gen_text): coef})
    return out


# ---------------------------------------------------------------------------
# finite quotients of the nonnegative part

def quotient_gens(shape):
    r, d = shape
    if d not in (0, 1) or r < 0:
        raise ValueError("bad quotient shape %r" % (shape,))
    return [L(i) for i in range(0, r + 1)] + [I(j) for j in range(d, r + d + 1)]


def quotient_bracket_gens(shape, g, h):
    """Bracket in the (r, d) quotient: targets above the index bound vanish."""
    r, d = shape
    kg, a = g
    kh, b = h
    if kg == "L" and kh == "L":
        if a == b or a + b > r:
            return {}
        return {L(a + b): Fraction(b - a)}
    if kg == "L" and kh == "I":
        if b == 0 or a + b > r + d:
            return {}
        return {I(a + b): Fraction(b)}
    if kg == "I" and kh == "L":
        return scale(-1, quotient_bracket_gens(shape, h, g))
    return {}


def quotient_bracket(shape, x, y):
    """Bilinear quotient bracket; rejects generators outside the shape."""
    allowed = set(quotient_gens(shape))
    if isinstance(x, tuple):
        x = {x: Fraction(1)}
    if isinstance(y, tuple):
        y = {y: Fraction(1)}
    for elt in (x, y):
        for g in elt:
            if g not in allowed:
                raise ValueError("generator %s outside quotient shape %r"
                                 % (gen_to_string(g), shape))
    out = {}
    for g, cg in x.items():
        for h, ch in y.items():
            add_into(out, quotient_bracket_gens(shape, g, h), cg * ch)
    return out


# ---------------------------------------------------------------------------
# Lie axioms

def _lie_axiom_witness(gens, br2):
    """First antisymmetry or Jacobi violation over the given generators, or None.

    br2 is a bracket on generators returning an element dict; it is extended
    bilinearly here so the sweep exercises exactly the supplied table.
    """

    def br_elt(x, elt):
        out = {}
        for h, c in elt.items():
            add_into(out, br2(x, h), c)
        return out

    for x in gens:
        for y in gens:
            anti = add_into(dict(br2(x, y)), br2(y, x))
            if anti:
                return {"kind": "antisymmetry",
                        "pair": [gen_to_string(x), gen_to_string(y)],
                        "defect": elt_to_string(anti)}
    n = len(gens)
    for a in range(n):
        for b in range(a, n):
            for c in range(b, n):
                x, y, z = gens[a], gens[b], gens[c]
                acc = dict(br_elt(x, br2(y, z)))
                add_into(acc, br_elt(y, br2(z, x)))
                add_into(acc, br_elt(z, br2(x, y)))
                if acc:
                    return {"kind": "jacobi",
                            "triple": [gen_to_string(x), gen_to_string(y), gen_to_string(z)],
                            "defect": elt_to_string(acc)}
    return None


def check_jacobi(lo, hi, shapes=(), bracket_fn=None, quotient_bracket_fn=None):
    """Antisymmetry + Jacobi for all basis triples with modes in [lo, hi].

    Runs on the full algebra and on every requested quotient shape.  The
    bracket tables are injectable so a corrupted table can be exercised as a
    negative control.  Failure is a report status, not an exception.
    """
    params = {"modes": [lo, hi], "shapes": [list(s) for s in shapes]}
    br = bracket_fn or bracket_gens
    gens = gens_in_range(lo, hi) + [C(1), C(2), C(3)]
    witness = _lie_axiom_witness(gens, br)
    if witness is not None:
        witness["algebra"] = "full"
        return CheckReport("axioms", params, "fail", witness)
    for shape in shapes:
        qbr = quotient_bracket_fn or quotient_bracket_gens
        qgens = quotient_gens(shape)
        witness = _lie_axiom_witness(qgens, lambda g, h: qbr(shape, g, h))
        if witness is not None:
            witness["algebra"] = "quotient %r" % (shape,)
            return CheckReport("axioms", params, "fail", witness)
    return CheckReport("axioms", params, "pass",
                       {"generators": len(gens), "shapes": len(list(shapes))})
