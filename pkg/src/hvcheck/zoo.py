"""Concrete module constructors.

Polynomial family omega(lam, alpha, beta) on C[t]:

    L_m . f = lam^m (t - m*alpha) f(t - m)
    I_m . f = lam^m beta f(t - m)
    C_i . f = 0

Intermediate-series family a_series(lam, alpha, beta) on basis {v_n}:

    L_m v_n = (lam + n + m*alpha) v_{m+n},   I_m v_n = beta v_{m+n}

Finite-dimensional modules over a quotient shape (r, d) are given by explicit
action matrices (HbarModule) and induce the two tensor-style families
calm_omega (non-weight) and calm_a (weight) via truncated exponential sums of
the quotient generators.  gamma_twist perturbs any centrally-trivial module's
L-action by Heisenberg terms with Laurent coefficients.
"""

from fractions import Fraction

from .modules import ModuleHandle
from .polynomials import poly_mul, poly_to_string, shift
from .scalars import factorial, rat
from .support import add_into, normalized
from .algebra import quotient_bracket_gens, quotient_gens


def _tpow_str(k):
    if k == 0:
        return "1"
    if k == 1:
        return "t"
    return "t^%d" % k


def omega(lam, alpha, beta):
    """The polynomial shift module; labels are t-exponents."""
    lam, alpha, beta = rat(lam), rat(alpha), rat(beta)
    if lam == 0:
        raise ValueError("omega needs lambda != 0")

    def act_label(gen, k):
        kind, m = gen
        lm = lam ** m
        sh = shift({k: Fraction(1)}, m)
        if kind == "I":
            return normalized({e: lm * beta * c for e, c in sh.items()})
        return normalized(poly_mul({1: lm, 0: -lm * m * alpha}, sh))

    return ModuleHandle(
        "omega(%s,%s,%s)" % (lam, alpha, beta),
        act_label,
        {"I0": beta, "C1": 0, "C2": 0, "C3": 0},
        label_str=_tpow_str,
        label_weight=lambda k: k,
        validate_label=lambda k: isinstance(k, int) and k >= 0,
    )


def a_series(lam, alpha, beta):
    """The intermediate-series weight module; labels are weight indices."""
    lam, alpha, beta = rat(lam), rat(alpha), rat(beta)

    def act_label(gen, n):
        kind, m = gen
        if kind == "I":
            return {m + n: beta} if beta else {}
        c = lam + n + m * alpha
        return {m + n: c} if c else {}

    return ModuleHandle(
        "a_series(%s,%s,%s)" % (lam, alpha, beta),
        act_label,
        {"I0": beta, "C1": 0, "C2": 0, "C3": 0},
        is_weight=True,
        label_str=lambda n: "v(%d)" % n,
        label_weight=abs,
        validate_label=lambda n: isinstance(n, int),
    )


# ---------------------------------------------------------------------------
# finite-dimensional modules over a quotient shape

def _mat_mul(A, B):
    n = len(A)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _mat_combine(pairs, n):
    out = [[Fraction(0)] * n for _ in range(n)]
    for c, M in pairs:
        for i in range(n):
            for j in range(n):
                out[i][j] += c * M[i][j]
    return tuple(tuple(row) for row in out)


def _mat_is_zero(A):
    return all(all(x == 0 for x in row) for row in A)


class RelationError(ValueError):
    """Action matrices violating the quotient bracket relations."""


class HbarModule:
    """Finite-dimensional module over the quotient of shape (r, d).

    matrices maps every quotient generator ('L', i) / ('I', j) to a dim x dim
    matrix of Fractions (rows act on coordinate columns).  Construction
    verifies all bracket relations and derives r_prime, the largest i with a
    nonzero I(i+d) action (None when the Heisenberg part acts trivially).
    """

    def __init__(self, shape, dim, matrices):
        r, d = shape
        if d not in (0, 1) or r < 0 or dim < 1:
            raise ValueError("bad quotient shape %r / dim %r" % (shape, dim))
        self.shape = (r, d)
        self.dim = dim
        self.mats = {}
        for g in quotient_gens(shape):
            if g not in matrices:
                raise ValueError("missing action matrix for %s(%d)" % g)
            M = tuple(tuple(rat(x) for x in row) for row in matrices[g])
            if len(M) != dim or any(len(row) != dim for row in M):
                raise ValueError("matrix for %s(%d) is not %dx%d" % (g + (dim, dim)))
            self.mats[g] = M
        self._check_relations()
        self.r_prime = None
        for i in range(r, -1, -1):
            if not _mat_is_zero(self.mats[("I", i + d)]):
                self.r_prime = i
                break

    def _check_relations(self):
        gens = quotient_gens(self.shape)
        for a in gens:
            for b in gens:
                lhs = _mat_combine(
                    [(Fraction(1), _mat_mul(self.mats[a], self.mats[b])),
                     (Fraction(-1), _mat_mul(self.mats[b], self.mats[a]))],
                    self.dim)
                rhs = _mat_combine(
                    [(c, self.mats[g])
                     for g, c in quotient_bracket_gens(self.shape, a, b).items()],
                    self.dim)
                if lhs != rhs:
                    raise RelationError(
                        "matrices violate the bracket relation for (%s(%d), %s(%d))"
                        % (a + b))

    def column(self, qgen, vi):
        """Image of the vi-th basis vector under a quotient generator."""
        M = self.mats[qgen]
        return {vj: M[vj][vi] for vj in range(self.dim) if M[vj][vi]}

    def scalar_of(self, qgen):
        """The scalar c when the generator acts as c * Id, else None."""
        M = self.mats[qgen]
        c = M[0][0]
        for i in range(self.dim):
            for j in range(self.dim):
                if M[i][j] != (c if i == j else 0):
                    return None
        return c


def one_dim_V(sigma, tau, shape):
    """The one-dimensional module: L(0) acts by sigma, I(0) by tau (d = 0 only)."""
    sigma, tau = rat(sigma), rat(tau)
    r, d = shape
    if d == 1 and tau != 0:
        raise ValueError("shape (r, 1) has no I(0); tau must be 0")
    mats = {}
    for g in quotient_gens(shape):
        kind, idx = g
        if g == ("L", 0):
            mats[g] = ((sigma,),)
        elif g == ("I", 0):
            mats[g] = ((tau,),)
        else:
            mats[g] = ((Fraction(0),),)
    return HbarModule(shape, 1, mats)


def hbar_module(shape, dim, matrices):
    return HbarModule(shape, dim, matrices)


def two_dim_fixture():
    """Shape (1, 0), dim 2: nilpotent L(0), invertible scalar I(0); r_prime = 0."""
    z = ((Fraction(0), Fraction(0)), (Fraction(0), Fraction(0)))
    return HbarModule((1, 0), 2, {
        ("L", 0): ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(0))),
        ("L", 1): z,
        ("I", 0): ((Fraction(2), Fraction(0)), (Fraction(0), Fraction(2))),
        ("I", 1): z,
    })


def calm_omega(V, lam, alpha, beta):
    """Non-weight family on V (x) C[t]; labels are (basis index, t-exponent)."""
    lam, alpha, beta = rat(lam), rat(alpha), rat(beta)
    if lam == 0:
        raise ValueError("calm_omega needs lambda != 0")
    r, d = V.shape

    def act_label(gen, lab):
        vi, k = lab
        kind, m = gen
        lm = lam ** m
        sh = shift({k: Fraction(1)}, m)
        out = {}
        if kind == "L":
            first = poly_mul({1: Fraction(1), 0: -Fraction(m) * alpha}, sh)
            for e, c in first.items():
                add_into(out, {(vi, e): lm * c})
            for i in range(r + 1):
                coef = Fraction(m) ** (i + 1) / factorial(i + 1) * lm
                if not coef:
                    continue
                for vj, a in V.column(("L", i), vi).items():
                    for e, c in sh.items():
                        add_into(out, {(vj, e): coef * a * c})
        else:
            for i in range(r + 1):
                coef = Fraction(m) ** (i + d) / factorial(i + d) * lm * beta
                if not coef:
                    continue
                for vj, a in V.column(("I", i + d), vi).items():
                    for e, c in sh.items():
                        add_into(out, {(vj, e): coef * a * c})
        return out

    if d == 1:
        i0 = Fraction(0)
    else:
        tau = V.scalar_of(("I", 0))
        i0 = None if tau is None else beta * tau
    return ModuleHandle(
        "calm_omega[dim %d,(%d,%d)](%s,%s,%s)" % (V.dim, r, d, lam, alpha, beta),
        act_label,
        {"I0": i0, "C1": 0, "C2": 0, "C3": 0},
        label_str=lambda lab: "e%d(x)%s" % (lab[0], _tpow_str(lab[1])),
        label_weight=lambda lab: lab[1],
        validate_label=lambda lab: (isinstance(lab, tuple) and len(lab) == 2
                                    and 0 <= lab[0] < V.dim and lab[1] >= 0),
    )


def calm_a(V, lam, alpha, beta):
    """Weight family on V (x) {v_n}; labels are (basis index, weight index)."""
    lam, alpha, beta = rat(lam), rat(alpha), rat(beta)
    r, d = V.shape

    def act_label(gen, lab):
        vi, n = lab
        kind, m = gen
        out = {}
        if kind == "L":
            c0 = n + lam + alpha * m
            if c0:
                add_into(out, {(vi, m + n): c0})
            for i in range(r + 1):
                coef = Fraction(m) ** (i + 1) / factorial(i + 1)
                if not coef:
                    continue
                for vj, a in V.column(("L", i), vi).items():
                    add_into(out, {(vj, m + n): coef * a})
        else:
            for i in range(r + 1):
                coef = beta * Fraction(m) ** (i + d) / factorial(i + d)
                if not coef:
                    continue
                for vj, a in V.column(("I", i + d), vi).items():
                    add_into(out, {(vj, m + n): coef * a})
        return out

    if d == 1:
        i0 = Fraction(0)
    else:
        tau = V.scalar_of(("I", 0))
        i0 = None if tau is None else beta * tau
    return ModuleHandle(
        "calm_a[dim %d,(%d,%d)](%s,%s,%s)" % (V.dim, r, d, lam, alpha, beta),
        act_label,
        {"I0": i0, "C1": 0, "C2": 0, "C3": 0},
        is_weight=True,
        label_str=lambda lab: "e%d(x)v(%d)" % lab,
        label_weight=lambda lab: abs(lab[1]),
        validate_label=lambda lab: (isinstance(lab, tuple) and len(lab) == 2
                                    and 0 <= lab[0] < V.dim),
    )


def gamma_twist(base, gamma):
    """Replace L_m by L_m + sum_i c_i I_{m+i} for gamma = sum_i c_i t^i.

    Requires all three central charges to act as zero on the base module:
    a nonzero C1 breaks the mode-opposite L-pairs once the twisted charges
    are declared zero, and nonzero C2/C3 break the mixed and Heisenberg
    pairs, so the twisted action would not satisfy the brackets.
    """
    for key in ("C1", "C2", "C3"):
        if base.central[key] != 0:
            raise ValueError("gamma_twist needs %s = 0 on the base module "
                             "(got %s)" % (key, base.central[key]))
    gamma = {i: rat(c) for i, c in gamma.items() if c}

    def act_label(gen, lab):
        kind, m = gen
        out = dict(base.act_label(gen, lab))
        if kind == "L":
            for i, c in gamma.items():
                add_into(out, base.act_label(("I", m + i), lab), c)
        return out

    constant = all(i == 0 for i in gamma)
    return ModuleHandle(
        "twist[%s](%s)" % (poly_to_string(gamma), base.name),
        act_label,
        {"I0": base.central["I0"], "C1": 0, "C2": 0, "C3": 0},
        is_weight=base.is_weight and constant,
        laurent=base.laurent,
        label_str=base.label_str,
        sort_key=base.sort_key,
        label_weight=base.label_weight,
        validate_label=base.validate_label,
    )
