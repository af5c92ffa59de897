"""Executable probes: the operator identities, functor checks, parameter
dictionaries, intertwiners, basis-transition triangularity, component
extraction and classification predicates that the test suites run.

Everything here is exact; a probe either verifies an identity on a finite
window, produces a counterexample witness, or honestly reports that the
window shows no decision (inconclusive).
"""

from collections import namedtuple
from fractions import Fraction

from .algebra import C, I, L, gen_to_string, gens_in_range
from .induced import free_generators, mono_factors, mono_to_string, monomials_over
from .modules import act, act_elem, act_word, tensor
from .polynomials import eval_poly, poly_to_string
from .report import CheckReport
from .scalars import binomial, rat
from .support import add_into, normalized, scale
from .zoo import a_series, calm_a, calm_omega, omega

TOp = namedtuple("TOp", "l m s")


def t_apply(module, op, vec):
    """Signed-binomial quadratic Heisenberg operator:
    sum_{i=0..s} (-1)^(s-i) C(s,i) I(l-m-i) I(m+i)."""
    l, m, s = op
    out = {}
    for i in range(s + 1):
        w = act(module, I(m + i), vec)
        w = act(module, I(l - m - i), w)
        add_into(out, w, Fraction(-1) ** (s - i) * binomial(s, i))
    return out


def vector_weight(module, vec):
    return max((module.label_weight(lab) for lab in vec), default=0)


def nilpotency_probe(module, op, vec, max_power, name="nilpotency", params=None):
    """Pass with the smallest k <= max_power such that op^k v = 0; otherwise
    inconclusive with the per-step label-weight profile (a strictly growing
    profile is the degree-growth evidence of non-nilpotency, but no
    non-nilpotency claim is ever made)."""
    params = params or {}
    apply_one = ((lambda w: t_apply(module, op, w)) if isinstance(op, TOp)
                 else (lambda w: act_elem(module, op, w)))
    weights = [vector_weight(module, vec)]
    w = vec
    for k in range(1, max_power + 1):
        w = apply_one(w)
        if not w:
            return CheckReport(name, params, "pass", {"power": k})
        weights.append(vector_weight(module, w))
    growing = all(a < b for a, b in zip(weights, weights[1:]))
    return CheckReport(name, params, "inconclusive",
                       {"max_power": max_power,
                        "weight_by_step": weights,
                        "strictly_growing": growing})


# ---------------------------------------------------------------------------
# weight-space quotients (evaluation realizations)

def weighting_check(lam, alpha, beta, mode_range, sample_polys,
                    name="lemma4.2", params=None):
    """Evaluation at integer points intertwines the polynomial module with
    the intermediate series a_series(0, 1-alpha, beta) after rescaling by
    lam^n: checks e_{m+n}(L_m f) = lam^m (n + m(1-alpha)) e_n(f) and
    e_{m+n}(I_m f) = lam^m beta e_n(f) on the given window."""
    lam, alpha, beta = rat(lam), rat(alpha), rat(beta)
    params = params or {}
    module = omega(lam, alpha, beta)
    lo, hi = mode_range
    for f in sample_polys:
        for m in range(lo, hi + 1):
            lm = lam ** m
            for n in range(lo, hi + 1):
                en = eval_poly(f, n)
                got_L = eval_poly(act(module, L(m), f), m + n)
                want_L = lm * (n + m * (1 - alpha)) * en
                got_I = eval_poly(act(module, I(m), f), m + n)
                want_I = lm * beta * en
                if got_L != want_L or got_I != want_I:
                    return CheckReport(name, params, "fail", {
                        "f": poly_to_string(f), "m": m, "n": n,
                        "lhs_L": str(got_L), "rhs_L": str(want_L),
                        "lhs_I": str(got_I), "rhs_I": str(want_I),
                    })
    return CheckReport(name, params, "pass",
                       {"samples": len(list(sample_polys)), "modes": [lo, hi]})


def _collapse_eval(vec, at):
    """Evaluate the polynomial factor of a (index, exponent) vector at a point."""
    out = {}
    at = Fraction(at)
    for (vi, k), c in vec.items():
        add_into(out, {vi: c * at ** k})
    return out


def _weight_block(vec, weight):
    out = {}
    stray = False
    for (vi, n), c in vec.items():
        if n == weight:
            out[vi] = c
        else:
            stray = True
    return out, stray


def weighting_calm_check(V, lam, alpha, beta, mode_range, degree_cap,
                         name="prop4.3", params=None):
    """Same evaluation realization for the V-valued polynomial family:
    E_{m+n}(g . (v (x) f)) must match lam^m times the corresponding
    calm_a(V, 0, 1-alpha, beta) action on f(n) v at weight n."""
    lam, alpha, beta = rat(lam), rat(alpha), rat(beta)
    params = params or {}
    source = calm_omega(V, lam, alpha, beta)
    target = calm_a(V, 0, 1 - alpha, beta)
    lo, hi = mode_range
    for vi in range(V.dim):
        for k in range(degree_cap + 1):
            for m in range(lo, hi + 1):
                lm = lam ** m
                for n in range(lo, hi + 1):
                    for gen in (L(m), I(m)):
                        left = _collapse_eval(
                            act(source, gen, {(vi, k): Fraction(1)}), m + n)
                        seed = {(vi, n): Fraction(n) ** k}
                        right, stray = _weight_block(
                            act(target, gen, seed), m + n)
                        if stray or left != normalized(scale(lm, right)):
                            return CheckReport(name, params, "fail", {
                                "generator": gen_to_string(gen),
                                "basis_index": vi, "exponent": k, "n": n,
                                "left": {str(i): str(c) for i, c in left.items()},
                                "right_scaled": {str(i): str(lm * c)
                                                 for i, c in right.items()},
                            })
    return CheckReport(name, params, "pass",
                       {"dim": V.dim, "degree_cap": degree_cap, "modes": [lo, hi]})


# ---------------------------------------------------------------------------
# parameter dictionaries

def dictionary_rs(lam, RS, y):
    lam = rat(lam)
    if lam == 0:
        raise ValueError("dictionary needs lambda != 0")
    r1, r2, s0, s1 = (rat(x) for x in RS)
    y1, y2, y3 = (rat(x) for x in y)
    beta = s1 / lam
    return {
        "alpha": (lam * r1 - r2) / lam ** 2,
        "beta": beta,
        "h": (r2 - 2 * lam * r1) / lam ** 2,
        "d": (s0 - beta, y1, y2, y3),
    }


def dictionary_rs_inv(lam, alpha, beta, h, d):
    lam, alpha, beta, h = rat(lam), rat(alpha), rat(beta), rat(h)
    if lam == 0:
        raise ValueError("dictionary needs lambda != 0")
    d = tuple(rat(x) for x in d)
    RS = (-lam * (alpha + h), -lam ** 2 * (2 * alpha + h), d[0] + beta, lam * beta)
    return {"RS": RS, "y": (d[1], d[2], d[3])}


def dictionary_pq(lam, PQ, z):
    lam = rat(lam)
    if lam == 0:
        raise ValueError("dictionary needs lambda != 0")
    p2, p3, p4, q1, q2 = (rat(x) for x in PQ)
    z0, z1, z2, z3 = (rat(x) for x in z)
    beta = q2 / lam ** 2
    return {
        "alpha": (lam * p3 - p4) / lam ** 4,
        "beta": beta,
        "l1": (2 * p4 - 3 * lam * p3) / lam ** 3,
        "l2": (p4 - 2 * lam * p3 + lam ** 2 * p2) / lam ** 2,
        "mu1": q1 - q2 / lam,
        "e": (z0 - beta, z1, z2, z3),
    }


def dictionary_pq_inv(lam, alpha, beta, l1, l2, mu1, e):
    lam, alpha, beta = rat(lam), rat(alpha), rat(beta)
    l1, l2, mu1 = rat(l1), rat(l2), rat(mu1)
    if lam == 0:
        raise ValueError("dictionary needs lambda != 0")
    e = tuple(rat(x) for x in e)
    PQ = (l2 - lam * l1 - lam ** 2 * alpha,
          -lam ** 2 * (l1 + 2 * lam * alpha),
          -lam ** 3 * (l1 + 3 * lam * alpha),
          mu1 + lam * beta,
          lam ** 2 * beta)
    return {"PQ": PQ, "z": (e[0] + beta, e[1], e[2], e[3])}


# ---------------------------------------------------------------------------
# intertwiners

def intertwiner_check(a, b, label_map, mode_range, sample_labels,
                      name="intertwiner", params=None, include_central=True):
    """Exact commutation of a label-defined linear map with the action.

    label_map sends a basis label of module a to a vector of module b; it is
    extended linearly (and memoized) on both sides of the identity
    map(g . x) = g . map(x) for every generator g in the mode window and
    every sample label x.
    """
    params = params or {}
    cache = {}

    def phi(vec):
        out = {}
        for lab, c in vec.items():
            img = cache.get(lab)
            if img is None:
                img = cache[lab] = normalized(label_map(lab))
            add_into(out, img, c)
        return out

    gens = list(gens_in_range(*mode_range))
    if include_central:
        gens += [C(1), C(2), C(3)]
    for x in sample_labels:
        vx = {x: Fraction(1)}
        img = phi(vx)
        for g in gens:
            lhs = phi(act(a, g, vx))
            rhs = act(b, g, img)
            if lhs != rhs:
                return CheckReport(name, params, "fail", {
                    "generator": gen_to_string(g),
                    "label": a.label_str(x),
                    "mapped_action": b.vec_json(lhs),
                    "action_of_image": b.vec_json(rhs),
                })
    return CheckReport(name, params, "pass",
                       {"labels": len(list(sample_labels)),
                        "modes": list(mode_range)})


# ---------------------------------------------------------------------------
# triangular basis transitions for polynomial (x) induced tensor modules

def _transition_key(label, jl, ji, depth):
    k, mono = label
    lexp = {m: e for kind, m, e in mono if kind == "L"}
    iexp = {m: e for kind, m, e in mono if kind == "I"}
    return (tuple(lexp.get(jl - s, 0) for s in range(depth)),
            tuple(iexp.get(ji - s, 0) for s in range(depth)),
            k)


def basis_transition_check(om_handle, ind_mod, lam, degree_cap,
                           name="lemma6.1", params=None):
    """Expand monomials with one extra top-mode L-slot against the product
    basis t^k (x) monomial and verify the transition is triangular with
    diagonal entries lam^((j+1) * slot exponent).

    j is the top free L-mode of the induced factor; triangularity is taken
    against the graded order: L-exponents from mode j downward, then
    I-exponents from the top free I-mode downward, then the t-exponent.
    """
    lam = rat(lam)
    params = params or {}
    split = ind_mod.split
    jl, ji = split.top_free_L, split.top_free_I
    if jl is None or ji is None:
        raise ValueError("transition check needs a preset split with "
                         "bounded free blocks")
    slot = ("L", jl + 1)
    tens = tensor(om_handle, ind_mod.handle())
    base = {(0, ()): Fraction(1)}
    depth = degree_cap + abs(jl) + abs(ji) + 3
    ext_gens = free_generators(split, degree_cap) + [slot]
    checked = 0
    for mono in monomials_over(ext_gens, degree_cap):
        slot_exp = 0
        rest = []
        for factor in mono:
            if (factor[0], factor[1]) == slot:
                slot_exp = factor[2]
            else:
                rest.append(factor)
        rest = tuple(rest)
        expansion = act_word(tens, mono_factors(mono), base)
        diag = (slot_exp, rest)
        want = lam ** ((jl + 1) * slot_exp)
        got = expansion.get(diag, Fraction(0))
        if got != want:
            return CheckReport(name, params, "fail", {
                "monomial": mono_to_string(mono),
                "diagonal_label": tens.label_str(diag),
                "expected": str(want), "got": str(got),
            })
        dkey = _transition_key(diag, jl, ji, depth)
        for lab in expansion:
            if lab != diag and _transition_key(lab, jl, ji, depth) >= dkey:
                return CheckReport(name, params, "fail", {
                    "monomial": mono_to_string(mono),
                    "diagonal_label": tens.label_str(diag),
                    "offending_label": tens.label_str(lab),
                })
        checked += 1
    return CheckReport(name, params, "pass",
                       {"monomials": checked, "degree_cap": degree_cap})


# ---------------------------------------------------------------------------
# polynomial-degree component extraction

class SingularSystem(ValueError):
    pass


def _solve_vector_system(A, rhs):
    """Exact Gauss-Jordan solve with vector-dict right-hand sides."""
    n = len(A)
    A = [list(row) for row in A]
    rhs = [dict(v) for v in rhs]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise SingularSystem("singular coefficient matrix")
        A[col], A[piv] = A[piv], A[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv = 1 / Fraction(A[col][col])
        A[col] = [x * inv for x in A[col]]
        rhs[col] = scale(inv, rhs[col])
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
                add_into(rhs[r], rhs[col], -f)
    return rhs


def vandermonde_extract(module, w, shifts, lam):
    """Split w = sum_i t^i (x) u_i into the components w_i with
    lam^(-m) I_m . w = sum_i m^i w_i, by exact solve over the given shifts.

    The shifts must be distinct and beyond the annihilation bound of every
    u_i so that I_m is shift-and-scale there; surplus shifts are used as
    consistency checks on the recovered components.
    """
    lam = rat(lam)
    shifts = [int(m) for m in shifts]
    if len(set(shifts)) != len(shifts):
        raise SingularSystem("duplicate shifts %r" % (shifts,))
    if not w:
        return []
    top = max(k for k, _ in w)
    need = top + 1
    if len(shifts) < need:
        raise ValueError("degree %d needs at least %d shifts, got %d"
                         % (top, need, len(shifts)))
    rows = [scale(lam ** (-m), act(module, I(m), w)) for m in shifts]
    A = [[Fraction(m) ** i for i in range(need)] for m in shifts[:need]]
    comps = _solve_vector_system(A, rows[:need])
    for m, target in zip(shifts[need:], rows[need:]):
        recon = {}
        for i, wi in enumerate(comps):
            add_into(recon, wi, Fraction(m) ** i)
        if recon != target:
            raise SingularSystem(
                "shift %d is inconsistent with the recovered components; "
                "it is probably below an annihilation bound" % m)
    return comps


# ---------------------------------------------------------------------------
# classification predicates
#
# These restate the published irreducibility / isomorphism criteria as exact
# predicates over the rational parameters; no claim is made beyond the
# criteria themselves, and hypotheses that are not finitely checkable are
# reported in assumes_hypotheses.

def _is_int(x):
    return Fraction(x).denominator == 1


def _k0_condition(c0, c2):
    """c0 + (n-1) c2 != 0 for every nonzero integer n, decided exactly."""
    c0, c2 = rat(c0), rat(c2)
    if c2 == 0:
        return c0 != 0
    q = 1 - c0 / c2  # the only root of c0 + (n-1) c2 in n
    return not (_is_int(q) and q != 0)


def _one_dim_twist_iso(m1, m2):
    """The rescaled-Heisenberg isomorphism criterion for one-dimensional
    coefficient modules: shifted L(0)-scalars agree and the I(0)-scalars
    match through the ratio of the beta parameters."""
    if m1["dim"] != 1 or m2["dim"] != 1:
        return False
    if m1["sigma"] - m1["alpha"] != m2["sigma"] - m2["alpha"]:
        return False
    if m1["d"] == 1:
        return True
    return m1["beta"] * m1["tau"] == m2["beta"] * m2["tau"]


def _side(record, key):
    m = dict(record[key])
    out = {
        "lambda": rat(m.get("lambda", 1)),
        "alpha": rat(m.get("alpha", 0)),
        "beta": rat(m.get("beta", 0)),
        "d": int(m.get("d", 0)),
        "dim": int(m.get("dim", 1)),
        "sigma": rat(m.get("sigma", 0)),
        "tau": rat(m.get("tau", 0)),
    }
    return out


def classify(record):
    """Evaluate the classification predicate named by record['kind'].

    Returns a predictions record: the verdict fields plus the hypotheses the
    corresponding criterion assumes but that are not finitely checkable
    here.
    """
    if not isinstance(record, dict) or "kind" not in record:
        raise ValueError("malformed classification record: missing 'kind'")
    kind = record["kind"]
    out = {"kind": kind}
    assumes = []

    if kind == "omega":
        lam, alpha, beta = rat(record["lambda"]), rat(record["alpha"]), rat(record["beta"])
        if lam == 0:
            raise ValueError("omega needs lambda != 0")
        out["omega_irreducible"] = alpha != 0 or beta != 0

    elif kind == "a_series":
        lam, alpha, beta = rat(record["lambda"]), rat(record["alpha"]), rat(record["beta"])
        out["a_series_reducible"] = (_is_int(lam) and alpha in (0, 1) and beta == 0)

    elif kind == "thm21_k0":
        out["thm21_k0_condition"] = _k0_condition(record["c0"], record["c2"])

    elif kind == "calM_omega":
        lam, alpha, beta = rat(record["lambda"]), rat(record["alpha"]), rat(record["beta"])
        if lam == 0:
            raise ValueError("calM_omega needs lambda != 0")
        V = dict(record["V"])
        dim = int(V.get("dim", 1))
        d = int(V.get("d", 0))
        sigma, tau = rat(V.get("sigma", 0)), rat(V.get("tau", 0))
        reducible = (dim == 1 and sigma == alpha
                     and (d == 1 or beta * tau == 0))
        out["calM_reducible"] = reducible
        assumes.append("V is an irreducible coefficient module")

    elif kind == "tensor_iso":
        m1, m2 = _side(record, "m1"), _side(record, "m2")
        same = all(m1[k] == m2[k] for k in ("lambda", "alpha", "beta"))
        out["tensor_iso"] = same and bool(record["ind_iso"])
        assumes.append("both induced factors satisfy the cyclic-annihilation "
                       "hypotheses and the tensor modules are irreducible")

    elif kind == "calM_iso":
        m1, m2 = _side(record, "m1"), _side(record, "m2")
        out["calM_iso"] = (m1["d"] == m2["d"] and m1["lambda"] == m2["lambda"]
                           and _one_dim_twist_iso(m1, m2))
        assumes.append("both modules irreducible, beta parameters nonzero")

    elif kind == "calM_A_iso":
        m1, m2 = _side(record, "m1"), _side(record, "m2")
        out["calM_A_iso"] = (m1["d"] == m2["d"]
                             and _is_int(m1["lambda"] - m2["lambda"])
                             and _one_dim_twist_iso(m1, m2))
        assumes.append("both coefficient modules irreducible, beta parameters nonzero")

    elif kind == "ind_lambda0":
        lam = rat(record["lambda"])
        if lam == 0:
            raise ValueError("ind_lambda0 needs lambda != 0")
        r1, r2, s0, s1 = (rat(x) for x in record["RS"])
        y1, y2, y3 = (rat(x) for x in record["y"])
        out["y3_is_zero"] = y3 == 0
        out["ind_lambda0_irreducible"] = (
            _k0_condition(s0 - s1 / lam, y2)
            and (r2 != lam * r1 or s1 != 0))
        assumes.append("y3 = 0 (criterion stated only there); criterion is "
                       "sufficient, not known necessary")

    elif kind == "ind_lambda1":
        lam = rat(record["lambda"])
        if lam == 0:
            raise ValueError("ind_lambda1 needs lambda != 0")
        p2, p3, p4, q1, q2 = (rat(x) for x in record["PQ"])
        z0, z1, z2, z3 = (rat(x) for x in record["z"])
        out["z3_is_zero"] = z3 == 0
        out["ind_lambda1_irreducible"] = (
            _k0_condition(z0, z2)
            and lam * q1 != q2
            and (p4 != lam * p3 or q2 != 0))
        assumes.append("z3 = 0 (criterion stated only there); criterion is "
                       "sufficient, not known necessary")

    else:
        raise ValueError("unknown classification kind %r" % (kind,))

    out["assumes_hypotheses"] = assumes
    return out
