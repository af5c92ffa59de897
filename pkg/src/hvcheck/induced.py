"""Cyclic modules induced from a character-bearing subalgebra.

The algebra is split into "free" mode generators and a subalgebra S on which
a one-dimensional character chi is given (the central charges, and the
central generator I(0) when it is not free, act by fixed scalars).  The
module has a basis of canonical ordered monomials in the free generators
applied to a cyclic vector: the I-block before the L-block, modes strictly
increasing inside each block.

The action of an arbitrary generator is computed by normal-ordering
rewriting: commute the generator rightward with the defining brackets,
straighten any out-of-order free product that arises, and resolve whatever
reaches the cyclic vector through the split (free part stays as a new
factor, S part contributes its character value).  Rewriting terminates
because each swap either shortens the word or strictly reduces its
disorder; a step budget guards against implementation bugs all the same.

Monomial degree is sum over factors of exponent * (1 + |mode|), so mode-0
and mode-1 factors still carry positive degree and every degree window is
finite even when L(0) or L(1) is free.
"""

from fractions import Fraction

from .algebra import bracket, bracket_gens, gen_from_string, gen_to_string
from .modules import ModuleHandle
from .scalars import rat
from .support import add_into, normalized

DEFAULT_REWRITE_BUDGET = 10 ** 6

_I0 = ("I", 0)


class RewriteBudgetExceeded(RuntimeError):
    pass


class CharacterError(ValueError):
    """The supplied functional is not a character on its subalgebra."""


# ---------------------------------------------------------------------------
# canonical monomials: tuples of (kind, mode, exp) factors

def mono_degree(mono):
    return sum(e * (1 + abs(m)) for _, m, e in mono)


def mono_is_canonical(mono):
    if not isinstance(mono, tuple):
        return False
    for factor in mono:
        if len(factor) != 3:
            return False
        kind, mode, exp = factor
        if kind not in ("I", "L") or not isinstance(mode, int) or exp < 1:
            return False
    kinds = [f[0] for f in mono]
    if kinds != sorted(kinds):  # the I-block precedes the L-block
        return False
    for (k1, m1, _), (k2, m2, _) in zip(mono, mono[1:]):
        if k1 == k2 and m1 >= m2:
            return False
    return True


def mono_sort_key(mono):
    return (mono_degree(mono), mono)


def mono_factors(mono):
    """The factor sequence of a monomial, exponents expanded, left to right."""
    out = []
    for kind, mode, exp in mono:
        out.extend([(kind, mode)] * exp)
    return out


def mono_to_string(mono):
    if not mono:
        return "1"
    return " ".join("%s(%d)%s" % (k, m, ("^%d" % e) if e > 1 else "")
                    for k, m, e in mono)


def mono_from_string(text):
    s = text.strip()
    if s == "1":
        return ()
    factors = []
    for piece in s.split():
        body, caret, exp = piece.partition("^")
        kind, mode = gen_from_string(body)
        if kind == "C":
            raise ValueError("central charges cannot appear in a monomial: %r" % piece)
        e = int(exp) if caret else 1
        factors.append((kind, mode, e))
    mono = tuple(factors)
    if not mono_is_canonical(mono):
        raise ValueError("non-canonical monomial %r" % text)
    return mono


def _can_prefix(gen, mono):
    kind, mode = gen
    if not mono:
        return True
    k0, m0, _ = mono[0]
    if kind == "I":
        return k0 == "L" or mode <= m0
    return k0 == "L" and mode <= m0


def _prefixed(gen, mono):
    kind, mode = gen
    if mono and mono[0][0] == kind and mono[0][1] == mode:
        return ((kind, mode, mono[0][2] + 1),) + mono[1:]
    return ((kind, mode, 1),) + mono


def _head_tail(mono):
    k, m, e = mono[0]
    tail = mono[1:] if e == 1 else ((k, m, e - 1),) + mono[1:]
    return (k, m), tail


# ---------------------------------------------------------------------------
# split data

class SplitDatum:
    """A split of the mode generators into free directions and a subalgebra S
    with a character.

    resolve(gen) -> (free_terms, chi_value): the free component of the
    generator as a {generator: coefficient} dict plus the character value of
    its S-component.  Free generators must resolve to ({gen: 1}, 0).

    central = (c1, c2, c3) fixes the extension charges; i0 fixes the scalar
    for I(0), or None to leave I(0) as a free direction.

    For the shipped presets the free sets are the L-modes up to top_free_L
    and the I-modes up to top_free_I; these bounds also drive basis
    enumeration and the transition-matrix probes.

    Construction validates that chi kills all brackets of S-components for
    mode pairs up to check_modes, and that those brackets have no free
    component (S really is a subalgebra on the checked window).
    """

    def __init__(self, name, is_free, resolve, central, i0, *,
                 top_free_L=None, top_free_I=None, check_modes=8):
        self.name = name
        self.is_free = is_free
        self.resolve = resolve
        self.central = tuple(rat(c) for c in central)
        if len(self.central) != 3:
            raise ValueError("central must be the three charge values")
        self.i0 = None if i0 is None else rat(i0)
        self.top_free_L = top_free_L
        self.top_free_I = top_free_I
        self._validate(check_modes)

    def central_value(self, gen):
        if gen[0] == "C":
            return self.central[gen[1] - 1]
        if gen == _I0:
            return self.i0
        return None

    def chi_tilde(self, elt):
        """The character, extended to all of the algebra through the split."""
        total = Fraction(0)
        for g, c in elt.items():
            if g[0] == "C":
                total += c * self.central[g[1] - 1]
            elif g == _I0 and self.i0 is not None:
                total += c * self.i0
            else:
                total += c * self.resolve(g)[1]
        return total

    def free_part(self, elt):
        out = {}
        for g, c in elt.items():
            if g[0] == "C" or (g == _I0 and self.i0 is not None):
                continue
            add_into(out, self.resolve(g)[0], c)
        return out

    def s_component(self, gen):
        out = {gen: Fraction(1)}
        add_into(out, self.resolve(gen)[0], -1)
        return normalized(out)

    def _validate(self, limit):
        carriers = []
        for m in range(-limit, limit + 1):
            for gen in (("L", m), ("I", m)):
                if gen == _I0 and self.i0 is not None:
                    continue  # central: brackets with it vanish identically
                if self.is_free(gen):
                    free, chi = self.resolve(gen)
                    if free != {gen: 1} or chi != 0:
                        raise CharacterError(
                            "free generator %s must resolve to itself"
                            % gen_to_string(gen))
                else:
                    carriers.append(gen)
        comps = {g: self.s_component(g) for g in carriers}
        for a in carriers:
            for b in carriers:
                br = bracket(comps[a], comps[b])
                if self.free_part(br):
                    raise CharacterError(
                        "S-components of %s and %s bracket outside S"
                        % (gen_to_string(a), gen_to_string(b)))
                if self.chi_tilde(br) != 0:
                    raise CharacterError(
                        "chi does not kill [%s-part, %s-part]"
                        % (gen_to_string(a), gen_to_string(b)))


# ---------------------------------------------------------------------------
# the straightening engine

class InducedModule:
    """Straightened action of the algebra on the span of canonical monomials."""

    def __init__(self, split, budget=None):
        self.split = split
        self.budget = DEFAULT_REWRITE_BUDGET if budget is None else int(budget)
        self._steps = 0
        self._memo = {}

    def act_gen(self, gen, mono):
        """Image of a canonical monomial under one generator (memoized)."""
        key = (gen, mono)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        self._steps += 1
        if self._steps > self.budget:
            raise RewriteBudgetExceeded(
                "rewrite budget %d exhausted straightening %s on %s"
                % (self.budget, gen_to_string(gen), mono_to_string(mono)))
        split = self.split
        if gen[0] == "C" or (gen == _I0 and split.i0 is not None):
            c = split.central_value(gen)
            res = {mono: c} if c else {}
        elif not mono:
            free, chi = split.resolve(gen)
            res = {}
            for fg, c in free.items():
                add_into(res, {((fg[0], fg[1], 1),): c})
            if chi:
                add_into(res, {(): chi})
        elif split.is_free(gen) and _can_prefix(gen, mono):
            res = {_prefixed(gen, mono): Fraction(1)}
        else:
            # g.(x.rest) = x.(g.rest) + [g, x].rest
            head, tail = _head_tail(mono)
            acc = {}
            for n, c in self.act_gen(gen, tail).items():
                add_into(acc, self.act_gen(head, n), c)
            for hg, hc in bracket_gens(gen, head).items():
                add_into(acc, self.act_gen(hg, tail), hc)
            res = normalized(acc)
        self._memo[key] = res
        return res

    def act(self, gen, vec):
        out = {}
        for mono, c in vec.items():
            add_into(out, self.act_gen(gen, mono), c)
        return out

    def cyclic_vector(self):
        return {(): Fraction(1)}

    def handle(self, name=None):
        split = self.split
        return ModuleHandle(
            name or split.name,
            self.act_gen,
            {"I0": split.i0, "C1": split.central[0],
             "C2": split.central[1], "C3": split.central[2]},
            label_str=mono_to_string,
            sort_key=mono_sort_key,
            label_weight=mono_degree,
            validate_label=mono_is_canonical,
        )


# ---------------------------------------------------------------------------
# graded enumeration of the monomial basis

def free_generators(split, cap):
    """Free generators of factor degree <= cap, I-block then L-block, modes
    ascending (canonical prefix order)."""
    out = []
    for kind, top in (("I", split.top_free_I), ("L", split.top_free_L)):
        hi = cap - 1 if top is None else min(top, cap - 1)
        for m in range(-(cap - 1), hi + 1):
            gen = (kind, m)
            if split.is_free(gen):
                out.append(gen)
    return out


def monomials_over(gens, cap):
    """All canonical monomials in the given generators with degree <= cap,
    ordered by (degree, factor tuple)."""
    found = []

    def walk(idx, acc, budget):
        if idx == len(gens):
            found.append(tuple(acc))
            return
        kind, mode = gens[idx]
        w = 1 + abs(mode)
        walk(idx + 1, acc, budget)
        e = 1
        while e * w <= budget:
            acc.append((kind, mode, e))
            walk(idx + 1, acc, budget - e * w)
            acc.pop()
            e += 1

    walk(0, [], cap)
    return sorted(found, key=mono_sort_key)


def graded_basis(split_or_module, cap):
    split = getattr(split_or_module, "split", split_or_module)
    return monomials_over(free_generators(split, cap), cap)


# ---------------------------------------------------------------------------
# presets

def verma(h, d, budget=None, check_modes=8):
    """Cyclic module with all positive modes acting by 0 on the generator,
    L(0) by h, I(0) by d[0], and charges d[1:]; negative modes free."""
    h = rat(h)
    d = tuple(rat(x) for x in d)
    if len(d) != 4:
        raise ValueError("verma needs the 4-tuple (d0, d1, d2, d3)")
    zero = Fraction(0)

    def is_free(gen):
        return gen[1] < 0

    def resolve(gen):
        kind, m = gen
        if m < 0:
            return ({gen: Fraction(1)}, zero)
        if kind == "L":
            return ({}, h if m == 0 else zero)
        return ({}, d[0] if m == 0 else zero)

    split = SplitDatum("verma(%s)" % (h,), is_free, resolve, d[1:4], d[0],
                       top_free_L=-1, top_free_I=-1, check_modes=check_modes)
    return InducedModule(split, budget)


def whittaker(l1, l2, mu1, e, budget=None, check_modes=8):
    """Cyclic module with L(1), L(2), I(1) acting by the given scalars on the
    generator and higher positive modes by 0; L(0) and negative modes free."""
    l1, l2, mu1 = rat(l1), rat(l2), rat(mu1)
    e = tuple(rat(x) for x in e)
    if len(e) != 4:
        raise ValueError("whittaker needs the 4-tuple (e0, e1, e2, e3)")
    zero = Fraction(0)

    def is_free(gen):
        kind, m = gen
        return m <= 0 if kind == "L" else m < 0

    def resolve(gen):
        kind, m = gen
        if is_free(gen):
            return ({gen: Fraction(1)}, zero)
        if kind == "L":
            return ({}, l1 if m == 1 else (l2 if m == 2 else zero))
        return ({}, mu1 if m == 1 else zero)

    split = SplitDatum("whittaker(%s,%s,%s)" % (l1, l2, mu1), is_free, resolve,
                       e[1:4], e[0], top_free_L=0, top_free_I=-1,
                       check_modes=check_modes)
    return InducedModule(split, budget)


def ind_lambda0(lam, RS, y, budget=None, check_modes=8):
    """Cyclic module over the subalgebra spanned by L(m) - lam^m L(0) (m >= 1)
    and I(m) (m >= 0); L-modes <= 0 and I-modes < 0 are free.

    The character sends L(m) - lam^m L(0) to r_m for m = 1, 2 with the forced
    geometric interpolation above, I(0) to s0, I(1) to s1, and I(m) to
    lam^(m-1) s1 for m > 1; the charges take the y values.
    """
    lam = rat(lam)
    if lam == 0:
        raise ValueError("ind_lambda0 needs lambda != 0")
    r1, r2, s0, s1 = (rat(x) for x in RS)
    y = tuple(rat(x) for x in y)
    if len(y) != 3:
        raise ValueError("ind_lambda0 needs the 3-tuple (y1, y2, y3)")
    zero = Fraction(0)

    def is_free(gen):
        kind, m = gen
        return m <= 0 if kind == "L" else m < 0

    def chi_L(m):
        if m == 1:
            return r1
        if m == 2:
            return r2
        return lam ** (m - 2) * (m - 1) * r2 - lam ** (m - 1) * (m - 2) * r1

    def resolve(gen):
        kind, m = gen
        if is_free(gen):
            return ({gen: Fraction(1)}, zero)
        if kind == "L":
            return ({("L", 0): lam ** m}, chi_L(m))
        return ({}, s1 if m == 1 else lam ** (m - 1) * s1)

    split = SplitDatum("ind_lambda0(%s)" % (lam,), is_free, resolve, y, s0,
                       top_free_L=0, top_free_I=-1, check_modes=check_modes)
    return InducedModule(split, budget)


def ind_lambda1(lam, PQ, z, budget=None, check_modes=8):
    """Cyclic module over the subalgebra spanned by L(m) - lam^(m-1) L(1)
    (m >= 2) and I(m) (m >= 1); L-modes <= 1 and I-modes < 0 are free and
    the central I(0) acts by z0.

    The character sends L(m) - lam^(m-1) L(1) to p_m for m = 2, 3, 4 with
    the forced interpolation above, I(1) to q1, I(2) to q2, and I(m) to
    lam^(m-2) q2 for m > 2; the charges take z1..z3.
    """
    lam = rat(lam)
    if lam == 0:
        raise ValueError("ind_lambda1 needs lambda != 0")
    p2, p3, p4, q1, q2 = (rat(x) for x in PQ)
    z = tuple(rat(x) for x in z)
    if len(z) != 4:
        raise ValueError("ind_lambda1 needs the 4-tuple (z0, z1, z2, z3)")
    zero = Fraction(0)

    def is_free(gen):
        kind, m = gen
        return m <= 1 if kind == "L" else m < 0

    def chi_L(m):
        if m == 2:
            return p2
        if m == 3:
            return p3
        if m == 4:
            return p4
        return lam ** (m - 4) * (m - 3) * p4 - lam ** (m - 3) * (m - 4) * p3

    def resolve(gen):
        kind, m = gen
        if is_free(gen):
            return ({gen: Fraction(1)}, zero)
        if kind == "L":
            return ({("L", 1): lam ** (m - 1)}, chi_L(m))
        return ({}, q1 if m == 1 else (q2 if m == 2 else lam ** (m - 2) * q2))

    split = SplitDatum("ind_lambda1(%s)" % (lam,), is_free, resolve, z[1:4],
                       z[0], top_free_L=1, top_free_I=-1,
                       check_modes=check_modes)
    return InducedModule(split, budget)
