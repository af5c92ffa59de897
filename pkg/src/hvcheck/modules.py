"""Module-action machinery shared by every concrete module family.

A ModuleHandle packages a basis-label scheme with the action of single
generators on single labels; linear extension, bracket-defect computation,
tensor products and exact span closure live here and work uniformly for all
families.  Vectors are finite-support dicts label -> Fraction.
"""

from fractions import Fraction

from .algebra import bracket, gen_to_string, gens_in_range
from .report import CheckReport
from .support import add, add_into, normalized, scale, sub


class LabelSchemeError(ValueError):
    pass


class AmbientTooLarge(ValueError):
    pass


class ModuleHandle:
    """One concrete module: a label scheme plus the action rule on labels.

    act_label(gen, label) must return the image of the basis vector at label
    under L(m) or I(m) as a vector dict; the three central charges act by the
    scalars recorded in ``central`` and are handled generically.  ``central``
    also records the scalar by which I(0) acts when that action is scalar at
    all (None otherwise) -- the central character of the module.
    """

    def __init__(self, name, act_label, central, *, is_weight=False,
                 laurent=False, label_str=str, sort_key=None, label_weight=None,
                 validate_label=None):
        self.name = name
        self._act_label = act_label
        self.central = dict(central)
        for key in ("I0", "C1", "C2", "C3"):
            self.central.setdefault(key, None if key == "I0" else Fraction(0))
        self.is_weight = is_weight
        self.laurent = laurent
        self.label_str = label_str
        self.sort_key = sort_key or (lambda lab: lab)
        self.label_weight = label_weight or (lambda lab: 0)
        self.validate_label = validate_label
        self._memo = {}

    def act_label(self, gen, label):
        # actions on single labels repeat heavily inside sweeps; the cached
        # dicts are shared and must never be mutated by callers
        key = (gen, label)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if self.validate_label is not None and not self.validate_label(label):
            raise LabelSchemeError("label %r does not belong to module %s"
                                   % (label, self.name))
        result = self._act_label(gen, label)
        self._memo[key] = result
        return result

    def vec_str(self, vec):
        if not vec:
            return "0"
        items = sorted(((self.label_str(lab), c) for lab, c in vec.items()))
        return " + ".join("%s*[%s]" % (Fraction(c), s) for s, c in items)

    def vec_json(self, vec):
        return [{"label": s, "coef": str(Fraction(c))}
                for s, c in sorted((self.label_str(lab), c) for lab, c in vec.items())]


def act(module, gen, vec):
    """Action of one generator on a vector (linear extension over labels)."""
    if gen[0] == "C":
        return scale(module.central["C%d" % gen[1]], vec)
    out = {}
    for lab, c in vec.items():
        add_into(out, module.act_label(gen, lab), c)
    return out


def act_elem(module, elt, vec):
    """Action of an algebra element (dict or bare generator) on a vector."""
    if isinstance(elt, tuple):
        return act(module, elt, vec)
    out = {}
    for g, c in elt.items():
        add_into(out, act(module, g, vec), c)
    return out


def act_word(module, gens_seq, vec):
    """Apply a product of generators, rightmost factor first."""
    for g in reversed(list(gens_seq)):
        vec = act(module, g, vec)
    return vec


def commutator_defect(module, x, y, vec):
    """act([x,y], v) - act(x, act(y, v)) + act(y, act(x, v)).

    Identically zero exactly when the handle's action rule satisfies the
    module axiom for the pair (x, y) on v.
    """
    out = act_elem(module, bracket(x, y), vec)
    out = sub(out, act_elem(module, x, act_elem(module, y, vec)))
    out = add(out, act_elem(module, y, act_elem(module, x, vec)))
    return out


def tensor(a, b, name=None):
    """Diagonal action on pair labels; central characters add."""
    i0 = None
    if a.central["I0"] is not None and b.central["I0"] is not None:
        i0 = a.central["I0"] + b.central["I0"]
    central = {"I0": i0}
    for key in ("C1", "C2", "C3"):
        central[key] = a.central[key] + b.central[key]

    def act_label(gen, lab):
        la, lb = lab
        out = {}
        for l2, c in a.act_label(gen, la).items():
            add_into(out, {(l2, lb): c})
        for l2, c in b.act_label(gen, lb).items():
            add_into(out, {(la, l2): c})
        return out

    return ModuleHandle(
        name or "%s(x)%s" % (a.name, b.name),
        act_label,
        central,
        is_weight=a.is_weight and b.is_weight,
        laurent=a.laurent or b.laurent,
        label_str=lambda lab: "%s(x)%s" % (a.label_str(lab[0]), b.label_str(lab[1])),
        sort_key=lambda lab: (a.sort_key(lab[0]), b.sort_key(lab[1])),
        label_weight=lambda lab: a.label_weight(lab[0]) + b.label_weight(lab[1]),
    )


# ---------------------------------------------------------------------------
# exact linear algebra over the label basis

class SubspaceBasis:
    """Echelon basis of a finite-dimensional subspace, fully reduced.

    Rows are monic on their leading label (largest by sort key) and each
    leading label is eliminated from every other row, so the row set is a
    canonical function of the spanned subspace.  ``leaked`` records that some
    closure step produced components outside the ambient window and they were
    dropped: any "pass" built on a leaked basis is only evidence, never proof.
    """

    def __init__(self, sort_key):
        self.sort_key = sort_key
        self.rows = {}  # lead label -> vector dict
        self.leaked = False

    @property
    def dim(self):
        return len(self.rows)

    def row_list(self):
        return [self.rows[lead] for lead in sorted(self.rows, key=self.sort_key)]

    def _lead(self, vec):
        return max(vec, key=self.sort_key)

    def reduce(self, vec):
        vec = dict(vec)
        while vec:
            lead = self._lead(vec)
            row = self.rows.get(lead)
            if row is None:
                return vec
            add_into(vec, row, -vec[lead])
        return vec

    def insert(self, vec):
        """Reduce vec against the basis; adjoin the residue if nonzero.

        Returns the normalized new row, or None when vec was already in the
        span.
        """
        res = self.reduce(vec)
        if not res:
            return None
        lead = self._lead(res)
        res = scale(1 / Fraction(res[lead]), res)
        for other_lead, row in self.rows.items():
            if lead in row:
                add_into(row, res, -row[lead])
        self.rows[lead] = res
        return res

    def contains(self, vec):
        return not self.reduce(vec)


def span_closure(module, seeds, mode_range, ambient, max_dim):
    """Close the span of the seeds under all generators with modes in range.

    Components at labels rejected by the ambient predicate are dropped and
    the leak is recorded.  Stops at a fixed point or when max_dim rows have
    been accumulated.  Raises AmbientTooLarge when the ambient window shows
    more than 64 * max_dim distinct labels.
    """
    basis = SubspaceBasis(module.sort_key)
    seen = set()

    def clip(vec):
        out = {}
        for lab, c in vec.items():
            if ambient(lab):
                out[lab] = c
                seen.add(lab)
                if len(seen) > 64 * max_dim:
                    raise AmbientTooLarge(
                        "ambient window exceeds %d labels" % (64 * max_dim))
            else:
                basis.leaked = True
        return out

    gens = gens_in_range(*mode_range)
    frontier = []
    for s in seeds:
        row = basis.insert(clip(normalized(s)))
        if row is not None:
            frontier.append(row)
    while frontier and basis.dim < max_dim:
        next_frontier = []
        for row in frontier:
            for g in gens:
                if basis.dim >= max_dim:
                    break
                new = basis.insert(clip(act(module, g, row)))
                if new is not None:
                    next_frontier.append(new)
        frontier = next_frontier
    return basis


def invariance_check(module, membership, samples, mode_range, name="invariance",
                     params=None):
    """Pass iff every generator in range maps every sample back into the set.

    membership is a vector predicate describing a candidate invariant
    subspace; samples must satisfy it (checked up front).
    """
    params = params or {}
    for idx, s in enumerate(samples):
        if not membership(s):
            raise ValueError("sample %d does not satisfy the membership predicate" % idx)
    lo, hi = mode_range
    for s in samples:
        for g in gens_in_range(lo, hi):
            image = act(module, g, s)
            if not membership(image):
                return CheckReport(name, params, "fail", {
                    "generator": gen_to_string(g),
                    "sample": module.vec_json(s),
                    "image": module.vec_json(image),
                })
    return CheckReport(name, params, "pass",
                       {"samples": len(list(samples)), "modes": [lo, hi]})
