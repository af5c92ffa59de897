import random
from fractions import Fraction

import pytest

from hvcheck.algebra import I, L
from hvcheck.induced import graded_basis, mono_factors, verma, whittaker
from hvcheck.modules import act, act_word, tensor
from hvcheck.polynomials import shift
from hvcheck.probes import (SingularSystem, TOp, basis_transition_check,
                            classify, dictionary_pq, dictionary_pq_inv,
                            dictionary_rs, dictionary_rs_inv,
                            intertwiner_check, nilpotency_probe, t_apply,
                            vandermonde_extract, weighting_calm_check,
                            weighting_check)
from hvcheck.support import add_into, scale
from hvcheck.zoo import calm_omega, omega, one_dim_V, two_dim_fixture

ONE = Fraction(1)


def rand_rat(rng, nonzero=False):
    num = rng.randint(-5, 5)
    while nonzero and num == 0:
        num = rng.randint(-5, 5)
    return Fraction(num, rng.randint(1, 3))


# ---------------------------------------------------------------------------
# quadratic Heisenberg operators

def test_t_apply_annihilates_polynomial_module():
    om = omega(Fraction(3), Fraction(-1), Fraction(2))
    f = {3: ONE, 1: Fraction(1, 2)}
    for s in range(1, 5):
        for l in range(-4, 5):
            for m in range(-4, 5):
                assert t_apply(om, TOp(l, m, s), f) == {}


def test_t_apply_order_zero_is_scaled_shift():
    om = omega(1, Fraction(7), Fraction(2))
    f = {2: ONE, 0: Fraction(-1)}
    got = t_apply(om, TOp(5, 2, 0), f)
    assert got == scale(Fraction(4), shift(f, 5))


def test_t_apply_scalar_fixture():
    V = two_dim_fixture()  # I(0) = 2 Id, r' = d = 0
    cm = calm_omega(V, 1, Fraction(5), Fraction(3))
    for vi in (0, 1):
        got = t_apply(cm, TOp(4, 1, 0), {(vi, 1): ONE})
        want = {(vi, e): Fraction(36) * c for e, c in shift({1: ONE}, 4).items()}
        assert got == want


def test_t_apply_tensor_components():
    vm = verma(Fraction(-1), (Fraction(-1), 0, 0, 0))
    tens = tensor(omega(1, 0, 2), vm.handle())
    got = t_apply(tens, TOp(-7, -3, 1), {(0, ()): ONE})
    assert got  # nontrivial
    key_pos = (0, (("I", -5, 1), ("I", -2, 1)))
    key_neg = (0, (("I", -4, 1), ("I", -3, 1)))
    assert got[key_pos] == 1
    assert got[key_neg] == -1


# ---------------------------------------------------------------------------
# nilpotency probes

def test_nilpotency_verma_example():
    vm = verma(Fraction(2), (ONE, 0, 0, 0))
    v = vm.act(L(-1), {(): ONE})
    rep = nilpotency_probe(vm.handle(), {L(3): ONE}, v, 10)
    assert rep.status == "pass"
    assert rep.witness["power"] == 1  # [L3, L-1] lands on a killed mode


def test_nilpotency_polynomial_growth():
    om = omega(1, 1, 1)
    rep = nilpotency_probe(om, {L(2): ONE}, {0: ONE}, 10)
    assert rep.status == "inconclusive"
    assert rep.witness["strictly_growing"]


def test_nilpotency_t_operator():
    vm = verma(Fraction(-1), (Fraction(-1), 0, 0, 0))
    tens = tensor(omega(1, 0, 2), vm.handle())
    rep = nilpotency_probe(tens, TOp(9, 4, 1), {(0, ()): ONE}, 3)
    assert rep.status == "pass"
    assert rep.witness["power"] == 1


# ---------------------------------------------------------------------------
# evaluation realizations

def test_weighting_spec_values():
    lam, alpha = Fraction(2), Fraction(3)
    om = omega(lam, alpha, Fraction(5))
    from hvcheck.polynomials import eval_poly
    image = act(om, L(1), {0: ONE})
    assert eval_poly(image, 2) == -2
    assert lam ** 1 * (1 + 1 * (1 - alpha)) * 1 == -2


def test_weighting_check_passes():
    rng = random.Random(21)
    for _ in range(6):
        lam = rand_rat(rng, nonzero=True)
        rep = weighting_check(lam, rand_rat(rng), rand_rat(rng), (-4, 4),
                              [{k: rand_rat(rng, nonzero=True)}
                               for k in range(4)])
        assert rep.status == "pass"


def test_weighting_check_beta_zero():
    rep = weighting_check(Fraction(3), Fraction(1), 0, (-3, 3), [{2: ONE}])
    assert rep.status == "pass"


def test_weighting_calm_check_fixtures():
    rep = weighting_calm_check(two_dim_fixture(), Fraction(2), Fraction(3),
                               Fraction(5), (-3, 3), 4)
    assert rep.status == "pass"
    rep = weighting_calm_check(one_dim_V(2, 3, (0, 0)), Fraction(1, 2),
                               Fraction(-1), Fraction(4), (-3, 3), 4)
    assert rep.status == "pass"


# ---------------------------------------------------------------------------
# dictionaries

def test_dictionary_rs_example():
    d = dictionary_rs(1, (2, 3, 4, 5), (0, 0, 0))
    assert d["alpha"] == -1
    assert d["beta"] == 5
    assert d["h"] == -1
    assert d["d"][0] == -1


def test_dictionary_pq_example():
    d = dictionary_pq(1, (1, 2, 3, 0, 0), (0, 0, 0, 0))
    assert d["alpha"] == -1
    assert d["l1"] == 0
    assert d["l2"] == 0


def test_dictionary_round_trips():
    rng = random.Random(22)
    for _ in range(20):
        lam = rand_rat(rng, nonzero=True)
        RS = tuple(rand_rat(rng) for _ in range(4))
        y = tuple(rand_rat(rng) for _ in range(3))
        d = dictionary_rs(lam, RS, y)
        back = dictionary_rs_inv(lam, d["alpha"], d["beta"], d["h"], d["d"])
        assert back["RS"] == RS and back["y"] == y
        PQ = tuple(rand_rat(rng) for _ in range(5))
        z = tuple(rand_rat(rng) for _ in range(4))
        d = dictionary_pq(lam, PQ, z)
        back = dictionary_pq_inv(lam, d["alpha"], d["beta"], d["l1"], d["l2"],
                                 d["mu1"], d["e"])
        assert back["PQ"] == PQ and back["z"] == z


def test_dictionary_degenerate_corners():
    d = dictionary_rs(2, (0, 0, 1, 0), (0, 0, 0))
    assert d["alpha"] == 0 and d["beta"] == 0
    d = dictionary_pq(1, (0, 0, 0, 1, 1), (0, 0, 0, 0))
    assert d["mu1"] == 0  # q1 = q2 / lam kills the Whittaker charge


# ---------------------------------------------------------------------------
# intertwiners

def test_intertwiner_identity_map():
    V = one_dim_V(1, 2, (0, 0))
    source = calm_omega(V, 1, 2, 3)
    target = omega(1, 1, 6)
    rep = intertwiner_check(source, target, lambda lab: {lab[1]: ONE},
                            (-4, 4), [(0, k) for k in range(6)])
    assert rep.status == "pass"


def test_intertwiner_wrong_dictionary_fails():
    lam = Fraction(1)
    RS, y = (Fraction(2), Fraction(3), Fraction(4), Fraction(5)), (0, 0, 0)
    from hvcheck.induced import ind_lambda0
    d = dictionary_rs(lam, RS, y)
    om = omega(lam, d["alpha"], d["beta"])
    wrong = verma(d["h"] + 1, d["d"])  # h off by one
    tens = tensor(om, wrong.handle())
    base = {(0, ()): ONE}
    ind = ind_lambda0(lam, RS, y)
    rep = intertwiner_check(
        ind.handle(), tens,
        lambda mono: act_word(tens, mono_factors(mono), base),
        (-3, 3), graded_basis(ind, 2))
    assert rep.status == "fail"
    assert rep.witness["generator"] == "L(1)"


# ---------------------------------------------------------------------------
# basis transitions

def test_transition_diagonal_example():
    om = omega(1, 1, 1)
    vm = verma(Fraction(2), (ONE, 0, 0, 0))
    tens = tensor(om, vm.handle())
    image = act_word(tens, [L(0), L(0)], {(0, ()): ONE})
    assert image[(2, ())] == 1
    assert set(image) == {(2, ()), (1, ()), (0, ())}


def test_transition_checks_pass():
    om = omega(Fraction(2), Fraction(1), Fraction(-1))
    rep = basis_transition_check(om, verma(Fraction(-1), (1, 0, 0, 0)),
                                 Fraction(2), 4)
    assert rep.status == "pass"
    rep = basis_transition_check(om, whittaker(1, 2, 3, (1, 0, 0, 0)),
                                 Fraction(2), 4)
    assert rep.status == "pass"


def test_transition_degree_zero():
    om = omega(Fraction(3), 0, 0)
    rep = basis_transition_check(om, verma(0, (0, 0, 0, 0)), Fraction(3), 0)
    assert rep.status == "pass"
    assert rep.witness["monomials"] == 1


# ---------------------------------------------------------------------------
# component extraction

def _claim1_oracle(beta, parts):
    """Independent expansion: the component of m^k in sum_i beta (t-m)^i x u_i
    is (-1)^k beta sum_{i >= k} C(i, k) t^(i-k) x u_i."""
    from hvcheck.scalars import binomial
    n = len(parts) - 1
    comps = []
    for k in range(n + 1):
        vec = {}
        for i in range(k, n + 1):
            coef = Fraction(-1) ** k * beta * binomial(i, k)
            for mono, c in parts[i].items():
                add_into(vec, {(i - k, mono): coef * c})
        comps.append(vec)
    return comps


def test_vandermonde_extract_example():
    vm = verma(Fraction(-1), (Fraction(-1), 0, 0, 0))
    tens = tensor(omega(1, 0, 2), vm.handle())
    w = {(0, ()): ONE, (1, ()): ONE}
    comps = vandermonde_extract(tens, w, [5, 6], 1)
    assert comps[1] == {(0, ()): Fraction(-2)}
    assert comps[0] == {(0, ()): Fraction(2), (1, ()): Fraction(2)}


def test_vandermonde_extract_degree_zero():
    vm = verma(Fraction(-1), (Fraction(-1), 0, 0, 0))
    tens = tensor(omega(1, 0, 2), vm.handle())
    comps = vandermonde_extract(tens, {(0, ()): ONE}, [4], 1)
    assert comps == [{(0, ()): Fraction(2)}]


def test_vandermonde_duplicate_shifts():
    vm = verma(Fraction(-1), (Fraction(-1), 0, 0, 0))
    tens = tensor(omega(1, 0, 2), vm.handle())
    with pytest.raises(SingularSystem):
        vandermonde_extract(tens, {(0, ()): ONE, (1, ()): ONE}, [5, 5], 1)


def test_vandermonde_matches_oracle():
    rng = random.Random(23)
    beta = Fraction(2)
    vm = verma(Fraction(-1), (Fraction(-1), 0, 0, 0))
    tens = tensor(omega(1, 0, beta), vm.handle())
    basis = graded_basis(vm, 3)
    for _ in range(5):
        n = rng.randint(0, 3)
        parts = [{rng.choice(basis): rand_rat(rng, nonzero=True)}
                 for _ in range(n + 1)]
        w = {}
        for i, u in enumerate(parts):
            for mono, c in u.items():
                add_into(w, {(i, mono): c})
        bound = 4 + max(sum(e * abs(m) for _, m, e in mono)
                        for u in parts for mono in u)
        comps = vandermonde_extract(tens, w, list(range(bound, bound + n + 1)), 1)
        assert comps == _claim1_oracle(beta, parts)


# ---------------------------------------------------------------------------
# classification predicates

def test_classify_spec_examples():
    assert classify({"kind": "omega", "lambda": "1", "alpha": "0",
                     "beta": "0"})["omega_irreducible"] is False
    assert classify({"kind": "a_series", "lambda": "2", "alpha": "1",
                     "beta": "0"})["a_series_reducible"] is True
    out = classify({"kind": "ind_lambda0", "lambda": "1",
                    "RS": ["2", "3", "4", "5"], "y": ["0", "0", "0"]})
    assert out["ind_lambda0_irreducible"] is True
    out = classify({"kind": "ind_lambda1", "lambda": "1",
                    "PQ": ["1", "1", "1", "1", "1"], "z": ["1", "0", "0", "0"]})
    assert out["ind_lambda1_irreducible"] is False


def test_classify_k0_branches():
    k0 = lambda c0, c2: classify({"kind": "thm21_k0", "c0": c0,
                                  "c2": c2})["thm21_k0_condition"]
    assert k0("1", "0") is True
    assert k0("0", "0") is False
    assert k0("3", "1") is False      # integer ratio other than 1
    assert k0("1", "1") is True       # ratio 1 corresponds to excluded n = 0
    assert k0("1/2", "1") is True     # non-integer ratio
    assert k0("-2", "1") is False


def test_classify_rejects_malformed():
    with pytest.raises(ValueError):
        classify({"no": "kind"})
    with pytest.raises(ValueError):
        classify({"kind": "nonsense"})
