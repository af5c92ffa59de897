import itertools
import random
from fractions import Fraction

import pytest

from hvcheck.algebra import C, I, L, gens_in_range
from hvcheck.induced import verma
from hvcheck.modules import (LabelSchemeError, act, act_elem, act_word,
                             commutator_defect, invariance_check, span_closure,
                             tensor)
from hvcheck.zoo import a_series, calm_a, omega, two_dim_fixture

ONE = Fraction(1)


def test_act_examples():
    om = omega(2, 1, 3)
    assert act(om, L(1), {0: ONE}) == {1: Fraction(2), 0: Fraction(-2)}
    assert act(om, I(2), {1: ONE}) == {1: Fraction(12), 0: Fraction(-24)}
    assert act(om, C(1), {5: Fraction(7)}) == {}


def test_act_elem_examples():
    om = omega(1, 0, 0)
    assert act_elem(om, {}, {0: ONE}) == {}
    assert act_elem(om, {L(0): Fraction(2)}, {0: ONE}) == {1: Fraction(2)}
    om2 = omega(1, 0, 1)
    assert act_elem(om2, {L(1): ONE, I(1): ONE}, {0: ONE}) == {1: ONE, 0: ONE}


def test_label_scheme_mismatch():
    om = omega(1, 0, 0)
    with pytest.raises(LabelSchemeError):
        act(om, L(1), {-2: ONE})


def test_defect_zero_on_polynomial_family():
    om = omega(Fraction(2), Fraction(1), Fraction(3))
    f = {2: ONE, 0: Fraction(1, 3)}
    assert commutator_defect(om, L(1), I(-1), f) == {}
    for x, y in itertools.combinations(gens_in_range(-3, 3), 2):
        assert commutator_defect(om, x, y, f) == {}


def test_defect_zero_with_charge_terms():
    # the mode-opposite L-pair produces a charge contribution that the
    # central character must reproduce exactly
    vm = verma(Fraction(-1), (Fraction(-1), Fraction(2), Fraction(3), Fraction(5)))
    h = vm.handle()
    v = {(("L", -1, 1),): ONE}
    assert commutator_defect(h, L(2), L(-2), v) == {}
    assert commutator_defect(h, L(3), I(-3), v) == {}
    assert commutator_defect(h, I(4), I(-4), v) == {}


def test_tensor_central_characters_add():
    om = omega(1, 1, 1)
    vm = verma(Fraction(2), (Fraction(1), Fraction(4), Fraction(5), Fraction(6)))
    tens = tensor(om, vm.handle())
    assert tens.central["C1"] == 4
    assert tens.central["C2"] == 5
    assert tens.central["C3"] == 6
    assert tens.central["I0"] == 1 + 1  # beta + d0


def test_tensor_action_example():
    om = omega(1, 1, 1)
    vm = verma(Fraction(2), (Fraction(0), 0, 0, 0))
    tens = tensor(om, vm.handle())
    base = {(0, ()): ONE}
    # the highest vector is killed by the positive mode, so only the
    # polynomial factor moves: L(1)(1 x v) = (t - 1) x v
    assert act(tens, L(1), base) == {(1, ()): ONE, (0, ()): Fraction(-1)}


def test_tensor_character_value_matches_dictionary_fixture():
    om = omega(1, -1, 5)
    vm = verma(Fraction(-1), (Fraction(-1), 0, 0, 0))
    tens = tensor(om, vm.handle())
    base = {(0, ()): ONE}
    got = act_elem(tens, {L(1): ONE, L(0): Fraction(-1)}, base)
    assert got == {(0, ()): Fraction(2)}


def test_tensor_associativity_up_to_rebracketing():
    a = omega(1, 1, 0)
    b = a_series(Fraction(1, 2), 1, 2)
    c = omega(2, 0, 3)
    left = tensor(tensor(a, b), c)
    right = tensor(a, tensor(b, c))

    def reassoc(vec):
        return {(x, (y, z)): co for ((x, y), z), co in vec.items()}

    v_left = {((0, 1), 0): ONE, ((2, -1), 1): Fraction(1, 2)}
    for g in gens_in_range(-3, 3):
        assert reassoc(act(left, g, v_left)) == act(right, g, reassoc(v_left))


def test_span_closure_dimensions():
    om = omega(1, 0, 0)
    ambient = lambda k: k <= 3
    basis = span_closure(om, [{1: ONE}], (-4, 4), ambient, max_dim=10)
    assert basis.dim == 3
    assert basis.leaked  # degree-4 components were clipped
    basis = span_closure(om, [{0: ONE}], (-4, 4), ambient, max_dim=10)
    assert basis.dim == 4
    basis = span_closure(om, [{}], (-4, 4), ambient, max_dim=10)
    assert basis.dim == 0


def test_span_closure_seed_order_invariance_and_idempotence():
    om = omega(1, 2, 1)
    ambient = lambda k: k <= 4
    seeds = [{0: ONE, 1: Fraction(2)}, {2: ONE}, {1: ONE}]
    b1 = span_closure(om, seeds, (-2, 2), ambient, max_dim=12)
    b2 = span_closure(om, list(reversed(seeds)), (-2, 2), ambient, max_dim=12)
    assert b1.row_list() == b2.row_list()
    b3 = span_closure(om, b1.row_list(), (-2, 2), ambient, max_dim=12)
    assert b3.row_list() == b1.row_list()


def test_invariance_examples():
    no_constant = lambda vec: all(k != 0 for k in vec)
    om = omega(Fraction(3), 0, 0)
    rep = invariance_check(om, no_constant,
                           [{1: ONE}, {2: ONE}, {3: ONE}], (-4, 4))
    assert rep.status == "pass"

    a0 = a_series(0, 0, 0)
    rep = invariance_check(a0, lambda vec: all(n == 0 for n in vec),
                           [{0: ONE}], (-4, 4))
    assert rep.status == "pass"

    om_bad = omega(1, 1, 0)
    rep = invariance_check(om_bad, no_constant, [{1: ONE}], (-1, 1))
    assert rep.status == "fail"
    # L(-1) t = (t+1)^2 has constant term 1
    assert rep.witness["generator"] == "L(-1)"


def test_invariance_rejects_bad_samples():
    om = omega(1, 0, 0)
    with pytest.raises(ValueError):
        invariance_check(om, lambda vec: all(k != 0 for k in vec),
                         [{0: ONE}], (-1, 1))


def test_weight_module_blocks():
    a = a_series(Fraction(1, 2), 2, 5)
    assert a.is_weight
    for n in (-2, 0, 3):
        for m in range(-4, 5):
            for g in (L(m), I(m)):
                assert set(act(a, g, {n: ONE})) <= {m + n}
    ca = calm_a(two_dim_fixture(), 1, 2, 3)
    assert ca.is_weight
    for vi in (0, 1):
        for n in (-2, 0, 3):
            for m in range(-4, 5):
                for g in (L(m), I(m)):
                    image = act(ca, g, {(vi, n): ONE})
                    assert {lab[1] for lab in image} <= {m + n}


def test_act_word_order():
    om = omega(1, 0, 0)
    # L(0) then L(1): rightmost factor applies first
    v = act_word(om, [L(1), L(0)], {0: ONE})
    assert v == act(om, L(1), act(om, L(0), {0: ONE}))


def test_defect_randomized_across_families():
    rng = random.Random(3)
    om = omega(Fraction(1, 2), Fraction(-2), Fraction(3))
    for _ in range(10):
        v = {rng.randint(0, 4): Fraction(rng.randint(-4, 4), rng.randint(1, 3))
             for _ in range(2)}
        x = rng.choice(gens_in_range(-4, 4))
        y = rng.choice(gens_in_range(-4, 4))
        assert commutator_defect(om, x, y, v) == {}
