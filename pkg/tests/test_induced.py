import itertools
from fractions import Fraction

import pytest

from hvcheck.algebra import C, I, L, gens_in_range
from hvcheck.induced import (CharacterError, RewriteBudgetExceeded, SplitDatum,
                             graded_basis, ind_lambda0, ind_lambda1,
                             mono_degree, mono_from_string, mono_is_canonical,
                             mono_to_string, verma, whittaker)
from hvcheck.modules import commutator_defect

ONE = Fraction(1)
VBAR = {(): ONE}


def mono(text):
    return mono_from_string(text)


def test_verma_frozen_values():
    h, d0 = Fraction(-1), Fraction(-1)
    vm = verma(h, (d0, 0, 0, 0))
    assert vm.act(L(3), VBAR) == {}
    assert vm.act(L(0), VBAR) == {(): h}
    assert vm.act(I(0), VBAR) == {(): d0}
    # one commutation step: [L1, L-1] = -2 L0
    assert vm.act(L(1), {mono("L(-1)"): ONE}) == {(): -2 * h}
    # [L2, L-1] = -3 L1 then [L1, L-1] = -2 L0
    assert vm.act(L(2), {mono("L(-1)^2"): ONE}) == {(): 6 * h}
    # [I1, L-1] = -I0
    assert vm.act(I(1), {mono("L(-1)"): ONE}) == {(): -d0}
    # [L0, L-2] = -2 L-2, so the scalar drops by 2
    assert vm.act(L(0), {mono("L(-2)"): ONE}) == {mono("L(-2)"): h - 2}


def test_verma_central_tuple_indexing():
    vm = verma(Fraction(2), (Fraction(7), Fraction(-1), Fraction(4), Fraction(9)))
    assert vm.act(C(1), VBAR) == {(): Fraction(-1)}
    assert vm.act(C(2), {mono("L(-1)"): ONE}) == {mono("L(-1)"): Fraction(4)}
    assert vm.act(C(3), VBAR) == {(): Fraction(9)}
    assert vm.act(I(0), VBAR) == {(): Fraction(7)}


def test_whittaker_frozen_values():
    l1, l2, mu1, e0 = Fraction(1), Fraction(2), Fraction(3), Fraction(5)
    wh = whittaker(l1, l2, mu1, (e0, 0, 0, 0))
    assert wh.act(L(2), VBAR) == {(): l2}
    assert wh.act(L(5), VBAR) == {}
    # L3 (L0 vbar): commuting gives -3 L3 vbar + L0 L3 vbar = 0
    assert wh.act(L(3), {mono("L(0)"): ONE}) == {}
    assert wh.act(I(1), {mono("L(-1)"): ONE}) == {mono("L(-1)"): mu1, (): -e0}


def test_ind_lambda0_frozen_values():
    lam = Fraction(1)
    r1, r2, s0, s1 = Fraction(2), Fraction(3), Fraction(4), Fraction(5)
    l0 = ind_lambda0(lam, (r1, r2, s0, s1), (0, 0, 0))
    assert l0.act(L(1), VBAR) == {mono("L(0)"): lam, (): r1}
    assert l0.act(I(3), VBAR) == {(): lam ** 2 * s1}
    assert l0.act(I(0), VBAR) == {(): s0}
    # chi on L(3) - lam^3 L(0) is 2*lam*r2 - lam^2*r1
    got = l0.act(L(3), VBAR)
    assert got == {mono("L(0)"): lam ** 3, (): 2 * lam * r2 - lam ** 2 * r1}


def test_ind_lambda1_frozen_values():
    lam = Fraction(2)
    p2, p3, p4, q1, q2 = (Fraction(x) for x in (1, 2, 3, 4, 5))
    l1 = ind_lambda1(lam, (p2, p3, p4, q1, q2), (Fraction(7), 0, 0, 0))
    assert l1.act(L(2), VBAR) == {mono("L(1)"): lam, (): p2}
    assert l1.act(I(5), VBAR) == {(): lam ** 3 * q2}
    assert l1.act(I(0), VBAR) == {(): Fraction(7)}
    got = l1.act(L(5), VBAR)
    assert got == {mono("L(1)"): lam ** 4, (): 2 * lam * p4 - lam ** 2 * p3}


def test_graded_basis_examples():
    vm = verma(Fraction(-1), (Fraction(-1), 0, 0, 0))
    assert [mono_to_string(m) for m in graded_basis(vm, 2)] == \
        ["1", "I(-1)", "L(-1)"]
    assert graded_basis(vm, 0) == [()]
    l0 = ind_lambda0(1, (2, 3, 4, 5), (0, 0, 0))
    assert [mono_to_string(m) for m in graded_basis(l0, 1)] == ["1", "L(0)"]


def test_graded_basis_degree_bound():
    wh = whittaker(1, 2, 3, (1, 0, 0, 0))
    for m in graded_basis(wh, 4):
        assert mono_degree(m) <= 4
        assert mono_is_canonical(m)


def test_straightening_emits_canonical_monomials():
    l1 = ind_lambda1(Fraction(1, 2), (1, 2, 3, 4, 5), (1, 0, 0, 0))
    for m in graded_basis(l1, 3):
        for g in gens_in_range(-3, 3):
            for out in l1.act(g, {m: ONE}):
                assert mono_is_canonical(out), (g, m, out)


@pytest.mark.parametrize("make", [
    lambda: verma(Fraction(-1), (Fraction(-1), Fraction(1), Fraction(2), 0)),
    lambda: whittaker(Fraction(1), Fraction(2), Fraction(3), (Fraction(1), 0, 0, 0)),
    lambda: ind_lambda0(Fraction(2), (Fraction(2), Fraction(3), Fraction(4),
                                      Fraction(5)), (0, Fraction(1), 0)),
    lambda: ind_lambda1(Fraction(1, 2), (1, 2, 3, 4, 5), (1, 0, 0, 0)),
])
def test_defect_vanishes_on_presets(make):
    ind = make()
    handle = ind.handle()
    gens = gens_in_range(-3, 3)
    for m in graded_basis(ind, 3):
        v = {m: ONE}
        for x, y in itertools.combinations(gens, 2):
            assert commutator_defect(handle, x, y, v) == {}, (x, y, m)


def test_character_validation_rejects_corruption():
    lam = Fraction(1)
    r1, r2, s0, s1 = Fraction(2), Fraction(3), Fraction(4), Fraction(5)

    def is_free(gen):
        kind, m = gen
        return m <= 0 if kind == "L" else m < 0

    def bad_resolve(gen):
        kind, m = gen
        if is_free(gen):
            return ({gen: ONE}, Fraction(0))
        if kind == "L":
            # wrong interpolation: constant instead of the forced clause
            chi = r1 if m == 1 else r2
            return ({("L", 0): lam ** m}, chi)
        return ({}, s1 if m == 1 else lam ** (m - 1) * s1)

    with pytest.raises(CharacterError):
        SplitDatum("corrupt", is_free, bad_resolve, (0, 0, 0), s0,
                   top_free_L=0, top_free_I=-1)


def test_character_validation_rejects_leaky_subalgebra():
    # declaring only the mode-1 and mode-2 Virasoro generators to be in S
    # leaks [S, S] into the free mode-3 direction
    carriers = {("L", 1), ("L", 2)}

    def is_free(gen):
        return gen not in carriers

    def resolve(gen):
        if is_free(gen):
            return ({gen: ONE}, Fraction(0))
        return ({}, Fraction(0))

    with pytest.raises(CharacterError):
        SplitDatum("leaky", is_free, resolve, (0, 0, 0), None,
                   top_free_L=None, top_free_I=None, check_modes=3)


def test_rewrite_budget_guard():
    vm = verma(Fraction(1), (0, 0, 0, 0), budget=3)
    with pytest.raises(RewriteBudgetExceeded):
        vm.act(L(4), {mono("I(-3) L(-2)^2"): ONE})


def test_local_nilpotency_on_verma():
    vm = verma(Fraction(-2), (Fraction(1), 0, 0, 0))
    for m in graded_basis(vm, 4):
        deg = mono_degree(m)
        for mode in range(1, 5):
            for g in (L(mode), I(mode)):
                v = {m: ONE}
                for _ in range(deg // mode + 1):
                    v = vm.act(g, v)
                assert v == {}, (g, m)


def test_monomial_text_round_trip():
    for text in ["1", "I(-2)^2 I(-1) L(-1)^3 L(0)", "L(-4)", "I(-1) L(1)"]:
        assert mono_to_string(mono_from_string(text)) == text
    with pytest.raises(ValueError):
        mono_from_string("L(-1) I(-1)")  # blocks out of order
    with pytest.raises(ValueError):
        mono_from_string("L(-1) L(-2)")  # modes out of order
    with pytest.raises(ValueError):
        mono_from_string("C(1)")


def test_degree_convention():
    assert mono_degree(()) == 0
    assert mono_degree(mono("L(0)")) == 1
    assert mono_degree(mono("L(1)")) == 2
    assert mono_degree(mono("I(-2)^2 L(-1)")) == 8


def test_memo_is_consistent():
    vm = verma(Fraction(-1), (Fraction(2), 0, 0, 0))
    v = {mono("L(-2) L(-1)"): ONE}
    first = vm.act(L(2), v)
    second = vm.act(L(2), v)
    assert first == second
    assert first is not second or first == {}  # results are fresh dicts
