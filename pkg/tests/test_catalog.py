import random
from fractions import Fraction

import pytest

from hvcheck.catalog import (GlobalConfig, SpecError, build_hbar, build_module,
                             run_check, to_jsonable)
from hvcheck.modules import AmbientTooLarge, act, span_closure
from hvcheck.report import CheckReport
from hvcheck.zoo import omega

CFG = GlobalConfig(mode_range=(-4, 4), degree_cap=4, samples=10, seed=0,
                   rewrite_budget=10 ** 6)


def rng():
    return random.Random("catalog-test")


TWO_DIM_MATRICES = {
    "type": "calM_omega",
    "V": {"shape": [1, 0], "dim": 2,
          "matrices": {"L0": [["0", "1"], ["0", "0"]],
                       "L1": [["0", "0"], ["0", "0"]],
                       "I0": [["2", "0"], ["0", "2"]],
                       "I1": [["0", "0"], ["0", "0"]]}},
    "params": {"lambda": "1", "alpha": "2", "beta": "3"},
}


def test_explicit_matrix_config_round_trip():
    built = build_module(TWO_DIM_MATRICES, "module", 10 ** 6)
    assert built.handle.central["I0"] == 6  # beta * scalar I(0)
    rep = run_check("prop2.2", {"module": TWO_DIM_MATRICES}, CFG, rng())
    assert rep.status == "pass"


def test_matrix_config_rejects_bad_relations():
    cfg = {"shape": [1, 0], "dim": 2,
           "matrices": {"L0": [["0", "1"], ["0", "0"]],
                        "L1": [["1", "0"], ["0", "1"]],
                        "I0": [["0", "0"], ["0", "0"]],
                        "I1": [["0", "0"], ["0", "0"]]}}
    with pytest.raises(SpecError) as err:
        build_hbar(cfg, "params.V")
    assert err.value.path == "params.V.matrices"


def test_one_dim_config():
    V = build_hbar({"sigma": "1", "tau": "2", "shape": [0, 0]}, "params.V")
    assert V.dim == 1 and V.r_prime == 0


def test_unknown_module_type_path():
    with pytest.raises(SpecError) as err:
        build_module({"type": "mystery"}, "params.module", 10 ** 6)
    assert err.value.path == "params.module.type"


def test_ambient_too_large():
    om = omega(1, 1, 1)
    wide = {k: Fraction(1) for k in range(0, 70)}
    with pytest.raises(AmbientTooLarge):
        span_closure(om, [wide], (-4, 4), lambda k: True, max_dim=1)


def test_report_fail_requires_witness():
    with pytest.raises(ValueError):
        CheckReport("x", {}, "fail", None)
    with pytest.raises(ValueError):
        CheckReport("x", {}, "flaky")


def test_to_jsonable_normalizes():
    payload = {"a": Fraction(3, 2), "b": [(1, Fraction(-1))], 2: "x"}
    assert to_jsonable(payload) == {"a": "3/2", "b": [[1, "-1"]], "2": "x"}


def test_gamma_twist_config_rejects_charged_base():
    cfg = {"type": "gamma_twist",
           "base": {"type": "verma", "h": "0", "d": ["0", "1", "0", "0"]},
           "gamma": "1"}
    with pytest.raises(SpecError):
        build_module(cfg, "module", 10 ** 6)


def test_run_check_turns_exceptions_into_error_reports():
    rep = run_check("prop2.2", {"module": {"type": "omega", "lambda": "0",
                                           "alpha": "0", "beta": "0"}},
                    CFG, rng())
    assert rep.status == "error"
    assert "lambda" in rep.witness["error"]
