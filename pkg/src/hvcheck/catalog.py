"""Named check catalog, module configuration records, and suite running.

Module configuration records (all rationals as "p/q" strings):

    {"type": "omega", "lambda": "2", "alpha": "1", "beta": "3"}
    {"type": "a_series", "lambda": "1/2", "alpha": "2", "beta": "5"}
    {"type": "verma", "h": "-1", "d": ["-1", "0", "0", "0"]}
    {"type": "whittaker", "l1": "1", "l2": "2", "mu1": "3", "e": ["1","0","0","0"]}
    {"type": "ind_lambda0", "lambda": "1", "RS": ["2","3","4","5"], "y": ["0","0","0"]}
    {"type": "ind_lambda1", "lambda": "1", "PQ": ["1","2","3","4","5"], "z": ["1","0","0","0"]}
    {"type": "calM_omega", "V": <V record>, "params": {"lambda": ..., "alpha": ..., "beta": ...}}
    {"type": "calM_A",     "V": <V record>, "params": {...}}
    {"type": "tensor", "left": <module record>, "right": <module record>}
    {"type": "gamma_twist", "base": <module record>, "gamma": "1 + 2*t^-1"}

    <V record>: {"sigma": "1", "tau": "2", "shape": [0, 0]}
              | {"preset": "two_dim"}
              | {"shape": [r, d], "dim": n, "matrices": {"L0": [["0","1"],...], ...}}

The catalog is a closed registry: every check is addressable by a stable
name, takes a JSON params record, and returns a CheckReport.  Sampling is
driven by a seeded RNG so identical suite + seed reproduce identical
reports.
"""

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .algebra import C, I, L, bracket, check_jacobi, gen_to_string, gens_in_range
from .induced import (graded_basis, ind_lambda0, ind_lambda1, mono_degree,
                      mono_factors, mono_to_string, verma, whittaker)
from .modules import SubspaceBasis, act, act_elem, act_word, tensor
from .polynomials import poly_from_string
from .probes import (TOp, basis_transition_check, classify, dictionary_pq,
                     dictionary_pq_inv, dictionary_rs, dictionary_rs_inv,
                     intertwiner_check, nilpotency_probe, t_apply,
                     vandermonde_extract, weighting_calm_check,
                     weighting_check)
from .report import CheckReport
from .scalars import rat
from .support import add_into, normalized, scale, sub
from .zoo import (HbarModule, a_series, calm_a, calm_omega, gamma_twist,
                  omega, one_dim_V, two_dim_fixture)

DEFAULT_GLOBAL = {
    "mode_range": [-4, 4],
    "degree_cap": 4,
    "samples": 25,
    "seed": 0,
    "rewrite_budget": 10 ** 6,
}


class SpecError(ValueError):
    """Schema violation, reported with the JSON path of the offending field."""

    def __init__(self, path, message):
        self.path = path
        super().__init__("%s: %s" % (path, message))


@dataclass
class GlobalConfig:
    mode_range: tuple
    degree_cap: int
    samples: int
    seed: int
    rewrite_budget: int


def to_jsonable(x):
    """Normalize report payloads: rationals to 'p/q' strings, tuples to lists."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    return x


# ---------------------------------------------------------------------------
# config parsing helpers

def _need(cfg, key, path):
    if not isinstance(cfg, dict):
        raise SpecError(path, "expected an object")
    if key not in cfg:
        raise SpecError("%s.%s" % (path, key), "missing required key")
    return cfg[key]


def _rat_of(cfg, key, path):
    try:
        return rat(_need(cfg, key, path))
    except (ValueError, TypeError) as exc:
        raise SpecError("%s.%s" % (path, key), str(exc)) from exc


def _rat_list(cfg, key, path, n):
    val = _need(cfg, key, path)
    if not isinstance(val, (list, tuple)) or len(val) != n:
        raise SpecError("%s.%s" % (path, key), "expected a list of %d rationals" % n)
    try:
        return tuple(rat(x) for x in val)
    except (ValueError, TypeError) as exc:
        raise SpecError("%s.%s" % (path, key), str(exc)) from exc


def build_hbar(cfg, path):
    if not isinstance(cfg, dict):
        raise SpecError(path, "expected a coefficient-module record")
    if cfg.get("preset") == "two_dim":
        return two_dim_fixture()
    if "sigma" in cfg:
        shape = cfg.get("shape", [0, 0])
        try:
            return one_dim_V(rat(cfg["sigma"]), rat(cfg.get("tau", 0)),
                             (int(shape[0]), int(shape[1])))
        except ValueError as exc:
            raise SpecError(path, str(exc)) from exc
    shape = _need(cfg, "shape", path)
    dim = _need(cfg, "dim", path)
    raw = _need(cfg, "matrices", path)
    mats = {}
    for key, rows in raw.items():
        kind, idx = key[0], int(key[1:])
        mats[(kind, idx)] = rows
    try:
        return HbarModule((int(shape[0]), int(shape[1])), int(dim), mats)
    except ValueError as exc:
        raise SpecError("%s.matrices" % path, str(exc)) from exc


class Built:
    """A constructed module plus its deterministic sample-vector source."""

    def __init__(self, handle, sampler, induced=None):
        self.handle = handle
        self.sampler = sampler
        self.induced = induced


def _rand_rat(rng, nonzero=False, span=5):
    num = rng.randint(-span, span)
    while nonzero and num == 0:
        num = rng.randint(-span, span)
    return Fraction(num, rng.randint(1, 3))


def _dict_sampler(label_pool):
    def sample(rng, _cap):
        labels = rng.sample(label_pool, min(len(label_pool), rng.randint(1, 2)))
        return {lab: _rand_rat(rng, nonzero=True) for lab in labels}
    return sample


def build_module(cfg, path, budget):
    mtype = _need(cfg, "type", path)
    if mtype == "omega":
        lam = _rat_of(cfg, "lambda", path)
        handle = omega(lam, _rat_of(cfg, "alpha", path), _rat_of(cfg, "beta", path))

        def sample(rng, cap):
            return {rng.randint(0, cap): _rand_rat(rng, nonzero=True)
                    for _ in range(rng.randint(1, 2))}
        return Built(handle, sample)

    if mtype == "a_series":
        handle = a_series(_rat_of(cfg, "lambda", path), _rat_of(cfg, "alpha", path),
                          _rat_of(cfg, "beta", path))

        def sample(rng, cap):
            return {rng.randint(-cap, cap): _rand_rat(rng, nonzero=True)
                    for _ in range(rng.randint(1, 2))}
        return Built(handle, sample)

    if mtype in ("calM_omega", "calM_A"):
        V = build_hbar(_need(cfg, "V", path), "%s.V" % path)
        sub_path = "%s.params" % path if "params" in cfg else path
        sub_cfg = cfg.get("params", cfg)
        lam = _rat_of(sub_cfg, "lambda", sub_path)
        alpha = _rat_of(sub_cfg, "alpha", sub_path)
        beta = _rat_of(sub_cfg, "beta", sub_path)
        if mtype == "calM_omega":
            handle = calm_omega(V, lam, alpha, beta)

            def sample(rng, cap):
                return {(rng.randrange(V.dim), rng.randint(0, cap)):
                        _rand_rat(rng, nonzero=True)
                        for _ in range(rng.randint(1, 2))}
        else:
            handle = calm_a(V, lam, alpha, beta)

            def sample(rng, cap):
                return {(rng.randrange(V.dim), rng.randint(-cap, cap)):
                        _rand_rat(rng, nonzero=True)
                        for _ in range(rng.randint(1, 2))}
        return Built(handle, sample)

    if mtype == "verma":
        ind = verma(_rat_of(cfg, "h", path), _rat_list(cfg, "d", path, 4),
                    budget=budget)
    elif mtype == "whittaker":
        ind = whittaker(_rat_of(cfg, "l1", path), _rat_of(cfg, "l2", path),
                        _rat_of(cfg, "mu1", path), _rat_list(cfg, "e", path, 4),
                        budget=budget)
    elif mtype == "ind_lambda0":
        ind = ind_lambda0(_rat_of(cfg, "lambda", path), _rat_list(cfg, "RS", path, 4),
                          _rat_list(cfg, "y", path, 3), budget=budget)
    elif mtype == "ind_lambda1":
        ind = ind_lambda1(_rat_of(cfg, "lambda", path), _rat_list(cfg, "PQ", path, 5),
                          _rat_list(cfg, "z", path, 4), budget=budget)
    elif mtype == "tensor":
        left = build_module(_need(cfg, "left", path), "%s.left" % path, budget)
        right = build_module(_need(cfg, "right", path), "%s.right" % path, budget)
        handle = tensor(left.handle, right.handle)

        def sample(rng, cap):
            out = {}
            for la, ca in left.sampler(rng, cap).items():
                for lb, cb in right.sampler(rng, cap).items():
                    add_into(out, {(la, lb): ca * cb})
            return out
        return Built(handle, sample)
    elif mtype == "gamma_twist":
        base = build_module(_need(cfg, "base", path), "%s.base" % path, budget)
        gamma_text = _need(cfg, "gamma", path)
        try:
            gamma = poly_from_string(gamma_text, laurent=True)
        except ValueError as exc:
            raise SpecError("%s.gamma" % path, str(exc)) from exc
        try:
            handle = gamma_twist(base.handle, gamma)
        except ValueError as exc:
            raise SpecError(path, str(exc)) from exc
        return Built(handle, base.sampler)
    else:
        raise SpecError("%s.type" % path, "unknown module type %r" % (mtype,))

    basis_cache = {}

    def sample(rng, cap):
        if cap not in basis_cache:
            basis_cache[cap] = graded_basis(ind, cap)
        return _dict_sampler(basis_cache[cap])(rng, cap)

    return Built(ind.handle(), sample, induced=ind)


# ---------------------------------------------------------------------------
# check runners

def _run_axioms(params, cfg, rng):
    modes = params.get("modes", [-6, 6])
    shapes = params.get("shapes",
                        [[r, d] for d in (0, 1) for r in range(0, 4)])
    rep = check_jacobi(int(modes[0]), int(modes[1]),
                       shapes=[tuple(s) for s in shapes])
    rep.params = {"modes": list(modes), "shapes": [list(s) for s in shapes]}
    return rep


def _run_prop22(params, cfg, rng):
    mcfg = _need(params, "module", "params")
    built = build_module(mcfg, "params.module", cfg.rewrite_budget)
    lo, hi = params.get("mode_range", cfg.mode_range)
    count = int(params.get("samples", cfg.samples))
    cap = int(params.get("degree_cap", cfg.degree_cap))
    echo = {"module": mcfg, "mode_range": [lo, hi], "samples": count}
    gens = gens_in_range(lo, hi)
    module = built.handle
    checked = 0
    for _ in range(count):
        v = built.sampler(rng, cap)
        if not v:
            continue
        images = {g: act(module, g, v) for g in gens}
        for i, x in enumerate(gens):
            for y in gens[i + 1:]:
                defect = act_elem(module, bracket(x, y), v)
                defect = sub(defect, act(module, x, images[y]))
                add_into(defect, act(module, y, images[x]))
                if defect:
                    return CheckReport("prop2.2", echo, "fail", {
                        "x": gen_to_string(x), "y": gen_to_string(y),
                        "vector": module.vec_json(v),
                        "defect": module.vec_json(defect),
                    })
                checked += 1
    return CheckReport("prop2.2", echo, "pass",
                       {"pairs_checked": checked, "module": module.name})


def _run_lemma42(params, cfg, rng):
    cap = int(params.get("degree_cap", 5))
    lo, hi = params.get("mode_range", cfg.mode_range)
    if "lambda" in params:
        fixtures = [(rat(params["lambda"]), rat(params.get("alpha", 0)),
                     rat(params.get("beta", 0)))]
    else:
        count = int(params.get("count", 20))
        fixtures = [(_rand_rat(rng, nonzero=True), _rand_rat(rng), _rand_rat(rng))
                    for _ in range(count)]
    echo = {"fixtures": len(fixtures), "mode_range": [lo, hi], "degree_cap": cap}
    for lam, alpha, beta in fixtures:
        polys = [{rng.randint(0, cap): _rand_rat(rng, nonzero=True)
                  for _ in range(rng.randint(1, 3))} for _ in range(5)]
        polys.append({k: Fraction(1) for k in range(cap + 1)})
        rep = weighting_check(lam, alpha, beta, (lo, hi), polys,
                              params={"lambda": str(lam), "alpha": str(alpha),
                                      "beta": str(beta)})
        if not rep.passed:
            rep.params.update(echo)
            return rep
    return CheckReport("lemma4.2", echo, "pass", {"fixtures": len(fixtures)})


def _run_prop43(params, cfg, rng):
    lo, hi = params.get("mode_range", [-3, 3])
    cap = int(params.get("degree_cap", cfg.degree_cap))
    cases = []
    if "V" in params:
        V = build_hbar(params["V"], "params.V")
        cases.append((V, rat(params["lambda"]), rat(params.get("alpha", 0)),
                      rat(params.get("beta", 0))))
    else:
        count = int(params.get("count", 10))
        for k in range(count):
            d = k % 2
            V = one_dim_V(_rand_rat(rng), _rand_rat(rng) if d == 0 else 0, (0, d))
            cases.append((V, _rand_rat(rng, nonzero=True), _rand_rat(rng),
                          _rand_rat(rng)))
        cases.append((two_dim_fixture(), _rand_rat(rng, nonzero=True),
                      _rand_rat(rng), _rand_rat(rng)))
    echo = {"cases": len(cases), "mode_range": [lo, hi], "degree_cap": cap}
    for V, lam, alpha, beta in cases:
        rep = weighting_calm_check(V, lam, alpha, beta, (lo, hi), cap,
                                   params={"dim": V.dim, "shape": list(V.shape),
                                           "lambda": str(lam), "alpha": str(alpha),
                                           "beta": str(beta)})
        if not rep.passed:
            rep.params.update(echo)
            return rep
    return CheckReport("prop4.3", echo, "pass", {"cases": len(cases)})


def _remark23_case(lam, alpha, beta, sigma, tau, d, mode_range, cap):
    if d == 1:
        tau = Fraction(0)
    V = one_dim_V(sigma, tau, (0, d))
    source = calm_omega(V, lam, alpha, beta)
    target_beta = beta * tau if d == 0 else Fraction(0)
    target = omega(lam, alpha - sigma, target_beta)
    labels = [(0, k) for k in range(cap + 1)]
    return intertwiner_check(
        source, target, lambda lab: {lab[1]: Fraction(1)}, mode_range, labels,
        name="remark2.3",
        params={"lambda": str(lam), "alpha": str(alpha), "beta": str(beta),
                "sigma": str(sigma), "tau": str(tau), "d": d})


def _run_remark23(params, cfg, rng):
    lo, hi = params.get("mode_range", cfg.mode_range)
    cap = int(params.get("degree_cap", 5))
    if "sigma" in params:
        cases = [(rat(params["lambda"]), rat(params.get("alpha", 0)),
                  rat(params.get("beta", 0)), rat(params["sigma"]),
                  rat(params.get("tau", 0)), int(params.get("d", 0)))]
    else:
        count = int(params.get("count", 6))
        cases = []
        for k in range(count):
            cases.append((_rand_rat(rng, nonzero=True), _rand_rat(rng),
                          _rand_rat(rng), _rand_rat(rng), _rand_rat(rng), k % 2))
    echo = {"cases": len(cases), "mode_range": [lo, hi], "degree_cap": cap}
    for lam, alpha, beta, sigma, tau, d in cases:
        rep = _remark23_case(lam, alpha, beta, sigma, tau, d, (lo, hi), cap)
        if not rep.passed:
            rep.params.update(echo)
            return rep
    return CheckReport("remark2.3", echo, "pass", {"cases": len(cases)})


def _thm62_fixture(lam, RS, y, budget):
    """Character clauses, intertwiner and dictionary round-trip for one
    (lambda, RS, y) fixture; returns a failing CheckReport or None."""
    lam = rat(lam)
    RS = tuple(rat(x) for x in RS)
    y = tuple(rat(x) for x in y)
    fx = {"lambda": str(lam), "RS": [str(x) for x in RS], "y": [str(x) for x in y]}
    dic = dictionary_rs(lam, RS, y)
    back = dictionary_rs_inv(lam, dic["alpha"], dic["beta"], dic["h"], dic["d"])
    if back["RS"] != RS or back["y"] != y:
        return CheckReport("thm6.2", fx, "fail",
                           {"stage": "dictionary round-trip",
                            "recovered": to_jsonable(back)})
    om = omega(lam, dic["alpha"], dic["beta"])
    vm = verma(dic["h"], dic["d"], budget=budget)
    tens = tensor(om, vm.handle())
    base = {(0, ()): Fraction(1)}
    r1, r2, s0, s1 = RS
    for m in range(1, 7):
        want = (r1 if m == 1 else r2 if m == 2 else
                lam ** (m - 2) * (m - 1) * r2 - lam ** (m - 1) * (m - 2) * r1)
        got = act_elem(tens, {L(m): Fraction(1), L(0): -lam ** m}, base)
        if got != normalized(scale(want, base)):
            return CheckReport("thm6.2", fx, "fail",
                               {"stage": "L-clause", "m": m,
                                "got": tens.vec_json(got), "want": str(want)})
    for m in range(0, 7):
        want = s0 if m == 0 else (s1 if m == 1 else lam ** (m - 1) * s1)
        got = act(tens, I(m), base)
        if got != normalized(scale(want, base)):
            return CheckReport("thm6.2", fx, "fail",
                               {"stage": "I-clause", "m": m,
                                "got": tens.vec_json(got), "want": str(want)})
    for i in range(1, 4):
        got = act(tens, C(i), base)
        if got != normalized(scale(y[i - 1], base)):
            return CheckReport("thm6.2", fx, "fail",
                               {"stage": "charge", "i": i,
                                "got": tens.vec_json(got), "want": str(y[i - 1])})
    ind = ind_lambda0(lam, RS, y, budget=budget)
    labels = graded_basis(ind, 3)
    rep = intertwiner_check(
        ind.handle(), tens,
        lambda mono: act_word(tens, mono_factors(mono), base),
        (-3, 3), labels, name="thm6.2", params=fx)
    return None if rep.passed else rep


def _run_thm62(params, cfg, rng):
    if "RS" in params:
        fixtures = [(params["lambda"], params["RS"], params["y"])]
    else:
        count = int(params.get("count", 10))
        fixtures = []
        for _ in range(count):
            fixtures.append((_rand_rat(rng, nonzero=True),
                             [_rand_rat(rng) for _ in range(4)],
                             [_rand_rat(rng), _rand_rat(rng), 0]))
    echo = {"fixtures": len(fixtures)}
    for lam, RS, y in fixtures:
        bad = _thm62_fixture(lam, RS, y, cfg.rewrite_budget)
        if bad is not None:
            bad.params.update(echo)
            return bad
    return CheckReport("thm6.2", echo, "pass", {"fixtures": len(fixtures)})


def _thm63_fixture(lam, PQ, z, budget):
    lam = rat(lam)
    PQ = tuple(rat(x) for x in PQ)
    z = tuple(rat(x) for x in z)
    fx = {"lambda": str(lam), "PQ": [str(x) for x in PQ], "z": [str(x) for x in z]}
    dic = dictionary_pq(lam, PQ, z)
    back = dictionary_pq_inv(lam, dic["alpha"], dic["beta"], dic["l1"],
                             dic["l2"], dic["mu1"], dic["e"])
    if back["PQ"] != PQ or back["z"] != z:
        return CheckReport("thm6.3", fx, "fail",
                           {"stage": "dictionary round-trip",
                            "recovered": to_jsonable(back)})
    om = omega(lam, dic["alpha"], dic["beta"])
    wh = whittaker(dic["l1"], dic["l2"], dic["mu1"], dic["e"], budget=budget)
    tens = tensor(om, wh.handle())
    base = {(0, ()): Fraction(1)}
    p2, p3, p4, q1, q2 = PQ
    for m in range(2, 7):
        want = (p2 if m == 2 else p3 if m == 3 else p4 if m == 4 else
                lam ** (m - 4) * (m - 3) * p4 - lam ** (m - 3) * (m - 4) * p3)
        got = act_elem(tens, {L(m): Fraction(1), L(1): -lam ** (m - 1)}, base)
        if got != normalized(scale(want, base)):
            return CheckReport("thm6.3", fx, "fail",
                               {"stage": "L-clause", "m": m,
                                "got": tens.vec_json(got), "want": str(want)})
    for m in range(0, 7):
        if m == 0:
            want = z[0]
        else:
            want = q1 if m == 1 else (q2 if m == 2 else lam ** (m - 2) * q2)
        got = act(tens, I(m), base)
        if got != normalized(scale(want, base)):
            return CheckReport("thm6.3", fx, "fail",
                               {"stage": "I-clause", "m": m,
                                "got": tens.vec_json(got), "want": str(want)})
    for i in range(1, 4):
        got = act(tens, C(i), base)
        if got != normalized(scale(z[i], base)):
            return CheckReport("thm6.3", fx, "fail",
                               {"stage": "charge", "i": i,
                                "got": tens.vec_json(got), "want": str(z[i])})
    ind = ind_lambda1(lam, PQ, z, budget=budget)
    labels = graded_basis(ind, 3)
    rep = intertwiner_check(
        ind.handle(), tens,
        lambda mono: act_word(tens, mono_factors(mono), base),
        (-3, 3), labels, name="thm6.3", params=fx)
    return None if rep.passed else rep


def _run_thm63(params, cfg, rng):
    if "PQ" in params:
        fixtures = [(params["lambda"], params["PQ"], params["z"])]
    else:
        count = int(params.get("count", 10))
        fixtures = []
        for _ in range(count):
            fixtures.append((_rand_rat(rng, nonzero=True),
                             [_rand_rat(rng) for _ in range(5)],
                             [_rand_rat(rng), _rand_rat(rng), _rand_rat(rng), 0]))
    echo = {"fixtures": len(fixtures)}
    for lam, PQ, z in fixtures:
        bad = _thm63_fixture(lam, PQ, z, cfg.rewrite_budget)
        if bad is not None:
            bad.params.update(echo)
            return bad
    return CheckReport("thm6.3", echo, "pass", {"fixtures": len(fixtures)})


def _run_lemma61(params, cfg, rng):
    cap = int(params.get("degree_cap", cfg.degree_cap))
    count = int(params.get("count", 5))
    presets = params.get("presets", ["verma", "whittaker"])
    echo = {"count": count, "degree_cap": cap, "presets": list(presets)}
    for _ in range(count):
        lam = _rand_rat(rng, nonzero=True)
        alpha, beta = _rand_rat(rng), _rand_rat(rng)
        om = omega(lam, alpha, beta)
        for preset in presets:
            if preset == "verma":
                ind = verma(_rand_rat(rng), [_rand_rat(rng) for _ in range(4)],
                            budget=cfg.rewrite_budget)
            else:
                ind = whittaker(_rand_rat(rng), _rand_rat(rng), _rand_rat(rng),
                                [_rand_rat(rng) for _ in range(4)],
                                budget=cfg.rewrite_budget)
            rep = basis_transition_check(om, ind, lam, cap,
                                         params={"preset": preset,
                                                 "lambda": str(lam)})
            if not rep.passed:
                rep.params.update(echo)
                return rep
    return CheckReport("lemma6.1", echo, "pass", {"count": count})


def _default_tensor(budget, lam="1", alpha="0", beta="2"):
    om = omega(rat(lam), rat(alpha), rat(beta))
    vm = verma(Fraction(-1), (Fraction(-1), 0, 0, 0), budget=budget)
    return om, vm, tensor(om, vm.handle())


def annihilation_bound(ind, vec):
    """Smallest B >= 1 with L(m), I(m) acting as zero on vec for all m >= B.

    Scans up to the structural window: beyond 2 + max mode mass no positive
    mode can act (no character value or free direction is reachable), so the
    scan is exact for the annihilation-bounded presets.
    """
    mass = max((sum(e * abs(m) for _, m, e in mono) for mono in vec), default=0)
    cut = mass + 3
    bound = 1
    for m in range(1, cut + 1):
        if ind.act(L(m), vec) or ind.act(I(m), vec):
            bound = m + 1
    return bound


def _run_lemma51i(params, cfg, rng):
    m = int(params.get("m", 3))
    max_power = int(params.get("max_power", 8))
    om, vm, tens = _default_tensor(cfg.rewrite_budget,
                                   params.get("lambda", "1"),
                                   params.get("alpha", "1"),
                                   params.get("beta", "1"))
    echo = {"m": m, "max_power": max_power}
    base = {(0, ()): Fraction(1)}
    rep = nilpotency_probe(tens, {L(m): Fraction(1)}, base, max_power)
    if rep.status != "inconclusive" or not rep.witness.get("strictly_growing"):
        return CheckReport("lemma5.1i", echo, "fail",
                           {"stage": "tensor degree growth",
                            "probe": to_jsonable(rep.as_dict())})
    # positive modes act locally nilpotently on the induced factor, with the
    # graded bound power <= degree/m + 1
    for mono in graded_basis(vm, cfg.degree_cap):
        deg = mono_degree(mono)
        for mm in range(1, 5):
            for gen in (L(mm), I(mm)):
                prep = nilpotency_probe(vm.handle(), {gen: Fraction(1)},
                                        {mono: Fraction(1)}, deg // mm + 1)
                if prep.status != "pass":
                    return CheckReport("lemma5.1i", echo, "fail", {
                        "stage": "induced local nilpotency",
                        "monomial": mono_to_string(mono), "m": mm,
                        "probe": to_jsonable(prep.as_dict())})
    return CheckReport("lemma5.1i", echo, "pass",
                       {"tensor_weights": rep.witness["weight_by_step"]})


def _run_lemma51iii(params, cfg, rng):
    lam = rat(params.get("lambda", 1))
    beta = rat(params.get("beta", 3))
    alpha = rat(params.get("alpha", 0))
    l, m = int(params.get("l", 2)), int(params.get("m", -1))
    cap = int(params.get("degree_cap", cfg.degree_cap))
    V = build_hbar(params.get("V", {"preset": "two_dim"}), "params.V")
    echo = {"lambda": str(lam), "beta": str(beta), "l": l, "m": m,
            "dim": V.dim, "shape": list(V.shape)}
    r, d = V.shape
    rp = V.r_prime
    if rp is None or rp != 0 or d != 0:
        return CheckReport("lemma5.1iii", echo, "error",
                           {"error": "fixture must have r_prime = d = 0"})
    tau = V.scalar_of(("I", 0))
    if tau is None or tau == 0 or beta == 0:
        return CheckReport("lemma5.1iii", echo, "error",
                           {"error": "fixture needs invertible scalar I(0) "
                                     "and beta != 0"})
    module = calm_omega(V, lam, alpha, beta)
    op = TOp(l, m, 2 * rp + 2 * d)
    scalar = tau * tau * lam ** l * beta * beta
    from .polynomials import shift as poly_shift
    images = SubspaceBasis(module.sort_key)
    count = 0
    for vi in range(V.dim):
        for k in range(cap + 1):
            got = t_apply(module, op, {(vi, k): Fraction(1)})
            want = {(vi, e): scalar * c
                    for e, c in poly_shift({k: Fraction(1)}, l).items()}
            if got != normalized(want):
                return CheckReport("lemma5.1iii", echo, "fail", {
                    "label": module.label_str((vi, k)),
                    "got": module.vec_json(got),
                    "want": module.vec_json(want)})
            images.insert(got)
            count += 1
    if images.dim != count:
        return CheckReport("lemma5.1iii", echo, "fail",
                           {"stage": "injectivity on truncation",
                            "rank": images.dim, "labels": count})
    return CheckReport("lemma5.1iii", echo, "pass",
                       {"scalar": str(scalar), "labels": count})


def _run_lemma51iv(params, cfg, rng):
    s = int(params.get("s", 1))
    om, vm, tens = _default_tensor(cfg.rewrite_budget)
    base = {(0, ()): Fraction(1)}
    bound = annihilation_bound(vm, {(): Fraction(1)})
    l_, m_ = int(params.get("l", 9)), int(params.get("m", 4))
    echo = {"l": l_, "m": m_, "s": s, "annihilation_bound": bound}
    if m_ < bound or l_ - m_ - s < bound:
        return CheckReport("lemma5.1iv", echo, "error",
                           {"error": "modes below the annihilation bound"})
    rep = nilpotency_probe(tens, TOp(l_, m_, s), base, int(params.get("max_power", 3)))
    if rep.status != "pass":
        return CheckReport("lemma5.1iv", echo, "fail",
                           {"probe": to_jsonable(rep.as_dict())})
    echo_power = rep.witness["power"]
    # a couple of deeper vectors, thresholds rescanned per vector
    for mono in graded_basis(vm, 3)[:6]:
        vec = {(0, mono): Fraction(1)}
        b = annihilation_bound(vm, {mono: Fraction(1)})
        rep = nilpotency_probe(tens, TOp(2 * b + s + 1, b, s), vec, 3)
        if rep.status != "pass":
            return CheckReport("lemma5.1iv", echo, "fail",
                               {"monomial": mono_to_string(mono),
                                "probe": to_jsonable(rep.as_dict())})
    return CheckReport("lemma5.1iv", echo, "pass", {"power": echo_power})


def _run_lemma51v(params, cfg, rng):
    l_, m_ = int(params.get("l", -7)), int(params.get("m", -3))
    om, vm, tens = _default_tensor(cfg.rewrite_budget)
    base = {(0, ()): Fraction(1)}
    echo = {"l": l_, "m": m_}
    got = t_apply(tens, TOp(l_, m_, 1), base)
    if not got:
        return CheckReport("lemma5.1v", echo, "fail",
                           {"stage": "tensor action vanished",
                            "label": "1(x)1"})
    # the same operators annihilate the polynomial module for every s >= 1
    om_only = omega(Fraction(1), Fraction(0), Fraction(2))
    for s in range(1, 5):
        for l2 in range(-4, 5):
            for m2 in range(-4, 5):
                for k in range(0, 6):
                    if t_apply(om_only, TOp(l2, m2, s), {k: Fraction(1)}):
                        return CheckReport("lemma5.1v", echo, "fail", {
                            "stage": "polynomial annihilation",
                            "l": l2, "m": m2, "s": s, "label": "t^%d" % k})
    return CheckReport("lemma5.1v", echo, "pass",
                       {"tensor_image_terms": len(got),
                        "image": tens.vec_json(got)})


def _run_thm31claim1(params, cfg, rng):
    count = int(params.get("count", 10))
    max_deg = int(params.get("max_degree", 3))
    lam = rat(params.get("lambda", 1))
    beta = rat(params.get("beta", 2))
    om = omega(lam, rat(params.get("alpha", 0)), beta)
    vm = verma(Fraction(-1), (Fraction(-1), 0, 0, 0), budget=cfg.rewrite_budget)
    tens = tensor(om, vm.handle())
    basis = graded_basis(vm, 3)
    echo = {"count": count, "max_degree": max_deg}
    for _ in range(count):
        n = rng.randint(0, max_deg)
        parts = []
        for i in range(n + 1):
            if i == n or rng.random() < 0.8:
                mono = rng.choice(basis)
                parts.append({mono: _rand_rat(rng, nonzero=True)})
            else:
                parts.append({})
        w = {}
        for i, u in enumerate(parts):
            for mono, c in u.items():
                add_into(w, {(i, mono): c})
        bound = max(annihilation_bound(vm, u) for u in parts if u)
        shifts = list(range(bound, bound + n + 2))
        comps = vandermonde_extract(tens, w, shifts, lam)
        top = {(0, mono): beta * Fraction(-1) ** n * c
               for mono, c in parts[n].items()}
        if comps[n] != normalized(top):
            return CheckReport("thm3.1claim1", echo, "fail", {
                "n": n, "shifts": shifts,
                "got_top": tens.vec_json(comps[n]),
                "want_top": tens.vec_json(top)})
    return CheckReport("thm3.1claim1", echo, "pass", {"count": count})


def _run_thm33witness(params, cfg, rng):
    from .modules import invariance_check
    cap = int(params.get("degree_cap", 8))

    def no_constant(vec):
        return all(k != 0 for k in vec)

    om_red = omega(Fraction(3, 2), Fraction(0), Fraction(0))
    samples = [{k: Fraction(1)} for k in range(1, cap + 1)]
    rep = invariance_check(om_red, no_constant, samples, (-6, 6))
    if not rep.passed:
        return CheckReport("thm3.3witness", {}, "fail",
                           {"stage": "omega(lam,0,0)", "inner": to_jsonable(rep.as_dict())})

    a0 = a_series(Fraction(0), Fraction(0), Fraction(0))
    rep = invariance_check(a0, lambda vec: all(n == 0 for n in vec),
                           [{0: Fraction(1)}], (-6, 6))
    if not rep.passed:
        return CheckReport("thm3.3witness", {}, "fail",
                           {"stage": "a_series(0,0,0)", "inner": to_jsonable(rep.as_dict())})

    a1 = a_series(Fraction(0), Fraction(1), Fraction(0))
    rep = invariance_check(a1, lambda vec: all(n != 0 for n in vec),
                           [{n: Fraction(1)} for n in (-2, -1, 1, 2)], (-6, 6))
    if not rep.passed:
        return CheckReport("thm3.3witness", {}, "fail",
                           {"stage": "a_series(0,1,0)", "inner": to_jsonable(rep.as_dict())})

    om_bad = omega(Fraction(1), Fraction(1), Fraction(0))
    rep = invariance_check(om_bad, no_constant, [{1: Fraction(1)}], (-6, 6))
    if rep.status != "fail":
        return CheckReport("thm3.3witness", {}, "fail",
                           {"stage": "omega(1,1,0) must leak a constant term",
                            "inner": to_jsonable(rep.as_dict())})
    negative_witness = rep.witness

    # the reducible corner of the V-valued family: sigma = alpha, beta*tau = 0
    alpha = Fraction(2)
    V = one_dim_V(alpha, Fraction(0), (0, 0))
    red = calm_omega(V, Fraction(1), alpha, Fraction(5))
    rep = invariance_check(red, lambda vec: all(k != 0 for _, k in vec),
                           [{(0, k): Fraction(1)} for k in range(1, 5)], (-4, 4))
    if not rep.passed:
        return CheckReport("thm3.3witness", {}, "fail",
                           {"stage": "calm_omega reducible corner",
                            "inner": to_jsonable(rep.as_dict())})
    return CheckReport("thm3.3witness", {"degree_cap": cap}, "pass",
                       {"negative_control": negative_witness})


_DEFAULT_TRUTH_TABLE = [
    ({"kind": "omega", "lambda": "1", "alpha": "0", "beta": "0"},
     {"omega_irreducible": False}),
    ({"kind": "omega", "lambda": "2", "alpha": "1", "beta": "0"},
     {"omega_irreducible": True}),
    ({"kind": "a_series", "lambda": "2", "alpha": "1", "beta": "0"},
     {"a_series_reducible": True}),
    ({"kind": "a_series", "lambda": "1/2", "alpha": "1", "beta": "0"},
     {"a_series_reducible": False}),
]


def _run_classify(params, cfg, rng):
    if "spec" in params:
        record = params["spec"]
        predictions = classify(record)
        echo = {"spec": record}
        if "expect" in params:
            expect = params["expect"]
            mism = {k: [to_jsonable(predictions.get(k)), to_jsonable(v)]
                    for k, v in expect.items()
                    if to_jsonable(predictions.get(k)) != to_jsonable(v)}
            if mism:
                return CheckReport("classify", echo, "fail",
                                   {"mismatches": mism,
                                    "predictions": to_jsonable(predictions)})
        return CheckReport("classify", echo, "pass",
                           {"predictions": to_jsonable(predictions)})
    for record, expect in _DEFAULT_TRUTH_TABLE:
        predictions = classify(record)
        for k, v in expect.items():
            if predictions.get(k) != v:
                return CheckReport("classify", {}, "fail",
                                   {"spec": record,
                                    "predictions": to_jsonable(predictions),
                                    "expected": to_jsonable(expect)})
    return CheckReport("classify", {}, "pass",
                       {"table_size": len(_DEFAULT_TRUTH_TABLE)})


CATALOG = {
    "axioms": _run_axioms,
    "prop2.2": _run_prop22,
    "lemma4.2": _run_lemma42,
    "prop4.3": _run_prop43,
    "remark2.3": _run_remark23,
    "thm6.2": _run_thm62,
    "thm6.3": _run_thm63,
    "lemma6.1": _run_lemma61,
    "lemma5.1i": _run_lemma51i,
    "lemma5.1iii": _run_lemma51iii,
    "lemma5.1iv": _run_lemma51iv,
    "lemma5.1v": _run_lemma51v,
    "thm3.1claim1": _run_thm31claim1,
    "thm3.3witness": _run_thm33witness,
    "classify": _run_classify,
}


# ---------------------------------------------------------------------------
# suites

def load_spec(obj):
    """Validate a suite spec and fill global defaults.

    Raises SpecError with the JSON path of the first violation.
    """
    if not isinstance(obj, dict):
        raise SpecError("$", "suite spec must be an object")
    checks = obj.get("checks")
    if not isinstance(checks, list):
        raise SpecError("checks", "expected a list of {name, params} records")
    norm_checks = []
    for idx, entry in enumerate(checks):
        path = "checks[%d]" % idx
        if not isinstance(entry, dict):
            raise SpecError(path, "expected an object")
        name = entry.get("name")
        if name not in CATALOG:
            raise SpecError("%s.name" % path,
                            "unknown check %r; catalog: %s"
                            % (name, ", ".join(sorted(CATALOG))))
        params = entry.get("params", {})
        if not isinstance(params, dict):
            raise SpecError("%s.params" % path, "expected an object")
        _validate_params(name, params, "%s.params" % path)
        norm_checks.append({"name": name, "params": params})
    g = dict(DEFAULT_GLOBAL)
    extra = obj.get("global", {})
    if not isinstance(extra, dict):
        raise SpecError("global", "expected an object")
    for key, val in extra.items():
        if key not in DEFAULT_GLOBAL:
            raise SpecError("global.%s" % key, "unknown global option")
        g[key] = val
    mr = g["mode_range"]
    if (not isinstance(mr, (list, tuple)) or len(mr) != 2
            or not all(isinstance(v, int) for v in mr) or mr[0] > mr[1]):
        raise SpecError("global.mode_range", "expected [lo, hi] with lo <= hi")
    g["mode_range"] = [int(mr[0]), int(mr[1])]
    for key in ("degree_cap", "samples", "seed", "rewrite_budget"):
        if not isinstance(g[key], int) or g[key] < 0:
            raise SpecError("global.%s" % key, "expected a nonnegative integer")
    return {"checks": norm_checks, "global": g}


def _validate_params(name, params, path):
    """Light schema validation; whatever parses here is built for real at
    run time, so deep errors still surface as check-level errors."""
    if name == "prop2.2":
        mcfg = _need(params, "module", path)
        _validate_module_cfg(mcfg, "%s.module" % path)
    if name == "classify" and "spec" in params:
        spec = params["spec"]
        if not isinstance(spec, dict) or "kind" not in spec:
            raise SpecError("%s.spec.kind" % path, "missing classification kind")


_MODULE_REQUIRED = {
    "omega": ("lambda", "alpha", "beta"),
    "a_series": ("lambda", "alpha", "beta"),
    "verma": ("h", "d"),
    "whittaker": ("l1", "l2", "mu1", "e"),
    "ind_lambda0": ("lambda", "RS", "y"),
    "ind_lambda1": ("lambda", "PQ", "z"),
    "calM_omega": ("V",),
    "calM_A": ("V",),
    "tensor": ("left", "right"),
    "gamma_twist": ("base", "gamma"),
}


def _validate_module_cfg(cfg, path):
    if not isinstance(cfg, dict):
        raise SpecError(path, "expected a module record")
    mtype = cfg.get("type")
    if mtype not in _MODULE_REQUIRED:
        raise SpecError("%s.type" % path,
                        "unknown module type %r; known: %s"
                        % (mtype, ", ".join(sorted(_MODULE_REQUIRED))))
    for key in _MODULE_REQUIRED[mtype]:
        if key not in cfg:
            raise SpecError("%s.%s" % (path, key), "missing required key")
    if mtype in ("calM_omega", "calM_A"):
        sub_cfg = cfg.get("params", cfg)
        sub_path = "%s.params" % path if "params" in cfg else path
        for key in ("lambda", "alpha", "beta"):
            if key not in sub_cfg:
                raise SpecError("%s.%s" % (sub_path, key), "missing required key")
    if mtype == "tensor":
        _validate_module_cfg(cfg["left"], "%s.left" % path)
        _validate_module_cfg(cfg["right"], "%s.right" % path)
    if mtype == "gamma_twist":
        _validate_module_cfg(cfg["base"], "%s.base" % path)


def run_check(name, params, cfg, rng):
    try:
        return CATALOG[name](params, cfg, rng)
    except Exception as exc:  # checks never crash the suite
        return CheckReport(name, to_jsonable(params), "error",
                           {"error": "%s: %s" % (type(exc).__name__, exc)})


def run_suite(spec):
    """Execute a validated suite spec; returns (document, durations)."""
    g = spec["global"]
    cfg = GlobalConfig(mode_range=tuple(g["mode_range"]),
                       degree_cap=g["degree_cap"], samples=g["samples"],
                       seed=g["seed"], rewrite_budget=g["rewrite_budget"])
    reports = []
    durations = []
    for idx, entry in enumerate(spec["checks"]):
        rng = random.Random("%s/%d/%s" % (cfg.seed, idx, entry["name"]))
        t0 = time.perf_counter()
        rep = run_check(entry["name"], entry["params"], cfg, rng)
        durations.append(time.perf_counter() - t0)
        reports.append(rep)
    summary = {"pass": 0, "fail": 0, "inconclusive": 0, "error": 0}
    for rep in reports:
        summary[rep.status] += 1
    doc = {
        "tool": {"name": "hvcheck", "version": __version__},
        "suite": spec,
        "checks": [to_jsonable(rep.as_dict()) for rep in reports],
        "summary": summary,
    }
    return doc, durations


def exit_code(doc):
    s = doc["summary"]
    return 0 if s["fail"] == 0 and s["error"] == 0 else 1


def default_suite():
    """One entry per catalog check plus a bracket-defect sweep over every
    shipped module family."""
    two_dim = {"preset": "two_dim"}
    om = {"type": "omega", "lambda": "2", "alpha": "1", "beta": "3"}
    families = [
        om,
        {"type": "a_series", "lambda": "1/2", "alpha": "2", "beta": "5"},
        {"type": "calM_omega", "V": two_dim,
         "params": {"lambda": "1", "alpha": "2", "beta": "3"}},
        {"type": "calM_A", "V": two_dim,
         "params": {"lambda": "1/2", "alpha": "1", "beta": "2"}},
        {"type": "gamma_twist", "base": om, "gamma": "2 + 1/2*t^-1 + t^2"},
        {"type": "gamma_twist",
         "base": {"type": "calM_A", "V": two_dim,
                  "params": {"lambda": "1/2", "alpha": "1", "beta": "2"}},
         "gamma": "3"},
        {"type": "verma", "h": "-1", "d": ["-1", "1", "2", "3"]},
        {"type": "whittaker", "l1": "1", "l2": "2", "mu1": "3",
         "e": ["1", "0", "1/2", "0"]},
        {"type": "ind_lambda0", "lambda": "1", "RS": ["2", "3", "4", "5"],
         "y": ["0", "0", "0"]},
        {"type": "ind_lambda1", "lambda": "2", "PQ": ["1", "2", "3", "4", "5"],
         "z": ["1", "0", "0", "0"]},
        {"type": "tensor", "left": om,
         "right": {"type": "verma", "h": "-1", "d": ["-1", "0", "0", "0"]}},
        {"type": "tensor", "left": {"type": "omega", "lambda": "1", "alpha": "0", "beta": "2"},
         "right": {"type": "whittaker", "l1": "1", "l2": "2", "mu1": "3",
                   "e": ["1", "0", "0", "0"]}},
    ]
    checks = [{"name": "axioms", "params": {}}]
    checks += [{"name": "prop2.2", "params": {"module": fam}} for fam in families]
    for name in ("lemma4.2", "prop4.3", "remark2.3", "thm6.2", "thm6.3",
                 "lemma6.1", "lemma5.1i", "lemma5.1iii", "lemma5.1iv",
                 "lemma5.1v", "thm3.1claim1", "thm3.3witness", "classify"):
        checks.append({"name": name, "params": {}})
    return load_spec({"checks": checks})
