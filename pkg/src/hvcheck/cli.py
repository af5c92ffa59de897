"""The hv command-line harness.

Subcommands:

    hv axioms --modes -6..6 [--shapes 3,1] [--format text|json]
    hv run --spec suite.json [--format json|text] [--out FILE]
    hv classify --spec module.json
    hv identity <name> [--param k=v ...] [--format text|json]

JSON reports are stable-key-ordered and contain no timing data, so a given
suite and seed produce byte-identical output; the text format adds
wall-clock per check.  Exit code 0 means zero failed checks and zero
check-level errors.  HV_REWRITE_BUDGET overrides the normal-ordering step
budget.
"""

import argparse
import json
import os
import random
import sys

from .catalog import (DEFAULT_GLOBAL, CATALOG, GlobalConfig, SpecError,
                      exit_code, load_spec, run_check, run_suite, to_jsonable)
from .probes import classify


def _emit_json(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _emit_text(doc, durations=None):
    lines = []
    for idx, chk in enumerate(doc["checks"]):
        took = ""
        if durations is not None:
            took = " (%.1f ms)" % (durations[idx] * 1000.0)
        lines.append("[%s] %s%s" % (chk["status"].upper(), chk["name"], took))
        if chk["status"] in ("fail", "error") and chk.get("witness"):
            lines.append("    witness: %s" % json.dumps(chk["witness"], sort_keys=True))
    s = doc["summary"]
    lines.append("summary: %d pass, %d fail, %d inconclusive, %d error"
                 % (s["pass"], s["fail"], s["inconclusive"], s["error"]))
    return "\n".join(lines) + "\n"


def _write(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_mode_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("expected LO..HI, e.g. -6..6")
    try:
        return [int(lo), int(hi)]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _parse_param(text):
    key, sep, val = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError("expected KEY=VALUE")
    try:
        return key, json.loads(val)
    except json.JSONDecodeError:
        return key, val


def _global_config(seed=0):
    g = dict(DEFAULT_GLOBAL)
    budget = os.environ.get("HV_REWRITE_BUDGET")
    if budget is not None:
        g["rewrite_budget"] = int(budget)
    g["seed"] = seed
    return GlobalConfig(mode_range=tuple(g["mode_range"]),
                        degree_cap=g["degree_cap"], samples=g["samples"],
                        seed=g["seed"], rewrite_budget=g["rewrite_budget"])


def _single_check_doc(name, params, seed=0):
    from . import __version__

    cfg = _global_config(seed)
    rng = random.Random("%s/0/%s" % (cfg.seed, name))
    rep = run_check(name, params, cfg, rng)
    summary = {"pass": 0, "fail": 0, "inconclusive": 0, "error": 0}
    summary[rep.status] += 1
    return {
        "tool": {"name": "hvcheck", "version": __version__},
        "suite": {"checks": [{"name": name, "params": to_jsonable(params)}],
                  "global": {**DEFAULT_GLOBAL, "seed": seed}},
        "checks": [to_jsonable(rep.as_dict())],
        "summary": summary,
    }


def _merge_mode_args(argv):
    """Glue '--modes -6..6' into '--modes=-6..6' so the leading minus of the
    window is not mistaken for an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--modes":
            val = next(it, None)
            if val is None:
                out.append(tok)
            else:
                out.append("--modes=" + val)
        else:
            out.append(tok)
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="hv",
        description="exact verification harness for twisted "
                    "Heisenberg-Virasoro module constructions")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ax = sub.add_parser("axioms", help="antisymmetry and Jacobi sweep")
    p_ax.add_argument("--modes", type=_parse_mode_range, default=[-6, 6],
                      help="mode window LO..HI (default -6..6)")
    p_ax.add_argument("--shapes", action="append", default=None,
                      metavar="R,D", help="quotient shape; repeatable "
                      "(default: all r <= 3, d in {0,1})")
    p_ax.add_argument("--format", choices=("json", "text"), default="text")
    p_ax.add_argument("--out", default=None)

    p_run = sub.add_parser("run", help="run a JSON suite spec")
    p_run.add_argument("--spec", required=True,
                       help="path to the suite spec, or - for stdin")
    p_run.add_argument("--format", choices=("json", "text"), default="json")
    p_run.add_argument("--out", default=None)

    p_cls = sub.add_parser("classify", help="evaluate classification predicates")
    p_cls.add_argument("--spec", required=True,
                       help="path to the module record, or - for stdin")

    p_id = sub.add_parser("identity", help="run one named check")
    p_id.add_argument("name")
    p_id.add_argument("--param", action="append", default=[],
                      type=_parse_param, metavar="K=V",
                      help="check parameter; V parsed as JSON when possible")
    p_id.add_argument("--seed", type=int, default=0)
    p_id.add_argument("--format", choices=("json", "text"), default="text")
    p_id.add_argument("--out", default=None)

    args = parser.parse_args(_merge_mode_args(
        sys.argv[1:] if argv is None else argv))

    if args.command == "axioms":
        params = {"modes": args.modes}
        if args.shapes:
            try:
                params["shapes"] = [[int(x) for x in s.split(",")] for s in args.shapes]
            except ValueError:
                parser.error("--shapes expects R,D pairs")
        doc = _single_check_doc("axioms", params)
        text = _emit_json(doc) if args.format == "json" else _emit_text(doc)
        _write(text, args.out)
        return exit_code(doc)

    if args.command == "run":
        try:
            raw = sys.stdin.read() if args.spec == "-" else open(args.spec).read()
            spec = load_spec(json.loads(raw))
        except (OSError, json.JSONDecodeError, SpecError) as exc:
            print("spec error: %s" % exc, file=sys.stderr)
            return 2
        budget = os.environ.get("HV_REWRITE_BUDGET")
        if budget is not None:
            spec["global"]["rewrite_budget"] = int(budget)
        doc, durations = run_suite(spec)
        if args.format == "json":
            text = _emit_json(doc)
        else:
            text = _emit_text(doc, durations)
        _write(text, args.out)
        return exit_code(doc)

    if args.command == "classify":
        try:
            raw = sys.stdin.read() if args.spec == "-" else open(args.spec).read()
            record = json.loads(raw)
            predictions = classify(record)
        except (OSError, json.JSONDecodeError, ValueError) as exc:
            print("classify error: %s" % exc, file=sys.stderr)
            return 2
        sys.stdout.write(json.dumps(to_jsonable(predictions), sort_keys=True,
                                    indent=2) + "\n")
        return 0

    if args.command == "identity":
        if args.name not in CATALOG:
            print("unknown check %r; catalog: %s"
                  % (args.name, ", ".join(sorted(CATALOG))), file=sys.stderr)
            return 2
        params = dict(args.param)
        doc = _single_check_doc(args.name, params, seed=args.seed)
        text = _emit_json(doc) if args.format == "json" else _emit_text(doc)
        _write(text, args.out)
        return exit_code(doc)

    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
