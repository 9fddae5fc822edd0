"""Command line entry point: ``hsg verify-table``, ``hsg measure``, ``hsg demo``.

Exit codes: 0 success, 1 disagreement found, 2 bad input, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import math
import os
import sys

from . import __version__, geometry, hyper, regular
from .grammar import nonterminal_bound_k, words_upto
from .oracle import oracle_from_json
from .words import AlphabetError, CapExceeded, format_word

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as f:
            return json.load(f)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: {e}") from None


def _load_structure(path) -> hyper.HyperbolicStructure:
    if not path:
        raise InputError("--structure is required")
    data = _load_json(path)
    try:
        return hyper.structure_from_json(data)
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(f"{path}: bad structure bundle ({e})") from None


def _load_combing(path, alphabet):
    if not path:
        raise InputError("--combing2 is required")
    try:
        with open(path) as f:
            text = f.read()
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    try:
        return regular.nfa_from_text(text, alphabet)
    except (KeyError, ValueError) as e:
        raise InputError(f"{path}: {e}") from None


def _config(args) -> dict:
    skip = {"func"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _report(args, body: dict) -> dict:
    return {
        "tool": "hsg",
        "version": __version__,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        "config": _config(args),
        **body,
    }


def _text(report: dict) -> str:
    lines = []
    for k, v in report.items():
        if isinstance(v, (list, dict)):
            v = json.dumps(v, sort_keys=True)
        lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


def _emit(args, report: dict) -> None:
    fmt = getattr(args, "format", "json")
    if fmt == "csv":
        out = geometry.report_csv(report)
    elif fmt == "text":
        out = _text(report)
    else:
        out = json.dumps(report, indent=1, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as f:
            f.write(out)
    else:
        sys.stdout.write(out)


# ------------------------------------------------------------ commands


def cmd_verify_table(args) -> int:
    s = _load_structure(args.structure)
    try:
        rep = hyper.verify_table(s, args.maxlen, method=args.method, cap=args.cap_words)
    except CapExceeded as e:
        _emit(args, _report(args, {"partial": True, "error": str(e)}))
        return EXIT_CAP
    _emit(args, _report(args, {"verified": not rep["disagreements"], **rep}))
    return EXIT_OK if not rep["disagreements"] else EXIT_FAIL


def _measure_delta(args) -> dict:
    s = _load_structure(args.structure)
    rows = geometry.delta_samples(s.oracle, s.R, args.maxlen)
    k = nonterminal_bound_k(s.table.cfg.cnf)
    delta, worst = max(((d, t) for t, d in rows), key=lambda e: e[0], default=(0, None))
    return {
        "kind": "delta",
        "samples": geometry._histogram([(len(t.u) + len(t.v) + len(t.w), d) for t, d in rows]),
        "fit": {"delta": delta, "k": k, "bound": 2 * k, "within_bound": delta <= 2 * k},
        "worst_case": None if worst is None else worst.to_json(),
        "checked": len(rows),
    }


def _measure_lognhd(args) -> dict:
    s = _load_structure(args.structure)
    return geometry.measure_log_neighborhood(s.oracle, s.combing, args.maxlen)


def _measure_intersect(args) -> dict:
    if args.oracle:
        o = oracle_from_json(_load_json(args.oracle))
    elif args.structure:
        o = _load_structure(args.structure).oracle
    else:
        raise InputError("--oracle or --structure is required")
    n = args.n
    if args.paths:
        paths = [tuple(p) if " " not in p else tuple(p.split()) for p in args.paths]
    else:
        a, b = list(o.alphabet)[:2]
        paths = [(a,) * n + (b,) * n, (b,) * n + (a,) * n]
    d = geometry.ball_intersection_distance(o, paths, radius=args.radius)
    lower = math.ceil(n / 2)
    return {
        "kind": "intersect",
        "samples": [{"n": n, "d": d}],
        "fit": {"d": d, "lower_bound": lower, "meets_lower_bound": d >= lower},
        "worst_case": {"paths": [format_word(p) for p in paths]},
    }


def _measure_ft(args) -> dict:
    s = _load_structure(args.structure)
    R2 = _load_combing(args.combing2, s.combing.alphabet)
    return geometry.compare_combings(s.oracle, s.R, R2, args.maxlen)


MEASURES = {"delta": _measure_delta, "lognhd": _measure_lognhd, "intersect": _measure_intersect, "ft": _measure_ft}


def cmd_measure(args) -> int:
    try:
        body = MEASURES[args.mode](args)
    except CapExceeded as e:
        _emit(args, _report(args, {"kind": args.mode, "partial": True, "error": str(e)}))
        return EXIT_CAP
    _emit(args, _report(args, body))
    return EXIT_OK


# ------------------------------------------------------------ demos


def _say(verbose_lines, *parts):
    verbose_lines.append(" ".join(str(p) for p in parts))


def _demo_bicyclic(out, maxlen):
    s = hyper.bicyclic_structure()
    _say(out, "bicyclic monoid <a, b | ab = 1>, combing R = b*a*")
    _say(out, "table grammar from the valence automaton:", s.table.cfg.cnf)
    missing, extra = hyper.bicyclic_product_check(s.table)
    _say(out, "product rule over i,j,k,l <= 6:", "ok" if not (missing or extra) else f"{len(missing)} missing, {len(extra)} unexpected")
    rep = hyper.verify_table(s, maxlen or 12)
    _say(out, f"verify_table maxlen {rep['maxlen']}: {rep['checked']} triples, {len(rep['disagreements'])} disagreements")
    return not (missing or extra or rep["disagreements"])


def _demo_free(out, maxlen):
    s = hyper.free_structure("ab")
    _say(out, "free semigroup on {a, b}, R = {a, b}^+, T = {u#v#v^r u^r}")
    _say(out, s.table.cfg.to_text().rstrip())
    rep = hyper.verify_table(s, maxlen or 10)
    _say(out, f"verify_table maxlen {rep['maxlen']}: {rep['checked']} triples, {len(rep['disagreements'])} disagreements")
    return not rep["disagreements"]


def _demo_subfree(out, maxlen):
    h = hyper.subfree_hom()
    _say(out, "subsemigroup of {a, b, c}^+ generated by", ", ".join(f"{k}={format_word(v)}" for k, v in h.image.items()))
    s = hyper.subfree_structure()
    _say(out, "pulled-back table:", s.table.cfg)
    rep = hyper.verify_table(s, maxlen or 9)
    _say(out, f"verify_table maxlen {rep['maxlen']}: {rep['checked']} triples, "
              f"{rep['table_size']} table words, {len(rep['disagreements'])} disagreements")
    return not rep["disagreements"]


def _demo_adjoin_zero(out, maxlen):
    n = maxlen or 10
    s = hyper.bicyclic_structure()
    z = hyper.adjoin_zero(s)
    _say(out, "bicyclic monoid with a zero x adjoined")
    for w in ("x#x#x", "baa#x#x", "x#baa#aab"):
        _say(out, f"  {w}: {z.table.accepts(tuple(w))}")
    r1 = hyper.verify_table(z, n)
    _say(out, f"verify_table (S^Z) maxlen {n}: {len(r1['disagreements'])} disagreements")
    back = hyper.restrict_structure(z, s.oracle.alphabet)
    r2 = hyper.verify_table(back, n)
    _say(out, f"verify_table (restricted back) maxlen {n}: {len(r2['disagreements'])} disagreements")
    return not (r1["disagreements"] or r2["disagreements"])


def _demo_wp_z(out, maxlen):
    n = maxlen or 8
    sigma, inverse, V, o = hyper.integers_example()
    _say(out, "integers on a and A = a^-1; V = words with value 0")
    W = hyper.group_wp_to_semigroup(V, sigma, inverse)
    ok1 = set(words_upto(W, n + 1)) == set(hyper.word_problem_language(o, n))
    _say(out, f"semigroup word problem W matches the oracle up to size {n}: {ok1}")
    for w in ("a#a", "a a#a a", "a A#A a", "a#A"):
        _say(out, f"  {w}: {W.accepts(tuple(w.replace('#', ' # ').split()))}")
    V2 = hyper.semigroup_wp_to_group(W, ("a", "A"), sigma)
    ok2 = set(words_upto(V2, n)) == set(words_upto(V, n))
    _say(out, f"round trip with w1 = a A gives back V up to length {n}: {ok2}")
    return ok1 and ok2


DEMOS = {
    "bicyclic": _demo_bicyclic,
    "free": _demo_free,
    "subfree": _demo_subfree,
    "adjoin-zero": _demo_adjoin_zero,
    "wp-z": _demo_wp_z,
}


def cmd_demo(args) -> int:
    lines: list = []
    try:
        ok = DEMOS[args.name](lines, args.maxlen)
    except CapExceeded as e:
        print("\n".join(lines))
        print(f"cap exceeded: {e}")
        return EXIT_CAP
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


# ------------------------------------------------------------ parser


def _positive(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hsg", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"hsg {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--cap-elements", type=_positive, help="element cap (overrides HSG_CAP_ELEMENTS)")
    common.add_argument("--cap-words", type=_positive, help="cap on enumerated words and triples")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify-table", parents=[common], help="check a structure bundle against its oracle")
    v.add_argument("--structure", required=True)
    v.add_argument("--maxlen", type=_positive, default=10)
    v.add_argument("--method", choices=("sets", "cyk"), default="sets")
    v.set_defaults(func=cmd_verify_table)

    m = sub.add_parser("measure", parents=[common], help="geometric measurements")
    m.add_argument("mode", choices=sorted(MEASURES))
    m.add_argument("--structure")
    m.add_argument("--oracle")
    m.add_argument("--combing2")
    m.add_argument("--maxlen", type=_positive, default=10)
    m.add_argument("--radius", type=_positive)
    m.add_argument("--n", type=_positive, default=8)
    m.add_argument("--paths", nargs="+", help="explicit paths for 'intersect'")
    m.set_defaults(func=cmd_measure)

    d = sub.add_parser("demo", help="run a worked example")
    d.add_argument("name", choices=sorted(DEMOS))
    d.add_argument("--maxlen", type=_positive)
    d.set_defaults(func=cmd_demo)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if getattr(args, "cap_elements", None):
        os.environ["HSG_CAP_ELEMENTS"] = str(args.cap_elements)
    try:
        return args.func(args)
    except InputError as e:
        print(f"hsg: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (AlphabetError, ValueError) as e:
        print(f"hsg: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
