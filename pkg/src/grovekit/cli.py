"""
Command-line interface: ``grovekit {poly, expand, verify, experiment}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bases import (
    IterationCapExceeded, NotQuasisymmetric, expand_forest, expand_grove,
    expand_multifundamental, forest_polynomial, forest_to_grove_sign_experiment,
    grove_polynomial, multifundamental,
)
from .forest import (
    TooManyParts, forests_up_to, format_forest, parse_composition,
    parse_forest, to_word,
)
from .ring import ParseError, parse, specialize_beta
from .schubert import grothendieck, parse_permutation, schubert
from .verify import run_suite

SCHEMA = "grove-kit/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _beta(text: str):
    if text in ("sym", "symbolic"):
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--beta expects 'sym' or an integer, got {text!r}")


def _require(args, name):
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for '{args.kind}'")
    return val


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, default=str)


def cmd_poly(args) -> int:
    kind = args.kind
    if kind in ("forest", "grove"):
        F = parse_forest(_require(args, "forest"))
        poly = forest_polynomial(F) if kind == "forest" else grove_polynomial(F)
        index = {"word": to_word(F)}
    elif kind in ("schubert", "grothendieck"):
        w = parse_permutation(_require(args, "perm"))
        poly = schubert(w, args.n) if kind == "schubert" else grothendieck(w, args.n)
        index = {"oneline": list(w.one_line)}
    else:
        alpha = parse_composition(_require(args, "alpha"))
        poly = multifundamental(alpha, _require(args, "n"))
        index = {"composition": list(alpha), "n": args.n}
    if args.beta is not None:
        poly = specialize_beta(poly, args.beta)
    if args.format == "json":
        beta = "symbolic" if args.beta is None else str(args.beta)
        print(_dump({"schema": SCHEMA, "kind": kind, "index": index, "beta": beta,
                     "polynomial": str(poly)}))
    else:
        print(poly)
    return EXIT_OK


def cmd_expand(args) -> int:
    f = parse(args.input)
    if args.basis == "grove":
        exp = expand_grove(f, args.n, args.beta)
    elif args.basis == "forest":
        exp = expand_forest(f if args.beta is None else specialize_beta(f, args.beta), args.n)
    else:
        exp = expand_multifundamental(f, args.n, args.beta)
    ok = exp.reconstructs()
    if args.format == "json":
        out = exp.to_json()
        out["input"] = str(exp.input)
        out["reconstructs"] = ok
        print(_dump(out))
    else:
        print(exp.to_text())
        print(f"# reconstructs: {'yes' if ok else 'NO'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    opts = {k: v for k, v in (("max_size", args.max_size), ("n", args.n), ("seed", args.seed),
                              ("count", args.count)) if v is not None}
    reports = run_suite(args.suite, **opts)
    ok = all(r.ok for r in reports)
    if args.format == "json":
        print(_dump({
            "schema": SCHEMA, "suite": args.suite, "ok": ok,
            "reports": [{"name": r.name, "checks": r.checks, "ok": r.ok,
                         "failures": [list(map(str, f)) if isinstance(f, tuple) else str(f)
                                      for f in r.failures]} for r in reports],
        }))
    else:
        for r in reports:
            print(f"{r.name}: {'PASS' if r.ok else 'FAIL'} ({r.checks} checks, {len(r.failures)} failures)")
            for f in r.failures:
                print("  " + " ".join(map(str, f)) if isinstance(f, tuple) else f"  {f}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_experiment(args) -> int:
    rows = []
    for F in forests_up_to(args.max_size, args.n):
        rep = forest_to_grove_sign_experiment(F, args.n)
        for G, shift, c in rep.signs:
            rows.append((format_forest(F), format_forest(G), shift, c, rep.alternating))
    if args.format == "json":
        print(_dump({"schema": SCHEMA, "experiment": args.name, "max_size": args.max_size, "n": args.n,
                     "rows": [dict(zip(("F", "G", "shift", "coeff", "alternating"), r)) for r in rows]}))
    else:
        print(f"{'F':<10} {'G':<12} {'shift':>5} {'coeff':>6}  alternating")
        for F, G, shift, c, alt in rows:
            print(f"{F:<10} {G:<12} {shift:>5} {c:>6}  {'yes' if alt else 'no'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grovekit", description="Grove, forest, Schubert and Grothendieck polynomials")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print a basis polynomial")
    p.add_argument("kind", choices=["forest", "grove", "schubert", "grothendieck", "multifund"])
    p.add_argument("--forest", help="forest word such as 2,2,4 (or e)")
    p.add_argument("--perm", help="permutation in one-line notation such as 1,3,2")
    p.add_argument("--alpha", help="composition such as 2,3,1")
    p.add_argument("--n", type=int, help="number of variables (multifund) or ambient S_n")
    p.add_argument("--beta", type=_beta, default=None, help="'sym' (default) or an integer")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("expand", help="expand a polynomial in a basis")
    p.add_argument("basis", choices=["grove", "forest", "multifund"])
    p.add_argument("--input", required=True, help="polynomial text, e.g. 'x1^2*x2 + b*x1'")
    p.add_argument("--n", type=int, required=True, help="variable window x1..xn")
    p.add_argument("--beta", type=_beta, default=None, help="'sym' (default) or an integer")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("suite", choices=["all", "operators", "duality", "characterization", "positivity", "multifund"])
    p.add_argument("--max-size", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, help="random polynomials for the operator suite")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", help="observational experiments (no verdict)")
    p.add_argument("name", choices=["forest-to-grove-signs"])
    p.add_argument("--max-size", type=int, default=2)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ParseError, TooManyParts, NotQuasisymmetric, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IterationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
