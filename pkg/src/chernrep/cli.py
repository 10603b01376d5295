"""Command-line front end.

Exit codes: 0 success, 1 usage or expression-syntax error, 2 computation
error (guards, non-invariance, missing generators), 3 verification failure
from check-prop.  Errors are written to stderr as ``error[<code>]: message``.
"""

import argparse
import json
import sys

from .char_ring import adams as adams_op
from .char_ring import augmentation
from .errors import (
    ChernRepError,
    InvarianceError,
    NoCanonicalGeneratorsError,
    ParseError,
)
from .filtration_check import verify_prop
from .graded import chern_character, total_chern
from .invariants import rewrite
from .parsing import (
    parse_group,
    parse_polynomial,
    parse_rep,
    rep_to_character,
)
from .reps import assert_g_rep, exterior
from .weyl import TORUS


class UsageError(ChernRepError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser():
    parser = _Parser(prog="chernrep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    chern = sub.add_parser("chern", help="total Chern class of a representation")
    chern.add_argument("group")
    chern.add_argument("rep")
    chern.add_argument("--max-degree", type=int, default=None)
    chern.add_argument(
        "--basis", choices=("monomials", "generators"), default="monomials"
    )
    chern.add_argument("--json", action="store_true")

    ch = sub.add_parser("ch", help="Chern character of a representation")
    ch.add_argument("group")
    ch.add_argument("rep")
    ch.add_argument("--max-degree", type=int, default=None)
    ch.add_argument("--json", action="store_true")

    ad = sub.add_parser("adams", help="Adams operation on a character")
    ad.add_argument("-k", type=int, required=True)
    ad.add_argument("group")
    ad.add_argument("rep")
    ad.add_argument("--json", action="store_true")

    lam = sub.add_parser("lambda", help="exterior power of a character")
    lam.add_argument("-p", type=int, required=True)
    lam.add_argument("group")
    lam.add_argument("rep")
    lam.add_argument("--json", action="store_true")

    cp = sub.add_parser("check-prop", help="verify the filtration comparison")
    cp.add_argument("group")
    cp.add_argument("--p-max", type=int, required=True)
    cp.add_argument("--degree", type=int, required=True)
    cp.add_argument("--json", action="store_true")

    rw = sub.add_parser("rewrite", help="express an invariant polynomial in I1..Il")
    rw.add_argument("group")
    rw.add_argument("polynomial")
    rw.add_argument("--json", action="store_true")
    return parser


def _emit_json(obj, out):
    print(json.dumps(obj, sort_keys=True, separators=(", ", ": ")), file=out)


def _character_for(args, g):
    node = parse_rep(args.rep, g)
    return rep_to_character(node, g)


def _degree_for(args, x):
    if args.max_degree is not None:
        if args.max_degree < 0:
            raise UsageError("--max-degree must be >= 0")
        return args.max_degree
    return max(augmentation(x), 0)


def _cmd_chern(args, out):
    g = parse_group(args.group)
    x = _character_for(args, g)
    d = _degree_for(args, x)
    poly = total_chern(x, d)
    if args.basis == "generators":
        if g.family == TORUS:
            raise NoCanonicalGeneratorsError(
                "no canonical generators for a torus; use --basis monomials"
            )
        if not assert_g_rep(x, g):
            raise InvarianceError(
                "character is not Weyl-invariant; --basis generators needs a G-representation"
            )
        expr = rewrite(poly, g)
        if args.json:
            _emit_json(
                {
                    "group": str(g),
                    "rep": args.rep,
                    "max_degree": d,
                    "basis": "generators",
                    "total_chern": expr.to_json_obj(),
                },
                out,
            )
        else:
            print(expr.to_text(), file=out)
    else:
        if args.json:
            _emit_json(
                {
                    "group": str(g),
                    "rep": args.rep,
                    "max_degree": d,
                    "basis": "monomials",
                    "total_chern": poly.to_json_obj(),
                },
                out,
            )
        else:
            print(poly.to_text(), file=out)
    return 0


def _cmd_ch(args, out):
    g = parse_group(args.group)
    x = _character_for(args, g)
    d = _degree_for(args, x)
    poly = chern_character(x, d)
    if args.json:
        _emit_json(
            {
                "group": str(g),
                "rep": args.rep,
                "max_degree": d,
                "chern_character": poly.to_json_obj(),
            },
            out,
        )
    else:
        print(poly.to_text(), file=out)
    return 0


def _cmd_adams(args, out):
    if args.k < 1:
        raise UsageError("-k must be >= 1")
    g = parse_group(args.group)
    x = _character_for(args, g)
    result = adams_op(args.k, x)
    if args.json:
        _emit_json(
            {"group": str(g), "rep": args.rep, "k": args.k, "result": result.to_json_obj()},
            out,
        )
    else:
        print(result.to_text(), file=out)
    return 0


def _cmd_lambda(args, out):
    if args.p < 0:
        raise UsageError("-p must be >= 0")
    g = parse_group(args.group)
    x = _character_for(args, g)
    result = exterior(x, args.p)
    if args.json:
        _emit_json(
            {"group": str(g), "rep": args.rep, "p": args.p, "result": result.to_json_obj()},
            out,
        )
    else:
        print(result.to_text(), file=out)
    return 0


def _cmd_check_prop(args, out, err):
    if args.p_max < 0:
        raise UsageError("--p-max must be >= 0")
    if args.degree < 1:
        raise UsageError("--degree must be >= 1")
    g = parse_group(args.group)
    report = verify_prop(g, args.p_max, args.degree)
    if args.json:
        _emit_json(report.to_json_obj(), out)
    else:
        print(f"group {report.group}  truncation degree {report.d}", file=out)
        for e in report.entries:
            flag = "equal" if e.equal else "DIFFER"
            print(
                f"p={e.p}  dim_gamma_S={e.dim_gamma_S}  "
                f"dim_gamma_R_cap_S={e.dim_gamma_R_cap_S}  {flag}",
                file=out,
            )
        print("PASS" if report.passed else "FAIL", file=out)
    if not report.passed:
        for e in report.entries:
            for vec in e.witnesses:
                print(
                    f"error[verify-failed]: p={e.p} ambient vector outside "
                    f"Gamma^{e.p}(S): {[str(v) for v in vec]}",
                    file=err,
                )
        return 3
    return 0


def _cmd_rewrite(args, out):
    g = parse_group(args.group)
    f = parse_polynomial(args.polynomial, g.torus_rank)
    expr = rewrite(f, g)
    if args.json:
        _emit_json(
            {
                "group": str(g),
                "input": f.to_json_obj(),
                "generators": expr.to_json_obj(),
            },
            out,
        )
    else:
        print(expr.to_text(), file=out)
    return 0


def run(argv, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "chern":
            return _cmd_chern(args, out)
        if args.command == "ch":
            return _cmd_ch(args, out)
        if args.command == "adams":
            return _cmd_adams(args, out)
        if args.command == "lambda":
            return _cmd_lambda(args, out)
        if args.command == "check-prop":
            return _cmd_check_prop(args, out, err)
        if args.command == "rewrite":
            return _cmd_rewrite(args, out)
        raise UsageError(f"unknown command {args.command!r}")
    except SystemExit as e:  # argparse --help
        return 0 if not e.code else 1
    except (UsageError, ParseError) as e:
        print(f"error[{e.code}]: {e}", file=err)
        return 1
    except ChernRepError as e:
        print(f"error[{e.code}]: {e}", file=err)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))
