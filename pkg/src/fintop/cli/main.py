"""Command line front end.

Exit codes: 0 success, 1 a checked property or suite failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from fintop.classes.closure import RULES, saturate
from fintop.classes.hull import KINDS, in_hull
from fintop.classes.universe import universe
from fintop.cli.dot import to_dot
from fintop.cli.evaluate import evaluate
from fintop.cli.parser import parse, parse_list
from fintop.core.space import PROPERTIES, FinSpace, check_property
from fintop.errors import FinTopError
from fintop.prime import is_prime
from fintop.verify import SUITES, run_suite

OK, FAILED, USAGE = 0, 1, 2
CHECKS = PROPERTIES + ("prime",)


class UsageError(Exception):
    pass


def _space_of(src: str) -> FinSpace:
    v = evaluate(parse(src))
    if not isinstance(v, FinSpace):
        raise UsageError(f"{src!r} is not a finite space")
    return v


def _family(tokens: Sequence[str]) -> list[FinSpace]:
    out = []
    for tok in tokens:
        for e in parse_list(tok):
            v = evaluate(e)
            if not isinstance(v, FinSpace):
                raise UsageError("family members must be finite spaces")
            out.append(v)
    return out


def _space_dict(X: FinSpace) -> dict:
    return {"points": X.n, "opens": X.opens_as_lists()}


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def cmd_eval(args) -> int:
    v = evaluate(parse(args.expr))
    if isinstance(v, FinSpace):
        _emit(args, _space_dict(v),
              f"points: {v.n}\nopens: {json.dumps(v.opens_as_lists(), separators=(',', ':'))}")
    else:
        _emit(args, {"symbolic": str(v)}, str(v))
    return OK


def cmd_check(args) -> int:
    X = _space_of(args.expr)
    prop = args.prop
    if prop.lower() == "prime":
        holds = is_prime(X) is not None
    elif prop.lower() in {p.lower() for p in PROPERTIES}:
        holds = check_property(X, prop)
    else:
        raise UsageError(f"unknown property {prop!r}; expected one of {', '.join(CHECKS)}")
    _emit(args, {"property": prop, "holds": holds}, "true" if holds else "false")
    return OK if holds else FAILED


def cmd_hull(args) -> int:
    if args.vs != "vs":
        raise UsageError("expected: hull KIND EXPR vs FAMILY")
    X = _space_of(args.expr)
    D = _family(args.family)
    r = in_hull(args.kind, X, D)
    _emit(args, {"kind": args.kind, "member": r.member, "reason": r.reason},
          f"{'member' if r.member else 'not a member'}: {r.reason}")
    return OK if r.member else FAILED


def cmd_universe(args) -> int:
    spaces = universe(args.n, args.pred_pos or args.pred, cumulative=args.cumulative)
    listing = [_space_dict(X) for X in spaces]
    text = "\n".join([f"{len(spaces)} spaces"] + [
        json.dumps(d["opens"], separators=(",", ":")) for d in listing])
    _emit(args, {"count": len(spaces), "spaces": listing}, text)
    return OK


def cmd_saturate(args) -> int:
    seeds = _family(args.seeds)
    rules = args.rules.split(",") if args.rules else RULES
    F = saturate(seeds, rules, args.bound or 4, args.copies, args.pred)
    if args.json:
        print(F.to_json())
    else:
        print(f"{len(F.members)} members (rules: {', '.join(sorted(F.rules))}; "
              f"bound {F.point_bound}; predicate {F.pred.name})")
        for M in F.members:
            print(json.dumps(M.opens_as_lists(), separators=(",", ":")))
    return OK


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(n, bound=args.bound, seed=args.seed) for n in names]
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], sort_keys=True, separators=(",", ":")))
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures:
                print(f"  {f}")
    return OK if all(r.passed for r in reports) else FAILED


def cmd_export_dot(args) -> int:
    print(to_dot(_space_of(args.expr), args.name), end="")
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--bound", type=int, default=None, help="point bound for sweeps")
    common.add_argument("--seed", type=int, default=None, help="seed for randomised sweeps")
    common.add_argument("--pred", default="all", choices=["all", "t0", "t1"],
                        help="restrict to a class of spaces")

    p = argparse.ArgumentParser(prog="fintop", description="Finite topological spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("check", parents=[common], help="test a property")
    s.add_argument("expr")
    s.add_argument("prop", metavar="PROP", help=", ".join(CHECKS))
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("hull", parents=[common], help="hull membership")
    s.add_argument("kind", choices=KINDS)
    s.add_argument("expr")
    s.add_argument("vs")
    s.add_argument("family", nargs="+")
    s.set_defaults(func=cmd_hull)

    s = sub.add_parser("universe", parents=[common], help="list spaces up to homeomorphism")
    s.add_argument("n", type=int)
    s.add_argument("pred_pos", nargs="?", choices=["all", "t0", "t1"], metavar="PRED")
    s.add_argument("--cumulative", action="store_true", help="include all sizes 1..N")
    s.set_defaults(func=cmd_universe)

    s = sub.add_parser("saturate", parents=[common], help="close a family under rules")
    s.add_argument("seeds", nargs="+")
    s.add_argument("--rules", default=None, help="comma list from " + ",".join(RULES))
    s.add_argument("--copies", type=int, default=3, help="recorded sum copy bound")
    s.set_defaults(func=cmd_saturate)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=sorted(SUITES) + ["all"])
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("export-dot", parents=[common], help="Hasse diagram in DOT")
    s.add_argument("expr")
    s.add_argument("--name", default="X")
    s.set_defaults(func=cmd_export_dot)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    p = build_parser()
    try:
        args = p.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args)
    except (UsageError, FinTopError, ValueError) as e:
        if getattr(args, "json", False):
            print(json.dumps({"error": type(e).__name__, "message": str(e)},
                             sort_keys=True, separators=(",", ":")))
        else:
            print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
