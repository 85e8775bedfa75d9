"""Command-line interface: evaluate expressions, build matrices, run
closures and the built-in verification suites.

Exit codes: 0 success/pass, 1 check failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .closure import (
    closure,
    easiness_report,
    member,
    verify_bridge,
)
from .exprs import ExprError, eval_text
from .lincomb import LinComb
from .matrices import T_matrix
from . import suites


def _sign(text: str) -> int:
    return 1 if text == "plus" else -1


def _load_generators(path: str, N: int):
    gens = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            gens.append(eval_text(line, N))
    return gens


def _gens_from_args(args) -> list:
    if args.gen:
        return _load_generators(args.gen, args.dim)
    return [eval_text(e, args.dim) for e in args.expr or []]


def _emit(payload, as_json: bool):
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _emit_text(payload)


def _emit_text(payload, indent=""):
    if isinstance(payload, dict):
        for key, val in payload.items():
            if isinstance(val, (dict, list)):
                print(f"{indent}{key}:")
                _emit_text(val, indent + "  ")
            else:
                print(f"{indent}{key}: {val}")
    elif isinstance(payload, list):
        for val in payload:
            _emit_text(val, indent)
    else:
        print(f"{indent}{payload}")


def cmd_eval(args) -> int:
    x = eval_text(args.expr, args.dim)
    _emit(x.to_json(), args.json)
    return 0


def cmd_matrix(args) -> int:
    x = eval_text(args.expr, args.dim)
    m = T_matrix(x, args.dim)
    payload = {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[str(v) for v in row] for row in m.data],
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        width = max(
            (len(s) for row in payload["entries"] for s in row), default=1
        )
        for row in payload["entries"]:
            print("  ".join(s.rjust(width) for s in row))
    return 0


def _closure_payload(result):
    return {
        "dim": result.N,
        "bound": result.bound,
        "mode": result.mode,
        "grades": {
            f"({k},{l})": result.spans[(k, l)].dimension()
            for (k, l) in result.grades()
        },
    }


def cmd_closure(args) -> int:
    gens = _gens_from_args(args)
    result = closure(gens, args.dim, args.bound, args.mode)
    _emit(_closure_payload(result), args.json)
    return 0


def cmd_member(args) -> int:
    gens = _gens_from_args(args)
    result = closure(gens, args.dim, args.bound, args.mode)
    x = eval_text(args.target, args.dim)
    verdict = member(result, x)
    _emit({"verdict": verdict}, args.json)
    return 0 if verdict == "yes" else 1


def cmd_easy(args) -> int:
    gens = _gens_from_args(args)
    result = closure(gens, args.dim, args.bound, args.mode)
    report = easiness_report(result)
    payload = {
        f"({k},{l})": {
            "easy": entry["easy"],
            "dimension": entry["dimension"],
            "partition_span": entry["partition_span"],
            "witness": (
                entry["witness"].to_json() if entry["witness"] else None
            ),
        }
        for (k, l), entry in report.items()
    }
    all_easy = all(e["easy"] for e in report.values())
    _emit({"easy_at_bound": all_easy, "grades": payload}, args.json)
    return 0


def cmd_bridge(args) -> int:
    gens = _gens_from_args(args)
    report = verify_bridge(gens, args.dim, _sign(args.sign), args.bound)
    payload = {
        f"({k},{l})": entry for (k, l), entry in report.items()
    }
    ok = all(e["equal"] for e in report.values())
    _emit({"equal_at_bound": ok, "grades": payload}, args.json)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    report = suites.run_suite(args.suite, dim=args.dim)
    _emit(report, args.json)
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="partlin",
        description="Exact engine for linear combinations of partitions",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, bound=False, mode=False, gen=False, sign=False):
        p.add_argument("--dim", type=int, required=True, metavar="N")
        p.add_argument("--json", action="store_true")
        if bound:
            p.add_argument("--bound", type=int, default=6, metavar="L")
        if mode:
            p.add_argument(
                "--mode", choices=["ordinary", "reduced"], default="ordinary"
            )
        if gen:
            p.add_argument("--gen", help="file of expressions, one per line")
            p.add_argument(
                "--expr", action="append",
                help="generator expression (repeatable)",
            )
        if sign:
            p.add_argument(
                "--sign", choices=["plus", "minus"], default="plus"
            )

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("matrix", help="matrix of an expression")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("closure", help="graded closure dimensions")
    common(p, bound=True, mode=True, gen=True)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("member", help="closure membership of a target")
    p.add_argument("target")
    common(p, bound=True, mode=True, gen=True)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("easy", help="per-grade easiness report")
    common(p, bound=True, mode=True, gen=True)
    p.set_defaults(func=cmd_easy)

    p = sub.add_parser("bridge", help="compare singled closure images")
    common(p, bound=True, gen=True, sign=True)
    p.set_defaults(func=cmd_bridge)

    p = sub.add_parser("verify", help="run a built-in verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=["examples", "tvk", "functor", "closure-easy", "bridge",
                 "rank"],
    )
    p.add_argument("--dim", type=int, default=None, metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
