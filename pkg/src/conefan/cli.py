"""Command-line front end.

Exit codes: 0 yes/found/ok, 1 no/none, 2 usage or input error, 3 budget
exhausted. ``--format json`` prints the same data as one JSON object.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .arith import ArithError, primitive
from .bmap import BMapError, image_fan, linearizing_fan, zeroset_fan
from .combinat import (
    BUDGET_EXHAUSTED,
    CombinatError,
    Verdict,
    abstract_complex,
    check_free_basis,
    complex_isomorphic,
    decide_free,
    format_certificate,
    search_certificate,
    support_dimension_obstruction,
)
from .fan import (
    Fan,
    FanError,
    FanFormatError,
    desingularize,
    fan_validate,
    format_fan,
    parse_fan,
    stellar_subdivide,
)
from .terms import TermSyntaxError, eval_term, linear_pieces, parse_term, split_terms

DEFAULT_BUDGET = 500


class UsageError(Exception):
    pass


def _vec(v) -> str:
    return ",".join(str(c) for c in v)


def _fan_json(f: Fan) -> dict:
    return {"dim": f.ambient_dim, "cones": [[list(g) for g in c.generators] for c in f.cones]}


def _parse_point(text: str, m: int) -> tuple[Fraction, ...]:
    try:
        pt = tuple(Fraction(s.strip()) for s in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational point {text!r}") from None
    if len(pt) != m:
        raise UsageError(f"point {text!r} has {len(pt)} coordinates, expected {m}")
    return pt


def _parse_ray(text: str, n: int) -> tuple[int, ...]:
    try:
        v = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise UsageError(f"bad integer vector {text!r}") from None
    if len(v) != n:
        raise UsageError(f"ray {text!r} is not in dimension {n}")
    return v


def _read_fan(path: str) -> Fan:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        return parse_fan(text)
    except (FanFormatError, FanError) as e:
        raise UsageError(f"{path}: {e}") from None


def _terms(text: str, m: int):
    return [parse_term(t, m) for t in split_terms(text)]


class Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.data: dict = {}

    def render(self) -> str:
        if self.fmt == "json":
            return json.dumps(self.data, sort_keys=True) + "\n"
        return "".join(line if line.endswith("\n") else line + "\n" for line in self.lines)


def cmd_eval(args, out: Output) -> int:
    t = parse_term(args.term, args.vars)
    v = eval_term(t, _parse_point(args.point, args.vars))
    out.lines.append(str(v))
    out.data = {"value": str(v)}
    return 0


def cmd_pieces(args, out: Output) -> int:
    ps = linear_pieces(parse_term(args.term, args.vars), args.vars)
    out.lines.extend(_vec(p) for p in ps)
    out.data = {"pieces": [list(p) for p in ps]}
    return 0


def cmd_zeroset(args, out: Output) -> int:
    f = zeroset_fan(parse_term(args.term, args.vars), args.vars)
    out.lines.append(format_fan(f))
    out.data = {"fan": _fan_json(f)}
    return 0


def cmd_range(args, out: Output) -> int:
    f = image_fan(linearizing_fan(_terms(args.terms, args.vars), args.vars))
    out.lines.append(format_fan(f))
    out.data = {"fan": _fan_json(f)}
    return 0


def cmd_fan(args, out: Output) -> int:
    if args.action == "validate":
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {args.file}: {e.strerror}") from None
        try:
            f = parse_fan(text, validate=False)
        except FanFormatError as e:
            raise UsageError(f"{args.file}: {e}") from None
        v = fan_validate(f)
        if v is None:
            out.lines.append("ok")
            out.data = {"ok": True}
            return 0
        out.lines.append(f"violation: {v}")
        out.data = {
            "ok": False,
            "cones": [[list(g) for g in v.first.generators], [list(g) for g in v.second.generators]],
            "point": list(v.point),
        }
        return 1
    f = _read_fan(args.file)
    if args.action == "regularize":
        g = desingularize(f)
    else:
        if args.at is None:
            raise UsageError("fan stellar needs --at RAY")
        ray = _parse_ray(args.at, f.ambient_dim)
        if not any(ray):
            raise UsageError("ray must be nonzero")
        g = stellar_subdivide(f, primitive(ray))
    out.lines.append(format_fan(g))
    out.data = {"fan": _fan_json(g)}
    return 0


def _verdict(v: Verdict, out: Output) -> int:
    if v.answer:
        head = f"YES: range covers R^{v.n}"
    elif v.reason == "dimension":
        head = f"NO: {v.n} terms in {v.m} variables, n > m"
    else:
        head = f"NO: witness {_vec(v.witness)} lies outside the range"
    out.lines.append(head)
    if v.fan is not None:
        out.lines.append(format_fan(v.fan))
    out.data = {
        "answer": "yes" if v.answer else "no",
        "reason": v.reason,
        "n": v.n,
        "m": v.m,
        "witness": list(v.witness) if v.witness is not None else None,
        "fan": _fan_json(v.fan) if v.fan is not None else None,
    }
    return 0 if v.answer else 1


def cmd_decide_free(args, out: Output) -> int:
    return _verdict(decide_free(_terms(args.terms, args.vars), args.vars), out)


def cmd_check_basis(args, out: Output) -> int:
    n = len(split_terms(args.terms))
    return _verdict(check_free_basis(_terms(args.terms, n), n), out)


def cmd_complex_iso(args, out: Output) -> int:
    a, b = _read_fan(args.fan_a), _read_fan(args.fan_b)
    iso = complex_isomorphic(abstract_complex(a), abstract_complex(b))
    if iso is None:
        out.lines.append("none")
        out.data = {"iso": None}
        return 1
    out.lines.extend(f"map {_vec(x)} -> {_vec(y)}" for x, y in iso.pairs)
    out.data = {"iso": [[list(x), list(y)] for x, y in iso.pairs]}
    return 0


def _default_budget() -> int:
    raw = os.environ.get("CONEFAN_BUDGET_DEFAULT")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CONEFAN_BUDGET_DEFAULT must be an integer, got {raw!r}") from None


def cmd_certificate(args, out: Output) -> int:
    a, b = _read_fan(args.fan_a), _read_fan(args.fan_b)
    budget = args.budget if args.budget is not None else _default_budget()
    if budget < 0:
        raise UsageError("budget must be nonnegative")
    if a.ambient_dim != b.ambient_dim or support_dimension_obstruction(a, b):
        out.lines.append("none")
        out.data = {"result": "none", "reason": "support dimensions differ"}
        return 1
    res = search_certificate(a, b, budget)
    if res is BUDGET_EXHAUSTED:
        out.lines.append("budget-exhausted")
        out.data = {"result": "budget-exhausted", "budget": budget}
        return 3
    out.lines.append(format_certificate(res))
    out.data = {
        "result": "certificate",
        "delta": _fan_json(res.delta),
        "nabla": _fan_json(res.nabla),
        "map": [[list(x), list(y)] for x, y in res.iso.pairs],
    }
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="conefan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def positive(s: str) -> int:
        v = int(s)
        if v < 1:
            raise argparse.ArgumentTypeError("must be >= 1")
        return v

    s = sub.add_parser("eval", parents=[common], help="evaluate a term at a rational point")
    s.add_argument("--term", required=True)
    s.add_argument("--vars", type=positive, required=True)
    s.add_argument("--point", required=True)
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("pieces", parents=[common], help="integer linear pieces of a term")
    s.add_argument("--term", required=True)
    s.add_argument("--vars", type=positive, required=True)
    s.set_defaults(func=cmd_pieces)

    s = sub.add_parser("zeroset", parents=[common], help="regular fan of a term's zero set")
    s.add_argument("--term", required=True)
    s.add_argument("--vars", type=positive, required=True)
    s.set_defaults(func=cmd_zeroset)

    s = sub.add_parser("range", parents=[common], help="regular fan of the range of a term tuple")
    s.add_argument("--terms", required=True)
    s.add_argument("--vars", type=positive, required=True)
    s.set_defaults(func=cmd_range)

    s = sub.add_parser("fan", parents=[common], help="fan file operations")
    s.add_argument("action", choices=("validate", "regularize", "stellar"))
    s.add_argument("file")
    s.add_argument("--at", help="ray for stellar subdivision, e.g. 1,1")
    s.set_defaults(func=cmd_fan)

    s = sub.add_parser("decide-free", parents=[common], help="is gen(t1..tn) free of rank n?")
    s.add_argument("--terms", required=True)
    s.add_argument("--vars", type=positive, required=True)
    s.set_defaults(func=cmd_decide_free)

    s = sub.add_parser("check-basis", parents=[common], help="do n terms in n variables freely generate?")
    s.add_argument("--terms", required=True)
    s.set_defaults(func=cmd_check_basis)

    s = sub.add_parser("complex-iso", parents=[common], help="isomorphism of two fans' complexes")
    s.add_argument("--fan-a", required=True)
    s.add_argument("--fan-b", required=True)
    s.set_defaults(func=cmd_complex_iso)

    s = sub.add_parser("certificate", parents=[common], help="search a B-homeomorphism certificate")
    s.add_argument("--fan-a", required=True)
    s.add_argument("--fan-b", required=True)
    s.add_argument("--budget", type=int)
    s.set_defaults(func=cmd_certificate)
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    out = Output(args.format)
    try:
        code = args.func(args, out)
    except TermSyntaxError as e:
        print(f"error: term: {e}", file=stderr)
        return 2
    except (UsageError, FanError, BMapError, CombinatError, ArithError) as e:
        print(f"error: {e}", file=stderr)
        return 2
    stdout.write(out.render())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
