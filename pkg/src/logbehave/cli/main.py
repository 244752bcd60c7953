"""``logbehave`` command line entry point."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from ..engine import EvaluationError
from ..model import ModelError
from .commands import (
    UsageError,
    cmd_catalog_list,
    cmd_classify,
    cmd_crosscheck,
    cmd_eval,
    cmd_limit,
    cmd_quotients,
    cmd_triangle,
    cmd_verify,
)
from .crosscheck import AGAINST
from .report import Result


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _common(p: argparse.ArgumentParser, terms: int = 10) -> None:
    p.add_argument("name", help="catalog entry")
    p.add_argument("--terms", type=int, default=terms, help="number of terms")
    p.add_argument("--k", "--l", dest="k", type=int, help="family parameter k (or rank l)")
    p.add_argument("--nu", type=_rational, help="Gegenbauer parameter nu")
    p.add_argument("--t", type=_rational, help="evaluation point t")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="logbehave", description="Exact log-behavior checks for combinatorial sequences.")
    parser.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("eval", help="exact terms")
    _common(p)
    p.add_argument("--divide-factorial", action="store_true", help="report a(n)/n!")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("quotients", help="q(n) = a(n)/a(n-1)")
    _common(p)
    p.add_argument("--window", help="lo:hi")
    p.add_argument("--divide-factorial", action="store_true")
    p.set_defaults(run=cmd_quotients)

    p = sub.add_parser("classify", help="log-behavior on a window")
    _common(p)
    p.add_argument("--window", help="lo:hi")
    p.add_argument("--divide-factorial", action="store_true", help="classify a(n)/n!")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("limit", help="q(n) against the known limit")
    _common(p, terms=2000)
    p.add_argument("--divide-factorial", action="store_true")
    p.set_defaults(run=cmd_limit)

    p = sub.add_parser("triangle", help="row and column checks on a triangle")
    _common(p, terms=26)
    p.add_argument("--mode", choices=("rows", "columns", "newton"), default="rows")
    p.set_defaults(run=cmd_triangle)

    p = sub.add_parser("crosscheck", help="compare against an independent route")
    _common(p, terms=8)
    p.add_argument("--against", choices=AGAINST, required=True)
    p.set_defaults(run=cmd_crosscheck)

    p = sub.add_parser("verify", help="verify certificate or condition files")
    vsub = p.add_subparsers(dest="kind", parser_class=_Parser)
    for kind in ("sandwich", "calculus"):
        vp = vsub.add_parser(kind)
        vp.add_argument("files", nargs="+", help="DSL files or bundled names")
        vp.add_argument("--jobs", type=int, default=1)
        vp.add_argument("--max-shift", type=int)
        vp.set_defaults(run=cmd_verify)

    p = sub.add_parser("catalog", help="catalog operations")
    csub = p.add_subparsers(dest="action", parser_class=_Parser)
    cp = csub.add_parser("list")
    cp.set_defaults(run=cmd_catalog_list)
    return parser


def _hoist_format(argv: Sequence[str]) -> list:
    """Allow --format anywhere on the command line."""
    argv = list(argv)
    out, fmt = [], []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a == "--format" and i + 1 < len(argv):
            fmt = [a, argv[i + 1]]
            i += 2
            continue
        if a.startswith("--format="):
            fmt = ["--format", a.split("=", 1)[1]]
        else:
            out.append(a)
        i += 1
    return fmt + out


def run_command(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    fmt = "text"
    try:
        args = parser.parse_args(_hoist_format(argv))
        fmt = args.format
        if not hasattr(args, "run"):
            raise UsageError(parser.format_usage().strip())
        result = args.run(args)
    except UsageError as e:
        return _fail(str(e), fmt, out, err)
    except (ModelError, EvaluationError, ValueError) as e:
        return _fail(str(e), fmt, out, err)
    out.write(result.render(fmt))
    return result.code


def _fail(message: str, fmt: str, out, err) -> int:
    if fmt == "json":
        out.write(Result("error", 3, {"message": message}).render("json"))
    else:
        err.write(f"error: {message}\n")
    return 3


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
