"""``pgacalc`` command line: eval, batch, selftest."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import checks
from .evaluate import error_record, evaluate_text, format_value
from .sexpr import ExprError


def _render_error(message: str, structured: bool, lineno: int | None = None) -> str:
    detail = f"line {lineno}: {message}" if lineno is not None else message
    if structured:
        return json.dumps(error_record(detail), sort_keys=True)
    return f"error: {detail}"


def run_expression(text: str, structured: bool = False) -> tuple[bool, str]:
    """Evaluate one expression; returns (ok, output line)."""
    mode = "structured" if structured else "text"
    try:
        return True, format_value(evaluate_text(text), mode)
    except ExprError as exc:
        return False, _render_error(str(exc), structured)


def cmd_eval(args) -> int:
    ok, out = run_expression(args.expr, args.structured)
    print(out)
    return 0 if ok else 1


def _strip_comment(line: str) -> str:
    return line.split(";", 1)[0].strip()


def run_batch(lines, structured: bool = False) -> tuple[int, list[str]]:
    """Evaluate one expression per line; blank and comment-only lines are skipped."""
    errors, out = 0, []
    mode = "structured" if structured else "text"
    for lineno, raw in enumerate(lines, start=1):
        if not _strip_comment(raw):
            continue
        try:
            out.append(format_value(evaluate_text(raw), mode))
        except ExprError as exc:
            errors += 1
            msg = exc.message if exc.line is None else f"{exc.message} (column {exc.col})"
            out.append(_render_error(msg, structured, lineno))
    return errors, out


def cmd_batch(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        print(_render_error(f"cannot read {args.path}: {exc.strerror}", args.structured))
        return 2
    errors, out = run_batch(lines, args.structured)
    for line in out:
        print(line)
    return 1 if errors else 0


def cmd_selftest(args) -> int:
    cfg = checks.SuiteConfig()
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    if args.quick:
        cfg = replace(cfg, algebra_cases=50, quadrance_cases=100, spread_cases=100,
                      triangle_cases=50, thales_cases=20, isometry_cases=30,
                      rotor_cases=30, misc_cases=30)
    results = checks.run_all(cfg)
    for r in results:
        print(r.summary())
    passed = sum(r.passed for r in results)
    print(f"{passed} passed, {len(results) - passed} failed")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--structured", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON record per result")
    parser = argparse.ArgumentParser(
        prog="pgacalc", parents=[common],
        description="Exact rational trigonometry calculator over 2D projective geometric algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("batch", parents=[common], help="evaluate a file, one expression per line")
    p.add_argument("path")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("selftest", parents=[common], help="run the built-in identity suites")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--quick", action="store_true", help="smaller sample sizes")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "structured"):
        args.structured = False
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
