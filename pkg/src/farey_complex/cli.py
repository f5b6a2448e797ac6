"""Command line front end.

Usage:
  farey-complex lines  --m 2 --n 2 [-o lines.json]
  farey-complex cells  --m 2 --n 2 [-o cells.json]
  farey-complex verify --m 4 --n 3 [--three-point 500 --seed 0] [-o report.json]
  farey-complex window --m 2 --n 2 --window -1 2 -1 2 [--family window|unit]
  farey-complex render --m 4 --n 3 -o farey_4_3.svg

Exit status: 0 on success, 1 when a verification finds violations,
2 on bad usage, 3 on I/O failure.
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from . import arrangement as arr
from .farey_lines import UNIT_SQUARE, FareyParams, RectWindow, enumerate_lines, lines_to_json
from .render import Style, render_svg
from .verifier import harvest_triples, three_point_line, verify_all, window_scan

EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


# let "-1/2" through as a value, like argparse already does for "-1" and "-0.5"
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="farey-complex", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    _add_parser = sub.add_parser

    def add_parser(*args, **kwargs) -> argparse.ArgumentParser:
        p = _add_parser(*args, **kwargs)
        p._negative_number_matcher = _NEGATIVE_RATIONAL
        return p

    sub.add_parser = add_parser

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--m", type=_positive_int, required=True)
        p.add_argument("--n", type=_positive_int, required=True)
        p.add_argument("-o", "--output", default="-", help="output path, '-' for stdout")

    def windowed(p: argparse.ArgumentParser, required: bool) -> None:
        p.add_argument("--window", nargs=4, type=_rational, required=required,
                       metavar=("XMIN", "XMAX", "YMIN", "YMAX"),
                       help="rational bounds, e.g. -2 3 -1/2 5/2")
        p.add_argument("--family", choices=("window", "unit"), default=None,
                       help="lines meeting the window, or only those meeting the unit square")

    common(sub.add_parser("lines", help="write the line family as JSON"))
    p = sub.add_parser("cells", help="write the bounded cells as JSON")
    common(p)
    p = sub.add_parser("verify", help="check every cell of the complex")
    common(p)
    p.add_argument("--three-point", type=int, default=0, metavar="N",
                   help="also test the separating-line construction on N harvested triples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--denominator-mode", choices=("either", "both"), default="either")
    p = sub.add_parser("window", help="check interior cells of a window")
    common(p)
    windowed(p, required=True)
    p = sub.add_parser("render", help="draw the complex as SVG")
    common(p)
    windowed(p, required=False)
    p.add_argument("--size", type=_positive_int, default=Style.size)
    p.add_argument("--stroke-width", type=float, default=Style.stroke_width)
    p.add_argument("--triangle-fill", default=Style.triangle_fill)
    p.add_argument("--quad-fill", default=Style.quad_fill)
    return parser


def _window(parser: argparse.ArgumentParser, bounds) -> RectWindow:
    if bounds is None:
        return UNIT_SQUARE
    try:
        return RectWindow(*bounds)
    except ValueError as exc:
        parser.error(str(exc))


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    params = FareyParams(args.m, args.n)
    status = 0

    if args.command == "lines":
        text = lines_to_json(enumerate_lines(params)) + "\n"
    elif args.command == "cells":
        s = arr.build(enumerate_lines(params), UNIT_SQUARE)
        text = arr.subdivision_to_json(s) + "\n"
    elif args.command == "verify":
        report = verify_all(params, denominator_mode=args.denominator_mode)
        doc = report.to_dict()
        if args.three_point:
            s = arr.build(enumerate_lines(params), UNIT_SQUARE)
            triples = harvest_triples(s, params, args.three_point, random.Random(args.seed))
            failures = 0
            for a, b, c in triples:
                try:
                    three_point_line(a, b, c, params)
                except (AssertionError, ValueError):
                    failures += 1
            doc["three_point"] = {"samples": len(triples), "failures": failures, "seed": args.seed}
            if failures:
                doc["ok"] = False
        text = json.dumps(doc, indent=1) + "\n"
        status = 0 if doc["ok"] else EXIT_VIOLATIONS
    elif args.command == "window":
        report = window_scan(params, _window(parser, args.window), args.family or "window")
        text = report.to_json() + "\n"
        status = 0 if report.ok else EXIT_VIOLATIONS
    else:
        window = _window(parser, args.window)
        family = args.family or ("unit" if args.window is None else "window")
        style = Style(size=args.size, stroke_width=args.stroke_width,
                      triangle_fill=args.triangle_fill, quad_fill=args.quad_fill)
        text = render_svg(params, window, family, style)

    try:
        _write(args.output, text)
    except OSError as exc:
        print(f"farey-complex: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
