"""Command-line front end.

    heronfrieze gen --n 8 --seed 42 --radius 1/1 -o poly.json
    heronfrieze build poly.json [--plane] [-o frieze.json]
    heronfrieze render poly.json [--format ascii|json] [--plane]
    heronfrieze check poly.json [--select all] [--budget N] [-o report.json]

Exit codes: 0 every check that ran holds (skips allowed), 1 at least one
violation, 2 usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .exactnum import as_rat
from .frieze import build_frieze, build_plane_frieze, render_frieze
from .geometry import polygon_from_json, polygon_to_json, random_cyclic_polygon
from .identities.runner import TAGS, parse_selection, run_all_checks

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    """Bad input or path; reported on stderr with exit code 2."""


def _rational(text: str) -> Fraction:
    try:
        v = as_rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc
    if v <= 0:
        raise argparse.ArgumentTypeError("radius must be positive")
    return v


def _budget(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("budget must be at least 1")
    return v


def _selection(text: str) -> set[str]:
    try:
        return parse_selection(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heronfrieze", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random rational cyclic polygon")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--radius", type=_rational, default=Fraction(1))
    g.add_argument("-o", "--output")

    for name, help_ in (("build", "write the frieze entries as JSON"),
                        ("render", "render the frieze as text or JSON")):
        b = sub.add_parser(name, help=help_)
        b.add_argument("input")
        b.add_argument("--plane", action="store_true", help="include the gluing diamonds")
        b.add_argument("-o", "--output")
        if name == "render":
            b.add_argument("--format", choices=("ascii", "json"), default="ascii")

    c = sub.add_parser("check", help="run identity checks and write a JSON report")
    c.add_argument("input")
    c.add_argument("--select", type=_selection, default=set(TAGS),
                   help="comma list of: " + ", ".join(TAGS) + ", all (default all)")
    c.add_argument("--budget", type=_budget, default=None,
                   help="max sampled cases per family (default: all for n <= 10, else 500)")
    c.add_argument("--seed", type=int, default=0, help="seed for sampling")
    c.add_argument("--format", choices=("text", "json"), default="text",
                   help="stdout format when no -o is given")
    c.add_argument("-o", "--output")
    return p


def _check_output_path(path: Optional[str]):
    if path is not None and not Path(path).resolve().parent.is_dir():
        raise CliError(f"output directory does not exist: {Path(path).parent}")


def _read_polygon(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return polygon_from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise CliError(f"{path}: not a valid polygon: {exc}") from exc


def _emit(text: str, path: Optional[str]):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}") from exc


def cmd_gen(args) -> int:
    if args.n < 3:
        raise CliError(f"--n must be at least 3, got {args.n}")
    _check_output_path(args.output)
    P = random_cyclic_polygon(args.n, args.seed, args.radius)
    _emit(json.dumps(polygon_to_json(P), indent=1) + "\n", args.output)
    return EXIT_OK


def _frieze(args):
    P = _read_polygon(args.input)
    return build_plane_frieze(P) if args.plane else build_frieze(P)


def cmd_build(args) -> int:
    _check_output_path(args.output)
    _emit(render_frieze(_frieze(args), "json"), args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    _check_output_path(args.output)
    _emit(render_frieze(_frieze(args), args.format), args.output)
    return EXIT_OK


def summarize(reports) -> list[str]:
    """One line per identity, plus a line per violated case."""
    counts: dict[str, Counter] = {}
    for r in reports:
        counts.setdefault(r.identity, Counter())[r.verdict] += 1
    lines = []
    for ident, c in counts.items():
        verdict = "violated" if c["violated"] else ("holds" if c["holds"] else "skipped")
        lines.append(f"{ident}: {verdict} ({c['holds']} hold, {c['violated']} violated, "
                     f"{c['skipped']} skipped)")
    lines += ["  " + r.summary() for r in reports if r.violated]
    return lines


def cmd_check(args) -> int:
    _check_output_path(args.output)
    P = _read_polygon(args.input)
    reports = run_all_checks(P, args.select, budget=args.budget, seed=args.seed)
    doc = json.dumps([r.to_json() for r in reports], indent=1) + "\n"
    if args.output is not None:
        _emit(doc, args.output)
    if args.output is None and args.format == "json":
        sys.stdout.write(doc)
    else:
        print("\n".join(summarize(reports)))
    return EXIT_VIOLATED if any(r.violated for r in reports) else EXIT_OK


COMMANDS = {"gen": cmd_gen, "build": cmd_build, "render": cmd_render, "check": cmd_check}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        print(f"heronfrieze {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
