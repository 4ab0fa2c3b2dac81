"""Command line interface.

Exit codes: 0 when every emitted check passes, 1 when a verifier fails,
2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .builtin import EXAMPLES, builtin_example
from .document import ensure_valid, parse_manifold
from .errors import AcbError
from .report import SECTIONS, run_pipeline, substitute_and_rerun, substitute_manifold
from .scalars import as_fraction

DEFAULT_SECTIONS = {
    "validate": ("validation",),
    "classify": ("validation", "classification"),
    "soliton": ("classification", "fits"),
    "verify": ("theorems",),
    "report": SECTIONS,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(2)


def build_parser():
    parser = _Parser(prog="acbsoliton", description="Ricci-like soliton analysis of "
                     "almost contact B-metric Lie groups")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in DEFAULT_SECTIONS:
        p = sub.add_parser(name)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", metavar="PATH", help="JSON manifold document")
        src.add_argument("--example", choices=sorted(EXAMPLES), help="built-in manifold")
        p.add_argument("--set", dest="assignments", action="append", default=[],
                       metavar="PARAM=RATIONAL", help="substitute a parameter value (repeatable)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--section", action="append", choices=SECTIONS,
                       help="restrict output to a section (repeatable)")
    return parser


def _assignment(items):
    out = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise AcbError(f"--set expects PARAM=RATIONAL, got {item!r}")
        try:
            out[name.strip()] = as_fraction(value)
        except (ValueError, ZeroDivisionError):
            raise AcbError(f"--set value for {name!r} is not a rational number: {value!r}") from None
    return out


def _load(args):
    if args.example:
        m = builtin_example(args.example)
    else:
        try:
            with open(args.input, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise AcbError(f"cannot read {args.input}: {exc.strerror}") from None
        m = parse_manifold(data, validate=False)
    return m


def main(argv=None):
    args = build_parser().parse_args(argv)
    names = tuple(args.section) if args.section else DEFAULT_SECTIONS[args.command]
    try:
        m = _load(args)
        assignment = _assignment(args.assignments)
        if args.command == "validate":
            report = run_pipeline_validation_only(m, assignment)
        else:
            ensure_valid(m)
            report = substitute_and_rerun(m, assignment) if assignment else run_pipeline(m)
    except AcbError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = report.to_json(names) if args.format == "json" else report.to_text(names)
    sys.stdout.write(out)
    if args.command == "validate":
        return 0 if report.sections["validation"]["ok"] else 2
    return 1 if report.failures(names) else 0


def run_pipeline_validation_only(m, assignment):
    from .report import Report, _validation

    if assignment:
        m = substitute_manifold(m, assignment)
    header = {"name": m.name, "dim": m.dim, "n": m.n, "params": list(m.params)}
    if m.assignment:
        header["assignment"] = {k: str(v) for k, v in m.assignment.items()}
    return Report(header, {"validation": _validation(m)})


if __name__ == "__main__":
    sys.exit(main())
