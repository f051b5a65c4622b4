"""Command-line front end: enumerate, expand, lifts, report, export-dot, verify."""

import argparse
import sys

from . import catalog
from .errors import (
    DegenerateSubstitution, DomainError, IncompleteCatalog, NotTransitive,
    OrderViolation, OutOfRange, ParseError, ResourceBound, ValidationError,
)
from .generate import EnumerationConstraints

_ERRORS = (OrderViolation, NotTransitive, ResourceBound, DegenerateSubstitution,
           DomainError, OutOfRange, IncompleteCatalog, ParseError,
           ValidationError, OSError, ValueError)


def _emit(records, out):
    if out is None:
        for rec in records:
            print(catalog.record_to_json(rec))
    else:
        catalog.write_records(out, records)


def cmd_enumerate(args):
    constraints = EnumerationConstraints(
        index=args.index, torsion_free=args.torsion_free,
        genus_filter=args.genus)
    _emit(catalog.enumerate_records(constraints), args.out)
    return 0


def cmd_expand(args):
    tf = catalog.read_records(args.infile)
    _emit(catalog.expand_records(tf), args.out)
    return 0


def cmd_lifts(args):
    records = catalog.read_records(args.infile)
    _emit(catalog.add_lift_fields(records), args.out)
    return 0


def cmd_report(args):
    records = catalog.read_records(args.infile)
    for line in catalog.REPORTS[args.table](records):
        print(line)
    return 0


def cmd_export_dot(args):
    records = catalog.read_records(args.infile)
    dot = catalog.export_dot(records, args.id)
    if args.out is None:
        sys.stdout.write(dot)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dot)
    return 0


def cmd_verify(args):
    records = catalog.read_records(args.infile)
    print(catalog.verify_records(records, samples=args.samples))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="modk3",
        description="Catalog of modular subgroups and their K3 realizations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate conjugacy classes")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--torsion-free", action="store_true")
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("expand", help="apply all loop substitutions")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("lifts", help="attach lift counts to records")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_lifts)

    p = sub.add_parser("report", help="print a summary table")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--table", required=True, choices=sorted(catalog.REPORTS))
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("export-dot", help="write one dessin as a DOT graph")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--id", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("verify", help="re-derive and spot-check a catalog")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
