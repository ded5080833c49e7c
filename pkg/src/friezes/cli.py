"""Command-line interface.

Exit codes: 0 success or affirmative verdict, 1 negative verdict (invalid,
not embeddable, not found), 2 usage, parse or I/O error.
"""

import argparse
import sys

from . import formats
from .core import pattern_rows, restrict, verify_ptolemy
from .criterion import is_embeddable
from .errors import (BadSubset, FriezeError, NotATriangulation,
                     NotConwayCoxeter, NotEmbeddable, ParseError,
                     UnsupportedFormat, ValidationError)
from .extender import ExplicitPolicy, embed, enumerate_embeddings
from .oracle import occurs_in_cc
from .render import render
from .triangulation import frieze_of, triangulation_of

OK, NEGATIVE, USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage("cannot read %s: %s" % (path, exc.strerror))


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise _Usage("cannot write %s: %s" % (path, exc.strerror))


def _csv(xs):
    return ",".join(str(x) for x in xs)


def report_lines(report) -> list:
    lines = ["verdict\t%s" % ("embeddable" if report.verdict else "not-embeddable")]
    if report.gcd_ok:
        lines.append("gcd_condition\tok")
    else:
        w = report.gcd_witness
        lines.append("gcd_condition\tfail\tvertices=%s\tgcds=%s"
                     % (_csv(w.vertices), _csv(w.gcds)))
    if report.valuation_ok:
        lines.append("valuation_condition\tok")
    else:
        w = report.valuation_witness
        lines.append("valuation_condition\tfail\tp=%d\tvertices=%s\tm=%d"
                     % (w.p, _csv(w.vertices), w.m))
    return lines


def cmd_validate(args):
    f = formats.parse_frieze(_read(args.file), validate=False)
    report = verify_ptolemy(f)
    lines = ["valid" if report.ok else "invalid"]
    for i, j, k, l, lhs, rhs in report.violations:
        lines.append("violation\t%d,%d,%d,%d\t%d\t%d" % (i, j, k, l, lhs, rhs))
    _write(None, "\n".join(lines) + "\n")
    return OK if report.ok else NEGATIVE


def cmd_check(args):
    f = formats.parse_frieze(_read(args.file))
    report = is_embeddable(f)
    _write(None, "\n".join(report_lines(report)) + "\n")
    if args.figure:
        from .figures import save_figure
        hl = ()
        if report.valuation_witness:
            hl = report.valuation_witness.vertices
        elif report.gcd_witness:
            hl = report.gcd_witness.vertices
        save_figure(f, args.figure, highlight=hl)
    return OK if report.verdict else NEGATIVE


def cmd_embed(args):
    f = formats.parse_frieze(_read(args.file))
    policy = None
    if args.choices:
        policy = ExplicitPolicy(formats.parse_choices(_read(args.choices)))
    try:
        if args.all:
            es = enumerate_embeddings(f, args.limit, policy)
            _write(args.output, formats.serialize_embeddings(f, es))
        else:
            es = [embed(f, policy)]
            _write(args.output, formats.serialize_embedding(f, es[0]))
    except NotEmbeddable as exc:
        sys.stderr.write("not embeddable\n")
        sys.stderr.write("\n".join(report_lines(exc.report)) + "\n")
        return NEGATIVE
    if args.figure:
        from .figures import save_figure
        save_figure(es[0].cc, args.figure, highlight=es[0].vertex_map,
                    overlay=es[0].tri)
    return OK


def cmd_restrict(args):
    f = formats.parse_frieze(_read(args.file))
    try:
        vertices = [int(v) for v in args.vertices.split(",")]
    except ValueError:
        raise _Usage("--vertices expects a comma separated list of integers")
    _write(args.output, formats.serialize_frieze(restrict(f, vertices)))
    return OK


def cmd_from_triangulation(args):
    t = formats.parse_triangulation(_read(args.file))
    _write(args.output, formats.serialize_frieze(frieze_of(t)))
    return OK


def cmd_to_triangulation(args):
    f = formats.parse_frieze(_read(args.file))
    try:
        t = triangulation_of(f)
    except (NotConwayCoxeter, NotATriangulation) as exc:
        sys.stderr.write("%s\n" % exc)
        return NEGATIVE
    _write(args.output, formats.serialize_triangulation(t))
    return OK


def cmd_oracle(args):
    f = formats.parse_frieze(_read(args.file))
    w = occurs_in_cc(f, args.max_n)
    if w is None:
        _write(None, "not-found\tmax_n=%d\n" % args.max_n)
        return NEGATIVE
    lines = ["found\tn_cc=%d" % w.n_cc,
             "vertex_subset\t%s" % _csv(w.vertex_subset),
             "placement\toffset=%d\treflected=%s" % (w.offset, str(w.reflected).lower()),
             "diagonals\t%s" % ",".join("%d-%d" % d for d in w.tri.diagonals)]
    _write(None, "\n".join(lines) + "\n")
    return OK


def cmd_pattern(args):
    f = formats.parse_frieze(_read(args.file))
    if args.rows < 1:
        raise _Usage("--rows must be at least 1")
    w = pattern_rows(f, args.first, args.rows)
    lines = ["%d\t%s" % (i, "\t".join(str(x) for x in row))
             for i, row in zip(w.row_indices(), w.rows)]
    _write(args.output, "\n".join(lines) + "\n")
    return OK


def cmd_render(args):
    obj = formats.parse_any(_read(args.file))
    if args.format in ("png", "pdf"):
        if not args.output or args.output == "-":
            raise _Usage("--format %s needs -o FILE" % args.format)
        from .figures import save_figure
        save_figure(obj, args.output)
        return OK
    _write(args.output, render(obj, args.format))
    return OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="friezes",
        description="Friezes with coefficients and Conway-Coxeter embeddings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check all Ptolemy relations")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", help="embeddability criterion with witnesses")
    p.add_argument("file")
    p.add_argument("--figure", metavar="PATH", help="also draw the frieze (png/pdf)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("embed", help="construct a Conway-Coxeter embedding")
    p.add_argument("file")
    p.add_argument("--all", action="store_true", help="enumerate embeddings")
    p.add_argument("--limit", type=int, default=10)
    p.add_argument("--choices", metavar="FILE", help="choices-v1 document")
    p.add_argument("-o", "--output")
    p.add_argument("--figure", metavar="PATH", help="also draw the result (png/pdf)")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("restrict", help="restrict to a vertex subset")
    p.add_argument("file")
    p.add_argument("--vertices", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("from-triangulation", help="tri-v1 -> fwc-v1")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_from_triangulation)

    p = sub.add_parser("to-triangulation", help="fwc-v1 (Conway-Coxeter) -> tri-v1")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_to_triangulation)

    p = sub.add_parser("oracle", help="brute-force occurrence search")
    p.add_argument("file")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("pattern", help="print rows of the frieze pattern")
    p.add_argument("file")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--first", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("render", help="draw a frieze or triangulation")
    p.add_argument("file")
    p.add_argument("--format", choices=["svg", "dot", "png", "pdf"], default="svg")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        return args.func(args)
    except (_Usage, ParseError, UnsupportedFormat) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return USAGE
    except (ValidationError, BadSubset) as exc:
        sys.stderr.write("invalid: %s\n" % exc)
        return NEGATIVE if isinstance(exc, ValidationError) else USAGE
    except FriezeError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
