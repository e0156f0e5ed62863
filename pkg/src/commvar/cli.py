"""Command-line front end (``commvar``).

Exit codes: 0 when every check passes, 1 when some check fails, 2 on usage
errors (bad flags, unknown labels).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .chevalley import chevalley_algebra
from .commuting import adding_diagonals_dim, centralizer, tspace, tspace_padded
from .exactla import as_fraction
from .gradings import grade_by, graded_centralizer_dims
from .matrixreal import parse_algebra, example_point
from .reproduction import GROUP_ALIASES, GROUPS, run_checks
from .rootsys import build_root_system, embeddings, parse_type


class UsageError(Exception):
    pass


def _int_list(text: str) -> list:
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma-separated list of integers: %r" % text)
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("m values must be positive integers")
    return values


def _fraction_text(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)


# ---------------------------------------------------------------------------
# rendering


def _render_records(records, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in records], indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check_id", "expected", "computed", "origin", "pass"])
        for r in records:
            w.writerow([r.check_id, "" if r.expected is None else r.expected, r.computed, r.origin,
                        "pass" if r.passed else "FAIL"])
        return buf.getvalue()
    width = max((len(r.check_id) for r in records), default=10)
    lines = ["%-*s  %10s  %10s  %-8s  %s" % (width, "check", "expected", "computed", "origin", "result")]
    for r in records:
        exp = "-" if r.expected is None else str(r.expected)
        lines.append("%-*s  %10s  %10s  %-8s  %s" % (width, r.check_id, exp, r.computed, r.origin,
                                                     "pass" if r.passed else "FAIL"))
    n_fail = sum(1 for r in records if not r.passed)
    lines.append("%d checks, %d failed" % (len(records), n_fail))
    return "\n".join(lines) + "\n"


def _render_mapping(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in doc.items():
            w.writerow([k, json.dumps(v) if isinstance(v, (dict, list)) else v])
        return buf.getvalue()
    return "".join("%s: %s\n" % (k, json.dumps(v) if isinstance(v, (dict, list)) else v)
                   for k, v in doc.items())


# ---------------------------------------------------------------------------
# label resolution


def _algebra(text: str):
    try:
        return parse_algebra(text)
    except ValueError as exc:
        raise UsageError(str(exc))


def _point(label: str, ls):
    """Resolve a point label against the algebra named on the command line."""
    s = None
    if label.startswith("so4s-x1") and "(" not in label:
        mat = getattr(ls, "matrix_algebra", None)
        if mat is None or mat.family != "so" or mat.n % 4:
            raise UsageError("so4s-x1 needs an algebra so_n with n divisible by 4")
        s = mat.n // 4
    try:
        p = example_point(label, s=s)
    except ValueError as exc:
        raise UsageError(str(exc))
    if p.algebra is not ls:
        raise UsageError("point %s does not live in algebra %s" % (label, ls.name))
    return p


def _element_from_file(path: str, ls):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError("cannot read element file %s: %s" % (path, exc))
    coeffs = doc.get("coefficients") if isinstance(doc, dict) else doc
    if not isinstance(coeffs, list) or len(coeffs) != ls.dim:
        raise UsageError("element file must hold %d coefficients" % ls.dim)
    try:
        vals = [Fraction(c) if isinstance(c, str) else as_fraction(c) for c in coeffs]
    except (TypeError, ValueError) as exc:
        raise UsageError("bad coefficient in element file: %s" % exc)
    return ls.element(vals)


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    groups = args.section or None
    try:
        records = run_checks(groups, args.m)
    except ValueError as exc:
        raise UsageError(str(exc))
    sys.stdout.write(_render_records(records, args.format))
    return 0 if all(r.passed for r in records) else 1


def cmd_tspace(args) -> int:
    ls = _algebra(args.algebra)
    p = _point(args.point, ls)
    m = args.m if args.m is not None else len(p.tuple)
    if m < len(p.tuple):
        raise UsageError("m=%d is shorter than the %d-tuple %s" % (m, len(p.tuple), p.label))
    dim = tspace_padded(ls, p.tuple, m)
    doc = {"algebra": ls.name, "point": p.label, "m": m, "tspace_dim": dim}
    if args.basis:
        padded = tuple(p.tuple) + tuple(ls.zero() for _ in range(m - len(p.tuple)))
        rep = tspace(ls, padded)
        doc["basis"] = [[_fraction_text(c) for c in v] for v in rep.basis.vectors()]
    if args.format == "text" and not args.basis:
        sys.stdout.write("%d\n" % dim)
    else:
        sys.stdout.write(_render_mapping(doc, args.format))
    return 0


def cmd_centralizer(args) -> int:
    ls = _algebra(args.algebra)
    if args.element_file:
        x = _element_from_file(args.element_file, ls)
        label = args.element_file
    elif args.x:
        p = _point(args.x, ls)
        x, label = p.tuple[0], p.label
    else:
        raise UsageError("give --x LABEL or --element-file PATH")
    C = centralizer(ls, x)
    if args.format == "text":
        sys.stdout.write("%d\n" % C.dim)
    else:
        sys.stdout.write(_render_mapping({"algebra": ls.name, "element": label,
                                          "centralizer_dim": C.dim}, args.format))
    return 0


def cmd_grading(args) -> int:
    ls = _algebra(args.algebra)
    x = _point(args.x, ls).tuple[0]
    h = _point(args.h, ls).tuple[0]
    g = grade_by(ls, h)
    cent = graded_centralizer_dims(ls, x, h, g)
    if args.format == "text":
        lines = ["d = %d" % g.d, "%6s  %8s  %12s" % ("degree", "dim L_i", "dim L_i∩C(x)")]
        for i in range(-g.d, g.d + 1):
            lines.append("%6d  %8d  %12d" % (i, g.piece(i).dim, cent[i]))
        lines.append("dim C(x) = %d" % sum(cent.values()))
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        doc = {"algebra": ls.name, "d": g.d,
               "pieces": {str(i): g.piece(i).dim for i in range(-g.d, g.d + 1)},
               "graded_centralizer": {str(i): v for i, v in cent.items()},
               "centralizer_dim": sum(cent.values())}
        sys.stdout.write(_render_mapping(doc, args.format))
    return 0


def cmd_adding_diagonals(args) -> int:
    try:
        amb = build_root_system(args.ambient)
        sub = parse_type(args.sub)
    except ValueError as exc:
        raise UsageError(str(exc))
    if not embeddings(amb, sub):
        raise UsageError("%s is not a sub-diagram of %s" % (sub, amb.type))
    value = adding_diagonals_dim(args.dim_cprime, amb.type.dimension, sub.dimension, args.m,
                                 (amb.rank, sub.rank))
    if args.format == "text":
        sys.stdout.write("%d\n" % value)
    else:
        sys.stdout.write(_render_mapping({"ambient": str(amb.type), "sub": str(sub), "m": args.m,
                                          "dim_cprime": args.dim_cprime, "dim_c": value}, args.format))
    return 0


def _dump_point(label: str) -> str:
    try:
        p = example_point(label)
    except ValueError as exc:
        raise UsageError(str(exc))
    mat = getattr(p.algebra, "matrix_algebra", None)
    if mat is not None:
        out = []
        for x in p.tuple:
            M = mat.matrix(x)
            out.append([[[M[r, c].numerator, M[r, c].denominator] for c in range(M.cols)]
                        for r in range(M.rows)])
        return json.dumps(out) + "\n"
    # Chevalley points have no matrices: emit coefficient rows over the basis.
    ls = p.algebra
    doc = {"basis": [ls.label_str(i) for i in range(ls.dim)],
           "elements": [[[c.numerator, c.denominator] for c in x.coeffs] for x in p.tuple]}
    return json.dumps(doc) + "\n"


def cmd_dump(args) -> int:
    done = False
    if args.dump_roots:
        try:
            sys.stdout.write(build_root_system(args.dump_roots).to_json() + "\n")
        except ValueError as exc:
            raise UsageError(str(exc))
        done = True
    if args.dump_constants:
        try:
            ls = chevalley_algebra(parse_type(args.dump_constants))
        except ValueError as exc:
            raise UsageError(str(exc))
        sys.stdout.write(ls.to_csv())
        done = True
    if args.dump_point:
        sys.stdout.write(_dump_point(args.dump_point))
        done = True
    if not done:
        raise UsageError("nothing to dump: give --dump-roots, --dump-constants or --dump-point")
    return 0


# ---------------------------------------------------------------------------


def _format_flag(p):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")


def _dump_flags(p):
    p.add_argument("--dump-roots", metavar="TYPE", help="root system as JSON")
    p.add_argument("--dump-constants", metavar="TYPE", help="structure constants as CSV")
    p.add_argument("--dump-point", metavar="LABEL", help="an example point as JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commvar",
        description="Exact Lie-algebra computations for commuting varieties.")
    _dump_flags(parser)
    sub = parser.add_subparsers(dest="command")

    v = sub.add_parser("verify-paper", help="recompute every golden value")
    v.add_argument("--section", action="append", metavar="GROUP",
                   help="check group (%s; aliases %s); repeatable"
                        % (", ".join(GROUPS), ", ".join(GROUP_ALIASES)))
    v.add_argument("--m", type=_int_list, default=None, help="comma-separated m values")
    _format_flag(v)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tspace", help="T-space dimension at an example point")
    t.add_argument("--algebra", required=True)
    t.add_argument("--point", required=True)
    t.add_argument("--m", type=int, default=None)
    t.add_argument("--basis", action="store_true", help="also print a basis")
    _format_flag(t)
    t.set_defaults(func=cmd_tspace)

    g = sub.add_parser("grading", help="ad-h grading and graded centralizer")
    g.add_argument("--algebra", required=True)
    g.add_argument("--x", required=True)
    g.add_argument("--h", required=True)
    _format_flag(g)
    g.set_defaults(func=cmd_grading)

    c = sub.add_parser("centralizer", help="centralizer dimension")
    c.add_argument("--algebra", required=True)
    c.add_argument("--x", default=None)
    c.add_argument("--element-file", default=None, help="JSON coefficient vector over the basis")
    _format_flag(c)
    c.set_defaults(func=cmd_centralizer)

    a = sub.add_parser("adding-diagonals", help="lift a component dimension to the ambient algebra")
    a.add_argument("--ambient", required=True)
    a.add_argument("--sub", required=True)
    a.add_argument("--m", type=int, required=True)
    a.add_argument("--dim-cprime", type=int, required=True)
    _format_flag(a)
    a.set_defaults(func=cmd_adding_diagonals)

    d = sub.add_parser("dump", help="dump roots, constants or points")
    _dump_flags(d)
    d.set_defaults(func=cmd_dump)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command is None:
            if any((args.dump_roots, args.dump_constants, args.dump_point)):
                return cmd_dump(args)
            parser.print_usage(sys.stderr)
            return 2
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write("commvar: error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
