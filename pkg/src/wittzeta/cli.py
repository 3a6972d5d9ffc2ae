"""Command-line interface.

Verbs: validate, invariants, zeta, special-value, verify, points,
kunneth, dual, twist, and make (which emits complex files).  Input
files use the complex format of the rmodel module, or the one-line
curve format for point counting; '-' reads standard input.

Exit codes: 0 success (or theorem verified), 1 verification failure
(a clause of the main theorem failed: bad data or a bug), 2 input
error.  Reports are byte-identical across runs for identical inputs;
the tsv format carries exactly the same cells as the text format.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Tuple

from .exactnum import Polynomial
from .invariants import (
    domino_table,
    e_r,
    euler_column_sums,
    hodge_witt,
    slope_numbers,
)
from .rmodel import (
    BaseField,
    ComplexFormatError,
    CrysComplex,
    parse,
    serialize,
    tate_twist,
    to_crys,
    validate,
)
from .varieties import (
    WeierstrassCurve,
    compact_support_dual,
    count_points_curve,
    curve_from_weil,
    kunneth,
    parse_curve,
    projective_space,
    weil_from_counts,
    zeta_point_counts,
)
from .zeta import special_value, verify_main_theorem, zeta_of

Section = Tuple[str, List[Tuple[str, ...]]]


def _render(sections: List[Section], fmt: str) -> str:
    lines = []
    for title, rows in sections:
        if fmt == "tsv":
            for row in rows:
                lines.append("\t".join((title,) + tuple(row)))
        else:
            lines.append(f"[{title}]")
            for row in rows:
                lines.append("  " + " ".join(row))
    return "\n".join(lines) + "\n"


def _read(path: str) -> Tuple[str, str]:
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read(), path


def _load(path: str):
    text, name = _read(path)
    try:
        return parse(text), name
    except ComplexFormatError as exc:
        raise ComplexFormatError(None, f"{name}: {exc}") from None


def _load_crys(path: str) -> Tuple[CrysComplex, str]:
    c, name = _load(path)
    diags = validate(c)
    if diags:
        raise ComplexFormatError(None, f"{name}: " + "; ".join(diags))
    if not isinstance(c, CrysComplex):
        c = to_crys(c)
    return c, name


def _table_rows(table) -> List[Tuple[str, ...]]:
    return [(str(i), str(j), str(v)) for (i, j), v in table.items()]


def _cmd_validate(args) -> int:
    status = 0
    for path in args.files:
        try:
            c, name = _load(path)
        except ComplexFormatError as exc:
            print(f"error: {exc}", file=sys.stderr)
            status = 2
            continue
        diags = validate(c)
        if diags:
            for diag in diags:
                print(f"{name}: {diag}", file=sys.stderr)
            status = 2
        else:
            print(f"{name}: ok")
    return status


def _cmd_invariants(args) -> int:
    c, _ = _load_crys(args.file)
    sections = [
        ("domino", _table_rows(domino_table(c))),
        ("slope", _table_rows(slope_numbers(c))),
        ("hodge-witt", _table_rows(hodge_witt(c))),
        (
            "euler-column",
            [(str(i), str(v)) for i, v in euler_column_sums(c).items()],
        ),
    ]
    sys.stdout.write(_render(sections, args.format))
    return 0


def _cmd_zeta(args) -> int:
    c, _ = _load_crys(args.file)
    Z = zeta_of(c)
    factor_rows = [
        (str(n),) + tuple(str(coef) for coef in P.coeffs)
        for n, P in Z.factors
    ]
    sections = [
        ("factor", factor_rows),
        ("zeta", [(str(Z),)]),
    ]
    sys.stdout.write(_render(sections, args.format))
    return 0


def _cmd_special_value(args) -> int:
    c, _ = _load_crys(args.file)
    sv = special_value(c, args.r, args.semisimple)
    p = c.base.p
    rows = [("r", str(sv.r))]
    rows += [(f"rho_{j}", str(v)) for j, v in sorted(sv.rho_j.items())]
    rows += [
        ("rho", str(sv.rho)),
        ("value", str(sv.value)),
        ("ord", str(sv.ord)),
        ("padic_size", f"{p}^{sv.ord}"),
    ]
    sections = [("special-value", rows)]
    if sv.warnings:
        sections.append(("warning", [(w,) for w in sv.warnings]))
    sys.stdout.write(_render(sections, args.format))
    return 0


def _cmd_verify(args) -> int:
    c, _ = _load_crys(args.file)
    rep = verify_main_theorem(c, args.r, args.semisimple)
    p = c.base.p
    rows = [("r", str(rep.r))]
    rows += [(f"rank_{j}", str(v)) for j, v in sorted(rep.ranks.items())]
    rows += [
        ("rank_alternating_sum", str(rep.rank_alternating_sum)),
        ("rho", str(rep.rho)),
        ("pole_order_direct", str(rep.pole_order_direct)),
        ("pole_order_from_ranks", str(rep.pole_order_from_ranks)),
        ("value", str(rep.value)),
        ("ord", str(rep.lhs_ord)),
        ("padic_size", f"{p}^{rep.lhs_ord}"),
        ("chi_exponent", str(rep.chi_exponent)),
        ("e_r", str(rep.e_r)),
        ("weighted_hodge_witt", str(rep.weighted_hw)),
        ("a", str(rep.a)),
    ]
    verdict_rows = [
        ("rank-sum-zero", "pass" if rep.clause1 else "FAIL"),
        ("pole-order", "pass" if rep.clause2 else "FAIL"),
        ("special-value", "pass" if rep.clause3 else "FAIL"),
        ("euler-weights", "pass" if rep.euler_ok else "FAIL"),
    ]
    sections = [("verify", rows), ("verdict", verdict_rows)]
    if rep.warnings:
        sections.append(("warning", [(w,) for w in rep.warnings]))
    sys.stdout.write(_render(sections, args.format))
    return 0 if rep.passed else 1


def _cmd_points(args) -> int:
    text, name = _read(args.file)
    tokens = text.split()
    if tokens and tokens[0] == "curve":
        try:
            curve = parse_curve(text)
        except ComplexFormatError as exc:
            raise ComplexFormatError(None, f"{name}: {exc}") from None
        counts = [count_points_curve(curve, m) for m in range(1, args.m + 1)]
    else:
        try:
            c = parse(text)
        except ComplexFormatError as exc:
            raise ComplexFormatError(None, f"{name}: {exc}") from None
        diags = validate(c)
        if diags:
            raise ComplexFormatError(None, f"{name}: " + "; ".join(diags))
        if not isinstance(c, CrysComplex):
            c = to_crys(c)
        counts = zeta_point_counts(c, args.m)
    rows = [(f"N_{n}", str(v)) for n, v in enumerate(counts, start=1)]
    sys.stdout.write(_render([("points", rows)], args.format))
    return 0


def _emit_complex(c: CrysComplex) -> int:
    sys.stdout.write(serialize(c))
    return 0


def _cmd_kunneth(args) -> int:
    c1, _ = _load_crys(args.file1)
    c2, _ = _load_crys(args.file2)
    return _emit_complex(kunneth(c1, c2))


def _cmd_dual(args) -> int:
    c, _ = _load_crys(args.file)
    return _emit_complex(compact_support_dual(c, args.dim))


def _cmd_twist(args) -> int:
    c, _ = _load_crys(args.file)
    return _emit_complex(tate_twist(c, args.r))


def _cmd_make_projspace(args) -> int:
    base = BaseField(args.p, args.a)
    return _emit_complex(projective_space(args.n, base))


def _cmd_make_curve_weil(args) -> int:
    base = BaseField(args.p, args.a)
    coeffs = [Fraction(tok) for tok in args.coeffs]
    return _emit_complex(curve_from_weil(Polynomial(coeffs), base))


def _cmd_make_curve_counts(args) -> int:
    base = BaseField(args.p, args.a)
    P1 = weil_from_counts(args.counts, args.g, base)
    return _emit_complex(curve_from_weil(P1, base))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittzeta",
        description="Exact invariants, zeta functions, and p-adic special values "
        "of complexes over finite fields.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "tsv"), default="text",
            help="report format (default text)",
        )

    p = sub.add_parser("validate", help="check complex files")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("invariants", help="domino, slope, and Hodge-Witt tables")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("zeta", help="assembled zeta function")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("special-value", help="exact special value at t = q^-r")
    p.add_argument("file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--semisimple", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_special_value)

    p = sub.add_parser("verify", help="verify the special-value theorem at r")
    p.add_argument("file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--semisimple", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("points", help="point counts N_1..N_m")
    p.add_argument("file")
    p.add_argument("--m", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_points)

    p = sub.add_parser("kunneth", help="product complex file")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_kunneth)

    p = sub.add_parser("dual", help="compactly supported dual complex file")
    p.add_argument("file")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("twist", help="Tate-twisted complex file")
    p.add_argument("file")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("make", help="emit constructor output as a complex file")
    make_sub = p.add_subparsers(dest="kind", required=True)

    m = make_sub.add_parser("projspace", help="projective space P^n")
    m.add_argument("n", type=int)
    m.add_argument("--p", type=int, required=True)
    m.add_argument("--a", type=int, default=1)
    m.set_defaults(func=_cmd_make_projspace)

    m = make_sub.add_parser("curve-weil", help="curve from Weil coefficients")
    m.add_argument("coeffs", nargs="+", metavar="coeff")
    m.add_argument("--p", type=int, required=True)
    m.add_argument("--a", type=int, default=1)
    m.set_defaults(func=_cmd_make_curve_weil)

    m = make_sub.add_parser("curve-counts", help="curve from point counts")
    m.add_argument("counts", nargs="+", type=int, metavar="N")
    m.add_argument("--g", type=int, default=1)
    m.add_argument("--p", type=int, required=True)
    m.add_argument("--a", type=int, default=1)
    m.set_defaults(func=_cmd_make_curve_counts)

    m = make_sub.add_parser("product", help="Kunneth product of two files")
    m.add_argument("file1")
    m.add_argument("file2")
    m.set_defaults(func=_cmd_kunneth)

    m = make_sub.add_parser("dual", help="compactly supported dual of a file")
    m.add_argument("file")
    m.add_argument("--dim", type=int, required=True)
    m.set_defaults(func=_cmd_dual)

    m = make_sub.add_parser("twist", help="Tate twist of a file")
    m.add_argument("file")
    m.add_argument("--r", type=int, required=True)
    m.set_defaults(func=_cmd_twist)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
