"""``realtypes`` command line.

Exit status: 0 on success or a positive answer, 1 on a semantic negative
(not a real type, not realizable, unsatisfiable, a failed check) and 2 on
usage or input errors.  Output is compact JSON unless ``--plain`` is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import counting
from .counting import FormulaId
from .errors import NotRealizable, RealTypeError
from .exact_poly import Poly, family_real_type, real_type_of
from .realize import realize_family, realize_type
from .satisfy import decide, parse_constraint
from .sign_core import validate_real_type, validate_sign_matrix
from .typecheck import DEFAULT_BUDGET, is_family_type, iter_family_types, iter_real_types, min_realizing_degree

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

#: Reference values checked by `realtypes examples`: (formula, degrees, expected).
EXAMPLE_VALUES = (
    (FormulaId.RFam, (2, 3, 2), 26624),
    (FormulaId.Bar, (2, 3, 2), 53736),
    (FormulaId.BarBar, (2, 3, 2), 55339),
    (FormulaId.BarBar, (2, 2, 2, 2, 2), 311476091),
)

_FORMULAS = {
    "rdm": FormulaId.Rdm,
    "rd": FormulaId.Rd,
    "rdhat": FormulaId.RdHat,
    "fam": FormulaId.RFamM,
    "fam-total": FormulaId.RFam,
    "fam-upto": FormulaId.RFamHat,
    "any": FormulaId.Snm,
    "bar": FormulaId.Bar,
    "barbar": FormulaId.BarBar,
    "fib": FormulaId.Fib,
}


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse {what} {text!r}: {exc}") from None


def _signs(text: str):
    data = _load_json(text, "sign sequence or matrix")
    if not isinstance(data, list) or not data:
        raise UsageError(f"expected a JSON sign sequence or matrix, got {text!r}")
    return data


def _poly(text: str) -> Poly:
    return Poly.from_json(_load_json(text, "polynomial"))


class _Out:
    def __init__(self, args):
        self.plain = getattr(args, "plain", False)
        self.quiet = getattr(args, "quiet", False)

    def __call__(self, obj, plain_text=None):
        if self.quiet:
            return
        if self.plain and plain_text is not None:
            print(plain_text)
        else:
            print(_dumps(obj))


# -- subcommands -------------------------------------------------------------


def cmd_count(args, out) -> int:
    formula = _FORMULAS[args.formula]
    degrees = args.degrees or []
    if formula in (FormulaId.Rdm, FormulaId.Rd, FormulaId.RdHat) and len(degrees) != 1:
        raise UsageError(f"--formula {args.formula} needs exactly one value in --degrees")
    if formula in (FormulaId.Rdm, FormulaId.RFamM, FormulaId.Snm) and args.roots is None:
        raise UsageError(f"--formula {args.formula} needs --roots")
    if formula in (FormulaId.Snm, FormulaId.Fib) and args.n is None:
        raise UsageError(f"--formula {args.formula} needs --n")
    if formula not in (FormulaId.Snm, FormulaId.Fib) and not degrees:
        raise UsageError(f"--formula {args.formula} needs --degrees")

    if formula is FormulaId.Rdm:
        params = (degrees[0], args.roots)
    elif formula is FormulaId.RFamM:
        params = (*degrees, args.roots)
    elif formula is FormulaId.Snm:
        params = (args.n, args.roots)
    elif formula is FormulaId.Fib:
        params = (args.n,)
    else:
        params = tuple(degrees)
    rep = counting.report(formula, params)
    out(rep.to_dict(), str(rep.value))
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.max_d < 0:
        raise UsageError("--max-d must be nonnegative")
    rows, ok = [], True
    for d in range(args.max_d + 1):
        value = counting.count_exact_degree(d)
        row = {"d": d, "R_d": str(value)}
        if args.check:
            explicit = counting.count_exact_degree_sum(d)
            row["check"] = explicit == value
            ok &= explicit == value
        rows.append(row)
    lines = ["d\tR_d"] + [f"{r['d']}\t{r['R_d']}" + ("" if r.get("check", True) else "\tMISMATCH") for r in rows]
    out(rows, "\n".join(lines))
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_check(args, out) -> int:
    data = _signs(args.input)
    degrees = args.degrees
    if not degrees:
        raise UsageError("check needs --degrees")
    if isinstance(data[0], list):
        A = validate_sign_matrix(data)
        verdict = is_family_type(A, degrees)
        out({"family_type": verdict, "degrees": degrees}, str(verdict).lower())
    else:
        if len(degrees) != 1:
            raise UsageError("a single sign sequence takes one degree")
        s = validate_real_type(data)
        w = min_realizing_degree(s)
        verdict = w.admits(degrees[0])
        out({"real_type": verdict, "degree": degrees[0], **w.to_dict()},
            f"{str(verdict).lower()} min_degree={w.min_degree} parity={w.parity_name}")
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_realize(args, out) -> int:
    data = _signs(args.input)
    degrees = args.degrees or ([args.degree] if args.degree is not None else None)
    if not degrees:
        raise UsageError("realize needs --degree (sequence) or --degrees (matrix)")
    if isinstance(data[0], list):
        fs = realize_family(data, degrees)
        out([f.to_json() for f in fs], "\n".join(str(f) for f in fs))
    else:
        if len(degrees) != 1:
            raise UsageError("a single sign sequence takes one degree")
        f = realize_type(data, degrees[0])
        out(f.to_json(), str(f))
    return EXIT_OK


def cmd_type(args, out) -> int:
    s = real_type_of(_poly(args.poly))
    out(s.to_json(), str(s))
    return EXIT_OK


def cmd_signmatrix(args, out) -> int:
    A = family_real_type([_poly(p) for p in args.polys])
    out(A.to_json(), "\n".join(" ".join(f"{s:2d}" for s in row) for row in A.rows))
    return EXIT_OK


def cmd_satisfy(args, out) -> int:
    verdict = decide([parse_constraint(c) for c in args.constraints])
    out(verdict.to_dict(), "satisfiable" if verdict else "unsatisfiable")
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_enumerate(args, out) -> int:
    if not args.degrees or args.roots is None:
        raise UsageError("enumerate needs --degrees and --roots")
    if len(args.degrees) == 1 and not args.matrix:
        items = (s.to_json() for s in iter_real_types(args.degrees[0], args.roots))
    else:
        items = (A.to_json() for A in iter_family_types(args.degrees, args.roots, budget=args.budget))
    for item in items:
        out(item, _dumps(item))
    return EXIT_OK


def cmd_examples(args, out) -> int:
    results, ok = [], True
    for formula, degrees, expected in EXAMPLE_VALUES:
        rep = counting.report(formula, degrees)
        match = rep.value == expected
        ok &= match
        results.append({**rep.to_dict(), "expected": str(expected), "match": match})
    lines = [
        f"{r['formula_id']}{tuple(r['params'])} = {r['value']} ({'ok' if r['match'] else 'MISMATCH, expected ' + r['expected']})"
        for r in results
    ]
    out(results, "\n".join(lines))
    return EXIT_OK if ok else EXIT_NEGATIVE


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--plain", action="store_true", help="human readable output instead of JSON")
    common.add_argument("--quiet", action="store_true", help="print nothing; report through the exit status")

    parser = argparse.ArgumentParser(prog="realtypes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="evaluate a counting formula")
    p.add_argument("--formula", required=True, choices=sorted(_FORMULAS))
    p.add_argument("--degrees", type=_int_list, help="d1,...,dn")
    p.add_argument("--roots", type=int, help="number m of distinct real roots")
    p.add_argument("--n", type=int, help="family size (any) or Fibonacci index (fib)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", parents=[common], help="number of real d-types for d = 0..max-d")
    p.add_argument("--max-d", type=int, default=10)
    p.add_argument("--check", action="store_true", help="also compare with the explicit binomial sum")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", parents=[common], help="is a sign sequence/matrix a real type of the given degrees")
    p.add_argument("input", help="JSON sign sequence or matrix")
    p.add_argument("--degrees", type=_int_list, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("realize", parents=[common], help="integer witness polynomial(s)")
    p.add_argument("input", help="JSON sign sequence or matrix")
    p.add_argument("--degree", type=int)
    p.add_argument("--degrees", type=_int_list)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("type", parents=[common], help="real type of a polynomial")
    p.add_argument("poly", help="JSON ascending coefficient array")
    p.set_defaults(func=cmd_type)

    p = sub.add_parser("signmatrix", parents=[common], help="sign matrix of a family")
    p.add_argument("polys", nargs="+", help="JSON ascending coefficient arrays")
    p.set_defaults(func=cmd_signmatrix)

    p = sub.add_parser("satisfy", parents=[common], help="decide a conjunction of sign constraints")
    p.add_argument("constraints", nargs="+", help="'<coeffs> <rel> 0', e.g. '[1,1] = 0'")
    p.set_defaults(func=cmd_satisfy)

    p = sub.add_parser("enumerate", parents=[common], help="stream real types as JSON lines")
    p.add_argument("--degrees", type=_int_list, required=True)
    p.add_argument("--roots", type=int, required=True)
    p.add_argument("--matrix", action="store_true", help="emit 1-row matrices for a single degree")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum matrix cells to scan")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("examples", parents=[common], help="reproduce the four worked example values")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args)
    try:
        return args.func(args, out)
    except NotRealizable as exc:
        if not out.quiet:
            print(f"realtypes: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (UsageError, RealTypeError, KeyError) as exc:
        print(f"realtypes {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
