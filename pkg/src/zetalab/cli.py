"""Command-line entry point.

Exit codes: 0 success, 1 input/parse/resource errors, 2 mathematical
verification failure (an expected identity fails on the given input).
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import (
    BudgetExceeded,
    KernelsDisagree,
    NoSignWorks,
    NotInvertible,
    NotRational,
    SchemaError,
    ZetalabError,
)
from .lattice import BilinearLattice, kernels, numerical_quotient
from .matrices import Matrix
from .rationals import format_rational, parse_rational
from .scheme import DEFAULT_BUDGET, ProjectiveScheme, default_workers, hasse_weil_zeta
from .witt import WittVector, witt_add, witt_mul
from .zeta import (
    DEFAULT_PRECISION,
    SemisimpleBlockData,
    SuperRealization,
    determinant,
    functional_equation_check,
    realization_report,
    zeta_det,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFICATION = 2


def _load_json(path):
    if not os.path.exists(path):
        raise SchemaError(f"input file not found: {path}")
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON in {path}: {exc}") from exc


def _parse_matrix(rows, field_name):
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise SchemaError(f"field {field_name!r} must be a list of rows")
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise SchemaError(f"field {field_name!r} has ragged rows")
    return Matrix.from_rows([[parse_rational(x) for x in r] for r in rows])


def _parse_int_matrix(rows, field_name):
    m = _parse_matrix(rows, field_name)
    if not m.is_integer():
        raise SchemaError(f"field {field_name!r} must have integer entries")
    return Matrix(m.rows, m.cols, [int(x) for x in (m[i, j] for i in range(m.rows) for j in range(m.cols))])


def load_realization(path) -> SuperRealization:
    data = _load_json(path)
    for key in ("t_plus", "t_minus"):
        if key not in data:
            raise SchemaError(f"realization JSON missing field {key!r}")
    return SuperRealization(
        t_plus=_parse_matrix(data["t_plus"], "t_plus"),
        t_minus=_parse_matrix(data["t_minus"], "t_minus"),
        label=data.get("label", ""),
    )


def load_lattice(path) -> BilinearLattice:
    data = _load_json(path)
    for key in ("rank", "gram"):
        if key not in data:
            raise SchemaError(f"lattice JSON missing field {key!r}")
    gram = _parse_int_matrix(data["gram"], "gram")
    if gram.rows != data["rank"]:
        raise SchemaError(f"field 'rank' ({data['rank']}) does not match gram size ({gram.rows})")
    return BilinearLattice(rank=data["rank"], gram=gram, label=data.get("label", ""))


def load_scheme(path) -> ProjectiveScheme:
    return ProjectiveScheme.from_dict(_load_json(path))


def _series_json(series):
    return [format_rational(c) for c in series.coeffs]


def _rational_json(rf):
    if rf is None:
        return None
    return {
        "num": [format_rational(c) for c in rf.num.coeffs] or ["0"],
        "den": [format_rational(c) for c in rf.den.coeffs],
        "text": str(rf),
    }


def _emit(report, output):
    if output == "json":
        print(json.dumps(report, indent=2))
    else:
        _print_table(report)


def _print_table(report, indent=""):
    for key, value in report.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _print_table(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{indent}{key}:")
            for item in value:
                _print_table(item, indent + "  ")
        else:
            print(f"{indent}{key}: {value}")


def cmd_lattice(args):
    lat = load_lattice(args.input)
    rep = kernels(lat)
    report = {
        "label": lat.label,
        "rank": lat.rank,
        "left_kernel_rank": len(rep.left_basis),
        "right_kernel_rank": len(rep.right_basis),
        "left_kernel_basis": rep.left_basis,
        "right_kernel_basis": rep.right_basis,
        "kernels_agree": rep.agree,
    }
    if rep.agree:
        quot = numerical_quotient(lat)
        report["quotient_rank"] = quot.rank
        report["induced_gram"] = quot.induced_gram.to_lists()
        report["projection"] = quot.projection.to_lists()
    _emit(report, args.output)
    return EXIT_OK if rep.agree else EXIT_VERIFICATION


def cmd_witt(args):
    data = _load_json(args.input)
    for key in ("op", "a", "b"):
        if key not in data:
            raise SchemaError(f"witt JSON missing field {key!r}")
    a = WittVector.from_coefficients([parse_rational(x) for x in data["a"]])
    b = WittVector.from_coefficients([parse_rational(x) for x in data["b"]])
    op = data["op"]
    if op == "add":
        result = witt_add(a, b)
    elif op == "mul":
        result = witt_mul(a, b)
    else:
        raise SchemaError(f"field 'op' must be 'add' or 'mul', got {op!r}")
    _emit({"op": op, "result": _series_json(result.series)}, args.output)
    return EXIT_OK


def cmd_zeta_realize(args):
    r = load_realization(args.input)
    rep = realization_report(r, args.precision)
    report = {
        "label": r.label,
        "dim_plus": r.dim_plus,
        "dim_minus": r.dim_minus,
        "trace_of_identity": rep.super_trace_id.trace_of_identity,
        "series": _series_json(rep.series),
        "rational": _rational_json(rep.rational),
        "degree_gap": rep.degree_gap,
    }
    if rep.functional_eq is not None:
        report["functional_equation"] = {
            "sign": rep.functional_eq.sign,
            "det": format_rational(rep.functional_eq.det),
            "holds": rep.functional_eq.holds,
        }
    _emit(report, args.output)
    if rep.rational is None:
        return EXIT_VERIFICATION
    if rep.functional_eq is not None and not rep.functional_eq.holds:
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_zeta_det(args):
    data = _load_json(args.input)
    if "blocks" not in data:
        raise SchemaError("blocks JSON missing field 'blocks'")
    blocks = []
    for i, blk in enumerate(data["blocks"]):
        if "matrix" not in blk or "mu" not in blk:
            raise SchemaError(f"block {i} must have 'matrix' and 'mu'")
        blocks.append((_parse_matrix(blk["matrix"], f"blocks[{i}].matrix"), int(blk["mu"])))
    det = determinant(SemisimpleBlockData(blocks=tuple(blocks)))
    _emit({"det": format_rational(det)}, args.output)
    return EXIT_OK


def cmd_check_functional(args):
    r = load_realization(args.input)
    result = functional_equation_check(r, args.precision)
    _emit(
        {
            "label": r.label,
            "sign": result.sign,
            "det": format_rational(result.det),
            "holds": result.holds,
        },
        args.output,
    )
    return EXIT_OK if result.holds else EXIT_VERIFICATION


def cmd_zeta_scheme(args):
    scheme = load_scheme(args.input)
    rep = hasse_weil_zeta(scheme, args.terms, budget=args.budget, workers=args.workers)
    report = {
        "label": scheme.label,
        "q": scheme.base_q,
        "counts": list(rep.counts.counts),
        "series": _series_json(rep.series),
        "rational": _rational_json(rep.rational),
        "euler_characteristic": rep.euler_characteristic,
        "dimension": rep.dimension,
        "functional_equation_sign": rep.sign,
        "caveats": list(rep.caveats),
    }
    _emit(report, args.output)
    return EXIT_OK if rep.sign is not None else EXIT_VERIFICATION


def cmd_check(args):
    r = load_realization(args.realization)
    scheme = load_scheme(args.scheme)
    z_realization = zeta_det(r)
    rep = hasse_weil_zeta(scheme, args.precision, budget=args.budget, workers=args.workers)
    match = z_realization == rep.rational
    _emit(
        {
            "realization_zeta": _rational_json(z_realization),
            "scheme_zeta": _rational_json(rep.rational),
            "match": match,
        },
        args.output,
    )
    return EXIT_OK if match else EXIT_VERIFICATION


def _default_budget():
    env = os.environ.get("ZETA_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise SchemaError(f"ZETA_BUDGET must be an integer, got {env!r}") from exc
    return DEFAULT_BUDGET


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zetalab",
        description="Exact-arithmetic zeta functions, Witt vectors, and "
        "numerical Grothendieck groups.",
    )
    parser.add_argument("--output", choices=("json", "table"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", help="analyze an Euler-pairing lattice")
    p.add_argument("input")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("witt", help="Witt ring arithmetic on coefficient vectors")
    p.add_argument("input")
    p.set_defaults(func=cmd_witt)

    p = sub.add_parser("zeta-realize", help="zeta report of a graded realization")
    p.add_argument("input")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.set_defaults(func=cmd_zeta_realize)

    p = sub.add_parser("zeta-det", help="determinant from semisimple block data")
    p.add_argument("input")
    p.set_defaults(func=cmd_zeta_det)

    p = sub.add_parser("check-functional", help="functional equation of a realization")
    p.add_argument("input")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.set_defaults(func=cmd_check_functional)

    p = sub.add_parser("zeta-scheme", help="Hasse-Weil zeta by point counting")
    p.add_argument("input")
    p.add_argument("--terms", type=int, default=6)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_zeta_scheme)

    p = sub.add_parser("check", help="cross-check realization vs scheme zeta")
    p.add_argument("realization")
    p.add_argument("scheme")
    p.add_argument("--precision", type=int, default=6)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "budget", None) is None and hasattr(args, "budget"):
            args.budget = _default_budget()
        if hasattr(args, "precision") and args.precision < 1:
            raise SchemaError("field 'precision' must be >= 1")
        if hasattr(args, "budget") and args.budget < 1:
            raise SchemaError("field 'budget' must be >= 1")
        return args.func(args)
    except (SchemaError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NotRational, NoSignWorks, NotInvertible, KernelsDisagree) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except ZetalabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
