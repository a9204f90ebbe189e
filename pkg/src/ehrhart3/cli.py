"""``ehrhart3`` command line.

Exit codes: 0 success, 2 invalid input, 4 verification mismatch,
5 oracle scan too large.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from decimal import Decimal
from fractions import Fraction
from typing import Any, Dict, List

from .ehrhart import EhrhartPolynomial, breakdown, ehrhart_polynomial
from .errors import Ehrhart3Error, OracleTooLarge
from .families import cube_points, prism_points, tetra_points
from .oracle import default_cell_cap, unimodular_fuzz, verify
from .polytope import build

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 4
EXIT_TOO_LARGE = 5

_JSON_SAFE = 2**53


class InputError(Exception):
    pass


# -- serialization -----------------------------------------------------------------


def rational_json(x: Fraction) -> Dict[str, str]:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def int_json(n: int):
    return n if -_JSON_SAFE <= n <= _JSON_SAFE else str(n)


def _parse_int(x: Any) -> int:
    if isinstance(x, bool):
        raise InputError(f"coordinate {x!r} is not an integer")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        s = x.strip()
        try:
            return int(s, 10)
        except ValueError:
            pass
    raise InputError(f"coordinate {x!r} is not an exact integer")


def parse_input(text: str) -> List[tuple]:
    """Vertex triples from ``{"vertices": [[x, y, z], ...]}``; floats are rejected."""
    try:
        doc = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("vertices"), list):
        raise InputError('expected an object with a "vertices" list')
    out = []
    for v in doc["vertices"]:
        if not isinstance(v, list) or len(v) != 3:
            raise InputError(f"vertex {v!r} is not a triple")
        out.append(tuple(_parse_int(x) for x in v))
    return out


def input_document(points) -> Dict[str, Any]:
    return {"vertices": [[int_json(x) for x in p] for p in points]}


def polynomial_json(poly: EhrhartPolynomial) -> Dict[str, Any]:
    return {f"c{k}": rational_json(c) for k, c in enumerate(poly.coefficients)}


def _fmt(x: Fraction) -> str:
    return str(Fraction(x))


def output_document(P, poly, with_breakdown=False, report=None) -> Dict[str, Any]:
    doc: Dict[str, Any] = {"coefficients": polynomial_json(poly)}
    if with_breakdown:
        edges, facets = breakdown(P)
        doc["edges"] = [
            {
                "endpoints": [[int_json(x) for x in p] for p in e.endpoints],
                "vol": int_json(e.vol),
                "m": int_json(e.m),
                "s": rational_json(e.s),
            }
            for e in edges
        ]
        doc["facets"] = [
            {
                "normal": [int_json(x) for x in f.normal],
                "relative_volume": rational_json(f.relative_volume),
                "correction": rational_json(f.correction),
            }
            for f in facets
        ]
    if report is not None:
        doc["verification"] = {
            "match": report.match,
            "counts": [[l, int_json(n)] for l, n in report.counts],
            "interpolated": polynomial_json(report.interpolated),
            "deltas": [rational_json(d) for d in report.deltas],
        }
    return doc


def _table(rows: List[List[str]]) -> str:
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def render_table(P, poly, with_breakdown=False, report=None) -> str:
    parts = [_table([["c0", "c1", "c2", "c3"], [_fmt(c) for c in poly.coefficients]])]
    if with_breakdown:
        edges, facets = breakdown(P)
        rows = [["edge", "Vol(E)", "m(E)", "s(E)"]]
        rows += [[f"{e.endpoints[0]}-{e.endpoints[1]}", str(e.vol), str(e.m), _fmt(e.s)] for e in edges]
        parts.append(_table(rows))
        rows = [["facet normal", "rel. volume", "C(F)"]]
        rows += [[str(f.normal), _fmt(f.relative_volume), _fmt(f.correction)] for f in facets]
        parts.append(_table(rows))
    if report is not None:
        rows = [["l", "count"]] + [[str(l), str(n)] for l, n in report.counts]
        parts.append(_table(rows))
        parts.append("match" if report.match else "MISMATCH  deltas: " + ", ".join(map(_fmt, report.deltas)))
    return "\n\n".join(parts) + "\n"


# -- commands ------------------------------------------------------------------------


def _read(args) -> str:
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _write(args, text: str) -> None:
    if getattr(args, "output", None) and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_compute(args) -> int:
    P = build(parse_input(_read(args)), allow_interior=args.allow_interior)
    poly = ehrhart_polynomial(P)
    if args.format == "table":
        _write(args, render_table(P, poly, args.breakdown))
    else:
        _write(args, _dump(output_document(P, poly, args.breakdown)))
    return EXIT_OK


def cmd_verify(args) -> int:
    P = build(parse_input(_read(args)), allow_interior=args.allow_interior)
    poly = ehrhart_polynomial(P)
    if args.inject_c1_delta:
        poly = EhrhartPolynomial(poly.c0, poly.c1 + Fraction(args.inject_c1_delta), poly.c2, poly.c3)
    cap = args.cell_cap if args.cell_cap is not None else default_cell_cap()
    report = verify(P, lmax=args.lmax, cell_cap=cap, formula=poly)
    if args.format == "table":
        _write(args, render_table(P, poly, args.breakdown, report))
    else:
        _write(args, _dump(output_document(P, poly, args.breakdown, report)))
    return EXIT_OK if report.match else EXIT_MISMATCH


_FAMILIES = {"tetra": (tetra_points, 3), "prism": (prism_points, 3), "cube": (cube_points, 1)}


def generate(family: str, params: List[int]):
    """Vertex list of a built-in family; raises :class:`InputError` on bad parameters."""
    if family not in _FAMILIES:
        raise InputError(f"unknown family {family!r}")
    fn, arity = _FAMILIES[family]
    if len(params) != arity:
        raise InputError(f"{family} takes {arity} parameter(s), got {len(params)}")
    try:
        return fn(*params)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_gen(args) -> int:
    pts = generate(args.family, args.params)
    if args.fuzz_seed is not None:
        pts = unimodular_fuzz(pts, args.fuzz_seed)
    _write(args, _dump(input_document(pts)))
    return EXIT_OK


def _positive_int(s: str) -> int:
    n = int(s)
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ehrhart3",
        description="Exact Ehrhart polynomials of 3-dimensional simple lattice polytopes.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def io_opts(p):
        p.add_argument("-i", "--input", help="input JSON (default: stdin)")
        p.add_argument("-o", "--output", help="output file (default: stdout)")
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--breakdown", action="store_true", help="per-edge and per-facet terms")
        p.add_argument("--allow-interior", action="store_true",
                       help="drop non-vertex input points instead of failing")

    p = sub.add_parser("compute", help="compute the Ehrhart polynomial")
    io_opts(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check the formula against lattice-point counts")
    io_opts(p)
    p.add_argument("--lmax", type=int, default=3, help="largest dilation counted (>= 3)")
    p.add_argument("--cell-cap", type=_positive_int, default=None,
                   help="maximum bounding-box cells per count (env EHRHART3_CELL_CAP)")
    p.add_argument("--inject-c1-delta", default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a built-in example polytope")
    p.add_argument("family", choices=("tetra", "prism", "cube"))
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--fuzz-seed", type=int, default=None)
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        if getattr(args, "lmax", 3) < 3:
            raise InputError("--lmax must be at least 3")
        return args.func(args)
    except OracleTooLarge as exc:
        print(f"error: OracleTooLarge: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except Ehrhart3Error as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InputError, ValueError, TypeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
