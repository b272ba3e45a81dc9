"""Command-line interface.

Exit codes: 0 success, 1 mathematical validation failure, 2 usage or
parse error.  Errors are reported on stderr as single-line JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify_triangle, realize_triangle
from .core import (FriezeMap, check_glide, frieze_from_json, frieze_to_json,
                   grid_from_polygon, to_polygon, validate_local, validate_tame)
from .enumeration import enumerate_friezes, enumeration_summary
from .propagation import build_pattern
from .ptolemy import verify_all_ptolemy
from .render import render_ascii, render_svg
from .scalars import parse_domain, scalar_from_str
from .triangulation import (Triangulation, accordion, cut_subpolygon,
                            frieze_from_triangulation, triangulation_from_json,
                            triangulation_to_json)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    """Bad input shape: malformed scalars, JSON, flags."""


class _ValidationFailure(Exception):
    """Mathematically well-formed input that fails a required property."""

    def __init__(self, message: str, detail=None) -> None:
        super().__init__(message)
        self.detail = detail


def _fail(kind: str, message: str, detail=None) -> None:
    record = {"error": kind, "message": message}
    if detail is not None:
        record["detail"] = detail
    print(json.dumps(record), file=sys.stderr)


def _parse_scalars(text: str) -> list:
    try:
        return [scalar_from_str(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise _UsageError(f"cannot read JSON from {path}: {exc}") from None


def _load_frieze(path: str) -> FriezeMap:
    try:
        return frieze_from_json(_load_json(path))
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _load_any(path: str):
    obj = _load_json(path)
    try:
        if isinstance(obj, dict) and "diagonals" in obj:
            return triangulation_from_json(obj)
        return frieze_from_json(obj)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _report_detail(report) -> list:
    return [{"rule": v.rule, "at": list(v.at), "detail": v.detail}
            for v in report.violations]


def _cmd_build(args) -> int:
    boundary = _parse_scalars(args.boundary)
    quiddity = _parse_scalars(args.quiddity)
    try:
        grid = build_pattern(boundary, quiddity)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    report = validate_local(grid).merged(validate_tame(grid))
    if not report.ok:
        raise _ValidationFailure("pattern violates the frieze conditions",
                                 _report_detail(report))
    if not check_glide(grid):
        raise _ValidationFailure("pattern is not glide-symmetric")
    _emit(json.dumps(frieze_to_json(to_polygon(grid)), indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_validate(args) -> int:
    f = _load_frieze(args.file)
    grid = grid_from_polygon(f)
    report = (validate_local(grid)
              .merged(validate_tame(grid))
              .merged(verify_all_ptolemy(f)))
    if not report.ok:
        raise _ValidationFailure("frieze fails validation", _report_detail(report))
    print(json.dumps({"m": f.m, "valid": True}))
    return EXIT_OK


def _cmd_from_triangulation(args) -> int:
    try:
        tri = triangulation_from_json(_load_json(args.file))
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    _emit(json.dumps(frieze_to_json(frieze_from_triangulation(tri)), indent=2) + "\n",
          args.output)
    return EXIT_OK


def _cmd_cut(args) -> int:
    f = _load_frieze(args.file)
    try:
        verts = [int(part) for part in args.verts.split(",") if part.strip()]
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    try:
        sub = cut_subpolygon(f, verts)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    _emit(json.dumps(frieze_to_json(sub), indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_accordion(args) -> int:
    try:
        tri, k = accordion(args.a, args.b)
    except ValueError as exc:
        raise _ValidationFailure(str(exc)) from None
    doc = {"triangulation": triangulation_to_json(tri), "k": k}
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_classify(args) -> int:
    try:
        verdict = classify_triangle(args.a, args.b, args.c)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    print("true" if verdict else "false")
    return EXIT_OK


def _cmd_realize(args) -> int:
    try:
        tri, vertices = realize_triangle(args.a, args.b, args.c)
    except ValueError as exc:
        raise _ValidationFailure(str(exc)) from None
    doc = {"triangulation": triangulation_to_json(tri), "vertices": list(vertices)}
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    boundary = _parse_scalars(args.boundary)
    try:
        domain = parse_domain(args.domain)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    try:
        results = enumerate_friezes(boundary, domain)
    except ValueError as exc:
        raise _ValidationFailure(str(exc)) from None
    for f in results:
        print(json.dumps(frieze_to_json(f)))
    print(json.dumps(enumeration_summary(boundary, domain, results)))
    return EXIT_OK


def _cmd_render(args) -> int:
    obj = _load_any(args.file)
    mark = None
    if args.mark:
        try:
            mark = tuple(int(part) for part in args.mark.split(","))
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    try:
        if args.format == "ascii":
            f = (frieze_from_triangulation(obj)
                 if isinstance(obj, Triangulation) else obj)
            _emit(render_ascii(f), args.output)
        else:
            _emit(render_svg(obj, mark=mark), args.output)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frieze",
        description="Build, validate, enumerate and draw friezes with coefficients.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", "-o", default=None, help="output file (default stdout)")

    p = sub.add_parser("build", help="boundary + quiddity -> validated frieze JSON")
    p.add_argument("--boundary", required=True, help="comma-separated scalars")
    p.add_argument("--quiddity", required=True, help="comma-separated scalars")
    add_output(p)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("validate", help="check a frieze JSON document")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("from-triangulation", help="triangulation JSON -> frieze JSON")
    p.add_argument("file")
    add_output(p)
    p.set_defaults(func=_cmd_from_triangulation)

    p = sub.add_parser("cut", help="restrict a frieze to a subpolygon")
    p.add_argument("file")
    p.add_argument("--verts", required=True, help="comma-separated vertices")
    add_output(p)
    p.set_defaults(func=_cmd_cut)

    p = sub.add_parser("accordion", help="triangulation showing a, b across a unit edge")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    add_output(p)
    p.set_defaults(func=_cmd_accordion)

    p = sub.add_parser("classify-triangle", help="is (a, b, c) realizable?")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("realize-triangle", help="triangulation realizing (a, b, c)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    add_output(p)
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("enumerate", help="all friezes with a boundary over a domain")
    p.add_argument("--boundary", required=True, help="comma-separated scalars")
    p.add_argument("--domain", required=True,
                   help="nat | nonzero-int | scaled:p/q | set:v1,v2,...")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("render", help="draw a frieze or triangulation")
    p.add_argument("file")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--mark", default=None, help="vertex triple i,j,k to highlight")
    add_output(p)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _UsageError as exc:
        _fail("usage", str(exc))
        return EXIT_USAGE
    except _ValidationFailure as exc:
        _fail("validation", str(exc), exc.detail)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
