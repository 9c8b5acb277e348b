"""Command line front end.

Exit codes: 0 success or true verdict, 1 false verdict, 2 usage/data error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from ._tol import REL_TOL, resolve_eps
from .cone import ConicSubspace, cone_contains, relint_contains, subspace_decomposition
from .documents import DocumentError, document_payload, dumps, load_document
from .errors import NotIndependent, TropicalError
from .matrix import (
    TropMatrix,
    idempotent_necessary_conditions,
    is_idempotent,
    is_invertible,
    is_trop_orthogonal,
    mat_odot,
    trop_inverse,
)
from .projective import SimplexPoint, grassmann_canonical
from .scalar import iso_deviation
from .svg import render
from .vector import TropVector

PREDICATES = {
    "idempotent": is_idempotent,
    "idempotent-conditions": idempotent_necessary_conditions,
    "orthogonal": is_trop_orthogonal,
    "monomial": is_invertible,
}


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    outcome: str  # text for stdout, or the diagnostic for stderr when exit_code == 2
    exit_code: int = 0


def _matrix(path) -> tuple[TropMatrix, str]:
    doc = load_document(path, ("matrix",))
    return TropMatrix(doc.entries), doc.carrier


def _generators(path) -> list[TropVector]:
    doc = load_document(path, ("generators",))
    return [TropVector(row) for row in doc.entries]


def _square(A: TropMatrix, path) -> None:
    if not A.is_square():
        raise UsageError(f"{path}: square matrix required, got {A.rows}x{A.cols}")


def cmd_matmul(args) -> RunReport:
    A, carrier = _matrix(args.a)
    B, _ = _matrix(args.b)
    if A.cols != B.rows:
        raise UsageError(f"shape mismatch: {A.rows}x{A.cols} times {B.rows}x{B.cols}")
    out = document_payload("matrix", mat_odot(A, B).tolist(), carrier)
    return RunReport("matmul", dumps(out))


def cmd_inverse(args) -> RunReport:
    A, carrier = _matrix(args.a)
    _square(A, args.a)
    if not is_invertible(A):
        return RunReport("inverse", "not-invertible", 1)
    return RunReport("inverse", dumps(document_payload("matrix", trop_inverse(A).tolist(), carrier)))


def cmd_check(args) -> RunReport:
    A, _ = _matrix(args.a)
    _square(A, args.a)
    verdict = PREDICATES[args.predicate](A)
    return RunReport("check", "true" if verdict else "false", 0 if verdict else 1)


def cmd_span(args) -> RunReport:
    gens = _generators(args.gens)
    point = TropVector(load_document(args.point, ("vector",)).entries)
    if len(point) != len(gens[0]):
        raise UsageError(f"point has dimension {len(point)}, generators {len(gens[0])}")
    try:
        ConicSubspace(tuple(gens), args.closed)
    except NotIndependent as exc:
        raise UsageError(str(exc)) from None
    query = cone_contains if args.closed else relint_contains
    res = query(gens, point)
    out = {
        "closed": args.closed,
        "member": res.feasible,
        "witness": list(res.witness) if res.witness is not None else None,
    }
    if not args.closed:
        out["margin"] = res.margin
    return RunReport("span", dumps(out), 0 if res.feasible else 1)


def cmd_grass(args) -> RunReport:
    gens = _generators(args.gens)
    try:
        G = grassmann_canonical(gens, args.closed)
    except NotIndependent:
        return RunReport("grass", "not-independent", 1)
    out = document_payload("configuration", [p.coords for p in G.canonical], closed=G.closed)
    return RunReport("grass", dumps(out))


def cmd_decompose(args) -> RunReport:
    gens = _generators(args.gens)
    try:
        C = ConicSubspace(tuple(gens))
    except NotIndependent as exc:
        raise UsageError(str(exc)) from None
    strata = {
        I.bitstring: {"rank": I.rank, "generators": [list(g.coords) for g in group]}
        for I, group in subspace_decomposition(C).items()
    }
    return RunReport("decompose", dumps({"kind": "decomposition", "strata": strata}))


def cmd_iso_check(args) -> RunReport:
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    rng = np.random.default_rng(args.seed)
    pairs = [tuple(args.pair)] if args.pair else []
    n_random = args.samples - len(pairs)
    if n_random > 0:
        pairs += [tuple(map(float, p)) for p in np.exp(rng.uniform(-20.0, 20.0, size=(n_random, 2)))]
    for a, b in pairs:
        if a < 0 or b < 0:
            raise UsageError("--pair values must be >= 0")
    worst = max(iso_deviation(a, b) for a, b in pairs)
    ok = worst <= REL_TOL
    text = f"samples: {len(pairs)}\nmax relative deviation: {worst:.3e}\n{'pass' if ok else 'fail'}"
    return RunReport("iso-check", text, 0 if ok else 1)


def cmd_plot(args) -> RunReport:
    doc = load_document(args.config, ("configuration",))
    if len(doc.entries[0]) != 3:
        raise UsageError(f"plot needs ambient dimension 3, got {len(doc.entries[0])}")
    try:
        points = [SimplexPoint(row) for row in doc.entries]
    except ValueError as exc:
        raise UsageError(f"{args.config}: {exc}") from None
    Path(args.output).write_text(render([p.coords for p in points]), encoding="utf-8")
    return RunReport("plot", f"wrote {args.output}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropix", description="Tropical linear algebra over (R>=0, max, *).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matmul", help="tropical product of two matrices")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_matmul)

    p = sub.add_parser("inverse", help="tropical inverse of a square matrix")
    p.add_argument("a")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("check", help="test a matrix predicate")
    p.add_argument("a")
    p.add_argument("--predicate", required=True, choices=sorted(PREDICATES))
    p.set_defaults(func=cmd_check)

    def flag(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--closed", dest="closed", action="store_true", help="closed cone")
        g.add_argument("--open", dest="closed", action="store_false", help="relative interior")

    p = sub.add_parser("span", help="membership of a point in a span")
    p.add_argument("gens")
    p.add_argument("point")
    flag(p)
    p.set_defaults(func=cmd_span)

    p = sub.add_parser("grass", help="canonical simplex configuration of a subspace")
    p.add_argument("gens")
    flag(p)
    p.set_defaults(func=cmd_grass)

    p = sub.add_parser("decompose", help="group generators by orthant stratum")
    p.add_argument("gens")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("iso-check", help="check the log/exp semiring isomorphism on random samples")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pair", type=float, nargs=2, metavar=("A", "B"), help="include this pair first")
    p.set_defaults(func=cmd_iso_check)

    p = sub.add_parser("plot", help="draw a configuration in the 2-simplex as SVG")
    p.add_argument("config")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_plot)
    return parser


def run(argv=None) -> RunReport:
    """Parse and execute; argparse usage errors still exit via SystemExit(2)."""
    args = build_parser().parse_args(argv)
    try:
        resolve_eps()
        return args.func(args)
    except (UsageError, DocumentError, TropicalError, ValueError) as exc:
        return RunReport(args.command, str(exc) or type(exc).__name__, 2)


def main(argv=None) -> int:
    report = run(argv)
    if report.exit_code == 2:
        print(f"tropix {report.command}: error: {report.outcome}", file=sys.stderr)
    else:
        print(report.outcome)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
