"""Tropical projective space as the standard simplex, and Grassmannians.

A line through the origin of the orthant is a flow orbit ``{e^-r v}``; its
unit-coordinate-sum representative is a point of the simplex.  A k-subspace
is determined by the k simplex points of its generators, which are in
convex position exactly when the generators are independent.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, replace
from typing import Sequence

from ._tol import resolve_eps
from .cone import ConicSubspace, cone_contains, is_independent
from .errors import (
    DimensionMismatch,
    NotAConfiguration,
    NotConvexPosition,
    NotIndependent,
    ZeroVector,
)
from .vector import TropVector, is_proportional

SUM_TOL = 1e-12


@dataclass(frozen=True)
class SimplexPoint:
    coords: tuple[float, ...]

    def __post_init__(self):
        coords = tuple(float(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if not coords:
            raise ValueError("a simplex point needs at least one coordinate")
        if any(not (c >= 0.0) or math.isinf(c) for c in coords):
            raise ValueError(f"simplex coordinates must be finite and >= 0: {coords!r}")
        if abs(math.fsum(coords) - 1.0) > SUM_TOL:
            raise ValueError(f"simplex coordinates must sum to 1: {coords!r}")

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def vector(self) -> TropVector:
        return TropVector(self.coords)

    def is_interior(self) -> bool:
        return all(c > 0.0 for c in self.coords)


def sup_distance(p: SimplexPoint, q: SimplexPoint) -> float:
    return max(abs(a - b) for a, b in zip(p, q))


def projectivize(v: TropVector) -> SimplexPoint:
    """Unit-sum representative of the flow orbit of ``v``."""
    if v.is_zero():
        raise ZeroVector("the origin lies on no line")
    s = math.fsum(v)
    return SimplexPoint(tuple(c / s for c in v))


def projective_eq(v: TropVector, w: TropVector, eps: float | None = None) -> bool:
    return is_proportional(v, w, eps)


def _check_dims(points: Sequence[SimplexPoint]) -> None:
    dims = {len(p) for p in points}
    if len(dims) > 1:
        raise DimensionMismatch(f"mixed ambient dimensions {sorted(dims)}")


def is_configuration(points: Sequence[SimplexPoint], eps: float | None = None) -> bool:
    """Pairwise distinct points (sup distance above epsilon)."""
    eps = resolve_eps(eps)
    _check_dims(points)
    return all(sup_distance(p, q) > eps for p, q in itertools.combinations(points, 2))


def in_convex_position(points: Sequence[SimplexPoint], eps: float | None = None) -> bool:
    """No point is a convex combination of the others.

    Points of the simplex all have unit coordinate sum, so hull membership
    coincides with membership in the cone over the other points.
    """
    points = list(points)
    if not is_configuration(points, eps):
        raise NotAConfiguration("points are not pairwise distinct")
    vectors = [p.vector() for p in points]
    for i, v in enumerate(vectors):
        others = vectors[:i] + vectors[i + 1 :]
        if others and cone_contains(others, v, eps).feasible:
            return False
    return True


@dataclass(frozen=True)
class SimplexConfiguration:
    """An ordered tuple of pairwise distinct simplex points."""

    points: tuple[SimplexPoint, ...]

    def __post_init__(self):
        pts = tuple(p if isinstance(p, SimplexPoint) else SimplexPoint(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("a configuration needs at least one point")
        if not is_configuration(pts):
            raise NotAConfiguration("points are not pairwise distinct")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _lex_sorted(points: Sequence[SimplexPoint], eps: float) -> tuple[SimplexPoint, ...]:
    # coordinates within eps count as equal so rounding noise cannot flip the order
    def cmp(p, q):
        for a, b in zip(p, q):
            if abs(a - b) > eps:
                return -1 if a < b else 1
        return 0

    return tuple(sorted(points, key=functools.cmp_to_key(cmp)))


@dataclass(frozen=True)
class GrassmannElement:
    """Canonical form of a k-subspace: sorted simplex points plus the flag."""

    canonical: tuple[SimplexPoint, ...]
    closed: bool

    @property
    def n(self) -> int:
        return len(self.canonical[0])

    @property
    def k(self) -> int:
        return len(self.canonical)


def grassmann_canonical(gens, closed: bool | None = None, eps: float | None = None) -> GrassmannElement:
    """Canonical form of the subspace spanned by independent generators.

    ``gens`` is a sequence of vectors or a ``ConicSubspace``; in the latter
    case ``closed`` defaults to the subspace's own flag, otherwise to open.
    """
    if isinstance(gens, ConicSubspace):
        if closed is None:
            closed = gens.closed
        gens = gens.generators
    gens = [g if isinstance(g, TropVector) else TropVector(g) for g in gens]
    if not gens:
        raise ValueError("at least one generator is required")
    if not is_independent(gens, eps):
        raise NotIndependent("generators are not tropically independent")
    points = [projectivize(g) for g in gens]
    if not in_convex_position(points, eps):
        raise AssertionError("independent generators produced a degenerate configuration")
    return GrassmannElement(_lex_sorted(points, resolve_eps(eps)), bool(closed))


def config_to_grassmann(cfg, closed: bool = False, eps: float | None = None) -> ConicSubspace:
    points = list(cfg.points if isinstance(cfg, SimplexConfiguration) else cfg)
    points = [p if isinstance(p, SimplexPoint) else SimplexPoint(p) for p in points]
    if not in_convex_position(points, eps):
        raise NotConvexPosition("configuration is not in convex position")
    return ConicSubspace(tuple(p.vector() for p in points), closed)


def closure_map(G: GrassmannElement) -> GrassmannElement:
    return replace(G, closed=True)


def interior_map(G: GrassmannElement) -> GrassmannElement:
    return replace(G, closed=False)


def subspace_eq(A: GrassmannElement, B: GrassmannElement, eps: float | None = None) -> bool:
    if A.n != B.n:
        raise DimensionMismatch(f"ambient dimensions {A.n} and {B.n}")
    eps = resolve_eps(eps)
    if A.closed != B.closed or A.k != B.k:
        return False
    return all(sup_distance(p, q) <= eps for p, q in zip(A.canonical, B.canonical))
