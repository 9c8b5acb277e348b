"""Finitely generated cones in the nonnegative orthant.

``Cone{v_1..v_k}`` is the set of nonnegative (Euclidean) combinations of
the generators; it is the closed span over the min-plus scalars.  The open
span over the additive reals is its relative interior: the strictly
positive combinations.  Both memberships are linear feasibility problems
solved by ``simplex.solve_standard_form``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._tol import resolve_eps
from .errors import DimensionMismatch, NotIndependent, TooLarge
from .simplex import OPTIMAL, solve_standard_form
from .vector import ComponentIndex, TropVector, component_index

MAX_ORTHANT_DIM = 16

@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of a membership query.

    ``witness`` holds the combination coefficients when feasible.  ``margin``
    is the optimal smallest coefficient for relative-interior queries and 0
    for closed-cone queries.
    """

    feasible: bool
    witness: tuple[float, ...] | None = None
    margin: float = 0.0

    def __bool__(self) -> bool:
        return self.feasible

def _dim(vectors: Sequence[TropVector]) -> int:
    dims = {len(v) for v in vectors}
    if len(dims) > 1:
        raise DimensionMismatch(f"mixed dimensions {sorted(dims)}")
    return dims.pop()

def _setup(gens: Sequence[TropVector], x: TropVector) -> np.ndarray:
    if gens and _dim(list(gens) + [x]) != len(x):
        raise DimensionMismatch("generators and point differ in dimension")
    return np.array([g.coords for g in gens], dtype=float).T.reshape(len(x), len(gens))

def _reconstructs(V: np.ndarray, lam: np.ndarray, x: TropVector, eps: float) -> bool:
    target = np.asarray(x.coords)
    residual = np.abs(V @ lam - target).max(initial=0.0)
    return residual <= eps * max(1.0, float(target.max()))

def cone_contains(gens: Sequence[TropVector], x: TropVector, eps: float | None = None) -> FeasibilityResult:
    """Is ``x = sum lam_i v_i`` for some ``lam >= 0``?"""
    eps = resolve_eps(eps)
    V = _setup(gens, x)
    if not gens:
        return FeasibilityResult(x.is_zero(), () if x.is_zero() else None)
    res = solve_standard_form(np.zeros(len(gens)), V, x.coords, eps)
    if res.status != OPTIMAL or not _reconstructs(V, res.x, x, eps):
        return FeasibilityResult(False)
    return FeasibilityResult(True, tuple(float(c) for c in res.x))

def relint_contains(gens: Sequence[TropVector], x: TropVector, eps: float | None = None) -> FeasibilityResult:
    """Is ``x`` a combination with every coefficient strictly positive?

    Solves ``max t`` subject to ``sum lam_i v_i = x`` and ``lam_i >= t >= 0``
    via the substitution ``lam_i = t + mu_i``; membership iff ``t* > eps``.
    """
    eps = resolve_eps(eps)
    V = _setup(gens, x)
    if not gens:
        return FeasibilityResult(False)
    k = len(gens)
    A = np.hstack([V, V.sum(axis=1, keepdims=True)])
    c = np.zeros(k + 1)
    c[-1] = -1.0
    res = solve_standard_form(c, A, x.coords, eps)
    if res.status != OPTIMAL:
        return FeasibilityResult(False)
    t = float(res.x[-1])
    lam = res.x[:k] + t
    if t <= eps or not _reconstructs(V, lam, x, eps):
        return FeasibilityResult(False, margin=t)
    return FeasibilityResult(True, tuple(float(c) for c in lam), t)

def is_independent(vectors: Sequence[TropVector], eps: float | None = None) -> bool:
    """No vector is zero and none lies in the closed cone of the others.

    For two vectors this is non-proportionality.
    """
    vectors = list(vectors)
    if not vectors:
        return True
    _dim(vectors)
    if any(v.is_zero() for v in vectors):
        return False
    for i, v in enumerate(vectors):
        others = vectors[:i] + vectors[i + 1 :]
        if others and cone_contains(others, v, eps).feasible:
            return False
    return True

@dataclass(frozen=True)
class ConicSubspace:
    """A k-subspace: independent generators plus an open/closed flag.

    ``closed=True`` is the closed cone, ``closed=False`` its relative
    interior.
    """

    generators: tuple[TropVector, ...]
    closed: bool = True

    def __post_init__(self):
        gens = tuple(g if isinstance(g, TropVector) else TropVector(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("a subspace needs at least one generator")
        _dim(gens)
        if not is_independent(gens):
            raise NotIndependent("generators are not tropically independent")

    @property
    def n(self) -> int:
        return len(self.generators[0])

    @property
    def k(self) -> int:
        return len(self.generators)

def span_contains(C: ConicSubspace, x: TropVector, eps: float | None = None) -> bool:
    if len(x) != C.n:
        raise DimensionMismatch(f"point of dimension {len(x)} vs subspace in dimension {C.n}")
    query = cone_contains if C.closed else relint_contains
    return query(C.generators, x, eps).feasible

def face_restrict(C: ConicSubspace, I: ComponentIndex) -> list[TropVector]:
    """Generators of ``C`` lying in the stratum ``I``."""
    if I.n != C.n:
        raise DimensionMismatch(f"index of length {I.n} vs dimension {C.n}")
    return [g for g in C.generators if component_index(g) == I]

def subspace_decomposition(C: ConicSubspace) -> dict[ComponentIndex, list[TropVector]]:
    """Group the generators by stratum, keys in increasing rank."""
    groups: dict[ComponentIndex, list[TropVector]] = {}
    for g in C.generators:
        groups.setdefault(component_index(g), []).append(g)
    return dict(sorted(groups.items(), key=lambda item: item[0].rank))

def orthant_decomposition(n: int) -> list[ComponentIndex]:
    """All 2**n strata of the n-dimensional orthant in rank order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MAX_ORTHANT_DIM:
        raise TooLarge(f"n={n} exceeds {MAX_ORTHANT_DIM}")
    return [ComponentIndex.from_rank(n, r) for r in range(1, 2**n + 1)]
