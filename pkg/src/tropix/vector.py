"""Tropical vectors: points of the nonnegative orthant.

The orthant is the max-times model of (R u {inf})^n.  Its strata, the sets
of vectors with a fixed zero pattern, are labelled by ``ComponentIndex``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from ._tol import resolve_eps
from .errors import DimensionMismatch, NotOnSphere, ZeroVector
from .scalar import INF, check_maxtimes, to_minplus


@dataclass(frozen=True)
class TropVector:
    coords: tuple[float, ...]

    def __init__(self, coords: Iterable[float]):
        values = tuple(check_maxtimes(c) for c in coords)
        if not values:
            raise ValueError("a tropical vector needs at least one coordinate")
        object.__setattr__(self, "coords", values)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self) -> str:
        return f"TropVector({list(self.coords)!r})"

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0.0 for c in self.coords)


@dataclass(frozen=True, order=True)
class ComponentIndex:
    """Zero/positive pattern of a vector.

    ``bits[j] == 1`` marks a positive j-th coordinate.  ``rank`` is one plus
    the bits read as a binary numeral, most significant first, so ranks run
    from 1 (the origin) to ``2**n`` (the open orthant) in lexicographic order.
    """

    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits or any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"bits must be a nonempty 0/1 sequence, got {self.bits!r}")

    @classmethod
    def from_rank(cls, n: int, rank: int) -> "ComponentIndex":
        if not 1 <= rank <= 2 ** n:
            raise ValueError(f"rank {rank} out of range for n={n}")
        value = rank - 1
        return cls(tuple((value >> (n - 1 - j)) & 1 for j in range(n)))

    @classmethod
    def parse(cls, text: str) -> "ComponentIndex":
        return cls(tuple(int(ch) for ch in text))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def rank(self) -> int:
        value = 0
        for b in self.bits:
            value = 2 * value + b
        return value + 1

    @property
    def bitstring(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __str__(self) -> str:
        return self.bitstring


def _same_dim(v: TropVector, w: TropVector) -> None:
    if len(v) != len(w):
        raise DimensionMismatch(f"dimension {len(v)} vs {len(w)}")


def zero_vector(n: int) -> TropVector:
    return TropVector([0.0] * n)


def basis_vector(n: int, j: int) -> TropVector:
    """The j-th standard basis vector (0-based)."""
    coords = [0.0] * n
    coords[j] = 1.0
    return TropVector(coords)


def ones_vector(n: int) -> TropVector:
    return TropVector([1.0] * n)


def vec_oplus(v: TropVector, w: TropVector) -> TropVector:
    _same_dim(v, w)
    return TropVector(a if a >= b else b for a, b in zip(v, w))


def flow_act(r: float, v: TropVector) -> TropVector:
    """The standard flow of (R, +): scale by ``exp(-r)``."""
    s = math.exp(-r)
    return TropVector(s * c for c in v)


def trop_scalar_act(t: float, v: TropVector) -> TropVector:
    """Action of a min-plus scalar; ``+inf`` sends every vector to zero."""
    if t == INF:
        return zero_vector(len(v))
    return flow_act(t, v)


def inner_trop(v: TropVector, w: TropVector) -> float:
    _same_dim(v, w)
    return max(a * b for a, b in zip(v, w))


def norm_trop(v: TropVector) -> float:
    # sqrt(max x_i^2) == max x_i on the orthant
    return max(v.coords)


def on_sphere(v: TropVector) -> bool:
    return norm_trop(v) == 1.0


def sphere_oplus(v: TropVector, w: TropVector) -> TropVector:
    if not on_sphere(v):
        raise NotOnSphere(f"{v!r} has tropical norm {norm_trop(v)}")
    if not on_sphere(w):
        raise NotOnSphere(f"{w!r} has tropical norm {norm_trop(w)}")
    return vec_oplus(v, w)


def is_proportional(v: TropVector, w: TropVector, eps: float | None = None) -> bool:
    """True when ``v = c*w`` for some ``c > 0``, up to the geometric epsilon.

    Both vectors are scaled to unit coordinate sum and compared in the
    sup norm.
    """
    _same_dim(v, w)
    if v.is_zero() or w.is_zero():
        raise ZeroVector("proportionality is undefined for the zero vector")
    eps = resolve_eps(eps)
    sv, sw = math.fsum(v), math.fsum(w)
    return max(abs(a / sv - b / sw) for a, b in zip(v, w)) <= eps


def component_index(v: TropVector) -> ComponentIndex:
    return ComponentIndex(tuple(1 if c > 0.0 else 0 for c in v))


def trop_coordinates(v: TropVector) -> list[float]:
    """Min-plus coordinates of ``v`` against the standard basis.

    Zero coordinates become ``+inf``; ``from_trop_coordinates`` inverts this.
    """
    return [to_minplus(c) for c in v]


def from_trop_coordinates(coords: Sequence[float]) -> TropVector:
    """Rebuild ``oplus_j  t_j . u_j`` from min-plus coordinates."""
    n = len(coords)
    acc = zero_vector(n)
    for j, t in enumerate(coords):
        acc = vec_oplus(acc, trop_scalar_act(t, basis_vector(n, j)))
    return acc

