"""Scalar carriers of the tropical line.

Two isomorphic semirings are used throughout:

* max-times: nonnegative floats with ``oplus = max`` and ``odot = *``;
  ``0`` is additive identity, ``1`` multiplicative identity.
* min-plus: floats plus ``+inf`` with ``oplus = min`` and ``odot = +``;
  ``inf`` is additive identity, ``0`` multiplicative identity.

``to_minplus`` (``x -> -ln x``) and ``to_maxtimes`` (``t -> exp(-t)``) are
mutually inverse order-reversing semiring isomorphisms.  Scalars are plain
Python floats; the aliases below only document intent.

The integer min-plus algebra (N with infinity) is the min-plus carrier
restricted to integral values and needs no separate type.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, TypeVar

from ._tol import ABS_FLOOR

MaxTimesScalar = float
MinPlusScalar = float

INF = math.inf

T = TypeVar("T")


def check_maxtimes(x: float) -> float:
    x = float(x)
    if not (x >= 0.0) or math.isinf(x):
        raise ValueError(f"max-times scalar must be finite and >= 0, got {x!r}")
    return x


def check_minplus(t: float) -> float:
    t = float(t)
    if math.isnan(t) or t == -INF:
        raise ValueError(f"min-plus scalar must be real or +inf, got {t!r}")
    return t


# -- max-times ---------------------------------------------------------------

def mt_oplus(a: float, b: float) -> float:
    return a if a >= b else b


def mt_odot(a: float, b: float) -> float:
    return a * b


# -- min-plus ----------------------------------------------------------------

def mp_oplus(a: float, b: float) -> float:
    return a if a <= b else b


def mp_odot(a: float, b: float) -> float:
    # inf absorbs; explicit so that inf + (-inf) never arises
    if a == INF or b == INF:
        return INF
    return a + b


# -- isomorphism -------------------------------------------------------------

def to_minplus(x: float) -> float:
    """``-ln x``, sending 0 to ``+inf``."""
    if x < 0:
        raise ValueError(f"to_minplus needs x >= 0, got {x!r}")
    if x == 0.0:
        return INF
    return -math.log(x)


def to_maxtimes(t: float) -> float:
    """``exp(-t)``, sending ``+inf`` to 0."""
    if t == INF:
        return 0.0
    return math.exp(-t)


# -- generic min/max constructions ------------------------------------------

def min_by_norm(a: T, b: T, norm: Callable[[T], float]) -> T:
    """Pick the argument of smaller norm.

    Equal norms resolve to ``a`` so the operation is total even when
    ``a != b``.
    """
    return a if norm(a) <= norm(b) else b


@dataclass(frozen=True)
class ProjectionCarrier:
    """A sample of carrier elements together with an endomorphism ``tau``.

    ``min_tau`` needs ``tau`` idempotent and ``max_tau`` needs it to be an
    involution; both laws can only be checked on the listed elements.
    """

    elements: tuple
    tau: Callable[[float], float]

    def __call__(self, x):
        return self.tau(x)

    def is_projection(self) -> bool:
        return all(self.tau(self.tau(x)) == self.tau(x) for x in self.elements)

    def is_involution(self) -> bool:
        return all(self.tau(self.tau(x)) == x for x in self.elements)


def _law_sample(tau, a, b) -> ProjectionCarrier:
    if isinstance(tau, ProjectionCarrier):
        return tau
    return ProjectionCarrier((a, b, a - b, b - a), tau)


def min_tau(a: float, b: float, tau: Callable[[float], float] = abs, *, validate: bool = False) -> float:
    """``(a + b - tau(a - b)) / 2``; with ``tau = abs`` this is ``min(a, b)``.

    With ``validate=True`` the idempotency of ``tau`` is checked on the
    carrier sample (or on ``a, b, a-b, b-a`` for a bare callable).
    """
    if validate and not _law_sample(tau, a, b).is_projection():
        raise ValueError("tau is not idempotent on the carrier sample")
    return (a + b - tau(a - b)) / 2


def max_tau(a: float, b: float, tau: Callable[[float], float] = abs, *, validate: bool = False) -> float:
    """``(a + b + tau(a - b)) / 2``; with ``tau = abs`` this is ``max(a, b)``.

    ``validate=True`` checks that ``tau`` is an involution.  Note that
    ``abs`` itself is not one, so validation must stay off for it.
    """
    if validate and not _law_sample(tau, a, b).is_involution():
        raise ValueError("tau is not an involution on the carrier sample")
    return (a + b + tau(a - b)) / 2



def iso_deviation(a: float, b: float) -> float:
    """Largest relative defect of the log/exp isomorphism on the pair ``(a, b)``.

    Checks that ``to_minplus`` carries max to min and product to sum, and
    that ``to_maxtimes`` undoes it.  Each defect is measured against the
    magnitudes involved; differences below ``ABS_FLOOR`` count as 0.
    """
    fa, fb = to_minplus(a), to_minplus(b)
    pairs = [
        (to_minplus(mt_oplus(a, b)), mp_oplus(fa, fb), (fa, fb)),
        (to_minplus(mt_odot(a, b)), mp_odot(fa, fb), (fa, fb)),
        (to_maxtimes(fa), a, ()),
        (to_maxtimes(fb), b, ()),
    ]
    worst = 0.0
    for x, y, operands in pairs:
        if x == y or (abs(x - y) <= ABS_FLOOR and not math.isinf(x - y)):
            continue
        if math.isinf(x) or math.isinf(y):
            return INF
        scale = max([abs(x), abs(y)] + [abs(t) for t in operands if not math.isinf(t)])
        worst = max(worst, abs(x - y) / scale)
    return worst
