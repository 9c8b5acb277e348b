"""The max-times matrix semiring M_{m,n}(R>=0).

``(A (+) B)_ij = max(A_ij, B_ij)`` and ``(A (.) B)_ij = max_k A_ik * B_kj``.
Zero entries are structural: invertibility and orthogonality are decided by
exact zero tests on the support pattern, never by tolerance.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from ._tol import ABS_FLOOR, REL_TOL
from .errors import DimensionMismatch, NotInvertible, NotMonomial, NotOrthogonal, TooLarge
from .vector import TropVector, inner_trop, norm_trop

MAX_ENUMERATE = 8


class TropMatrix:
    """Dense, immutable m-by-n matrix with nonnegative finite entries."""

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise ValueError(f"expected a nonempty 2-d array, got shape {a.shape}")
        if not np.all(np.isfinite(a)) or np.any(a < 0):
            raise ValueError("matrix entries must be finite and >= 0")
        a += 0.0  # normalise -0.0
        a.setflags(write=False)
        self._a = a

    @property
    def entries(self) -> np.ndarray:
        return self._a

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def column(self, j: int) -> TropVector:
        return TropVector(self._a[:, j])

    def columns(self) -> list[TropVector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "TropMatrix":
        return TropMatrix(self._a.T)

    def tolist(self) -> list[list[float]]:
        return self._a.tolist()

    def __getitem__(self, ij):
        return float(self._a[ij])

    def __eq__(self, other):
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._a, other._a))

    def __hash__(self):
        return hash((self.shape, self._a.tobytes()))

    def __repr__(self):
        return f"TropMatrix({self.tolist()!r})"

    def __add__(self, other):
        return mat_oplus(self, other)

    def __matmul__(self, other):
        return mat_odot(self, other)


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., n-1}``; ``images[i]`` is the image of ``i``.

    Composition ``s * t`` means "apply ``t`` first".
    """

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(i) for i in self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images!r}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(n))
        images[i], images[j] = j, i
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise DimensionMismatch(f"permutations on {self.n} and {other.n} letters")
        return Permutation(tuple(self.images[other.images[i]] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, s in enumerate(self.images):
            inv[s] = i
        return Permutation(tuple(inv))

    def matrix(self) -> TropMatrix:
        """``P`` with ``P[i, s(i)] = 1``, so that ``A (.) P == perm_act(s, A)``."""
        p = np.zeros((self.n, self.n))
        p[np.arange(self.n), self.images] = 1.0
        return TropMatrix(p)


def all_permutations(n: int):
    for images in itertools.permutations(range(n)):
        yield Permutation(images)


@dataclass(frozen=True)
class MonomialDecomposition:
    """``A = perm_act(sigma, diag(d))``, i.e. ``A[i, sigma(i)] = diag[i]``."""

    sigma: Permutation
    diag: tuple[float, ...]

    def matrix(self) -> TropMatrix:
        return perm_act(self.sigma, TropMatrix(np.diag(self.diag)))


def identity_matrix(n: int) -> TropMatrix:
    if n < 1:
        raise ValueError("n must be >= 1")
    return TropMatrix(np.eye(n))


def zero_matrix(m: int, n: int) -> TropMatrix:
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    return TropMatrix(np.zeros((m, n)))


def mat_oplus(A: TropMatrix, B: TropMatrix) -> TropMatrix:
    if A.shape != B.shape:
        raise DimensionMismatch(f"shapes {A.shape} and {B.shape} differ")
    return TropMatrix(np.maximum(A.entries, B.entries))


def mat_odot(A: TropMatrix, B: TropMatrix) -> TropMatrix:
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    # (m, p, 1) * (1, p, n) -> reduce over p
    prod = A.entries[:, :, None] * B.entries[None, :, :]
    return TropMatrix(prod.max(axis=1))


def _require_square(A: TropMatrix) -> None:
    if not A.is_square():
        raise DimensionMismatch(f"square matrix required, got {A.shape}")


def monomial_decompose(A: TropMatrix) -> MonomialDecomposition:
    """Split a monomial matrix into a permutation and a positive diagonal.

    Raises ``NotMonomial`` unless every row and column holds exactly one
    nonzero entry.
    """
    _require_square(A)
    support = A.entries != 0.0
    if not (np.all(support.sum(axis=1) == 1) and np.all(support.sum(axis=0) == 1)):
        raise NotMonomial("each row and column must contain exactly one nonzero entry")
    images = tuple(int(np.flatnonzero(row)[0]) for row in support)
    diag = tuple(float(A.entries[i, c]) for i, c in enumerate(images))
    return MonomialDecomposition(Permutation(images), diag)


def is_invertible(A: TropMatrix) -> bool:
    try:
        monomial_decompose(A)
    except (NotMonomial, DimensionMismatch):
        return False
    return True


def trop_inverse(A: TropMatrix) -> TropMatrix:
    """Two-sided inverse of a monomial matrix: ``B_ij = 1 / A_ji`` on the support.

    The products ``A (.) B`` and ``B (.) A`` have exact zeros off the
    diagonal; the diagonal is ``a * (1/a)``, which is exactly 1 whenever
    ``1/a`` is representable (powers of two) and within one ulp otherwise.
    """
    try:
        monomial_decompose(A)
    except NotMonomial as exc:
        raise NotInvertible(str(exc)) from None
    at = A.entries.T
    inv = np.zeros_like(at)
    np.divide(1.0, at, out=inv, where=at != 0.0)
    return TropMatrix(inv)


def _close_arrays(x: np.ndarray, y: np.ndarray, rel: float = REL_TOL) -> bool:
    return bool(np.all(np.abs(x - y) <= rel * np.maximum(np.abs(x), np.abs(y)) + ABS_FLOOR))


def is_idempotent(A: TropMatrix, rel: float = REL_TOL) -> bool:
    _require_square(A)
    return _close_arrays(mat_odot(A, A).entries, A.entries, rel)


def idempotent_necessary_conditions(A: TropMatrix) -> bool:
    """``A_ii <= 1`` and ``A_ik * A_ki <= min(A_ii, A_kk)`` for ``i != k``.

    Every idempotent satisfies these; the converse does not hold in general.
    """
    _require_square(A)
    a = A.entries
    d = np.diag(a)
    if np.any(d > 1.0):
        return False
    cyc = a * a.T
    bound = np.minimum(d[:, None], d[None, :])
    off = ~np.eye(A.rows, dtype=bool)
    return bool(np.all(cyc[off] <= bound[off]))


def is_permutation_matrix(A: TropMatrix) -> bool:
    if not A.is_square():
        return False
    a = A.entries
    if not np.all((a == 0.0) | (a == 1.0)):
        return False
    return bool(np.all(a.sum(axis=0) == 1.0) and np.all(a.sum(axis=1) == 1.0))


def _orthonormal_columns(A: TropMatrix) -> bool:
    cols = A.columns()
    if any(norm_trop(c) != 1.0 for c in cols):
        return False
    return all(inner_trop(cols[i], cols[j]) == 0.0 for i, j in itertools.combinations(range(len(cols)), 2))


def is_trop_orthogonal(A: TropMatrix) -> bool:
    """Unit tropical norm columns with pairwise zero inner product.

    Such a matrix is necessarily a permutation matrix; both tests are run
    and must agree.
    """
    _require_square(A)
    by_columns = _orthonormal_columns(A)
    by_shape = is_permutation_matrix(A)
    if by_columns != by_shape:
        raise AssertionError(f"orthogonality characterisations disagree on {A!r}")
    return by_columns


def enumerate_orthogonal(n: int) -> list[TropMatrix]:
    """All n! tropical orthogonal n-by-n matrices, identity first."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MAX_ENUMERATE:
        raise TooLarge(f"n={n} exceeds {MAX_ENUMERATE} ({math.factorial(n)} matrices)")
    ident = identity_matrix(n)
    return [perm_act(s, ident) for s in all_permutations(n)]


def perm_act(sigma: Permutation, A: TropMatrix) -> TropMatrix:
    """Move column ``i`` of ``A`` to position ``sigma(i)`` (a left action)."""
    if sigma.n != A.cols:
        raise DimensionMismatch(f"permutation on {sigma.n} letters, matrix has {A.cols} columns")
    out = np.empty_like(A.entries)
    out[:, list(sigma.images)] = A.entries
    return TropMatrix(out)


def block_diag(P: TropMatrix, Q: TropMatrix) -> TropMatrix:
    n, k = P.rows, Q.rows
    out = np.zeros((n + k, P.cols + Q.cols))
    out[:n, : P.cols] = P.entries
    out[n:, P.cols :] = Q.entries
    return TropMatrix(out)


def block_act(P: TropMatrix, Q: TropMatrix, A: TropMatrix) -> TropMatrix:
    """Left action of O(n) x O(k) on invertible (n+k)-square matrices."""
    for M in (P, Q):
        _require_square(M)
        if not is_trop_orthogonal(M):
            raise NotOrthogonal(f"{M!r} is not tropically orthogonal")
    _require_square(A)
    if A.rows != P.rows + Q.rows:
        raise DimensionMismatch(f"blocks {P.rows}+{Q.rows} do not fit a {A.shape} matrix")
    if not is_invertible(A):
        raise NotInvertible(f"{A!r} is not monomial")
    return mat_odot(block_diag(P, Q), A)


def stabilize(A: TropMatrix) -> TropMatrix:
    m, n = A.shape
    out = np.zeros((m + 1, n + 1))
    out[:m, :n] = A.entries
    out[m, n] = 1.0
    return TropMatrix(out)
