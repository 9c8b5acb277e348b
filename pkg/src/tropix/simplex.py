"""Dense two-phase tableau simplex with Bland's rule.

Solves ``min c.x  s.t.  A x = b, x >= 0`` for small dense problems (tens
of variables).  Bland's rule (lowest-index entering and leaving variable)
rules out cycling; ``eps`` is the pivot and feasibility tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: np.ndarray | None = None
    objective: float = float("nan")


def _pivot(T: np.ndarray, row: int, col: int) -> None:
    T[row] /= T[row, col]
    for r in range(T.shape[0]):
        if r != row and T[r, col] != 0.0:
            T[r] -= T[r, col] * T[row]


def _iterate(T: np.ndarray, basis: list[int], ncols: int, eps: float, max_iter: int) -> bool:
    """Run simplex pivots on the tableau; the last row holds reduced costs.

    Only columns below ``ncols`` may enter.  Returns False when unbounded.
    """
    m = len(basis)
    for _ in range(max_iter):
        costs = T[m, :ncols]
        entering = next((j for j in range(ncols) if costs[j] < -eps), None)
        if entering is None:
            return True
        col = T[:m, entering]
        best_ratio, leaving = None, None
        for i in range(m):
            if col[i] > eps:
                ratio = T[i, -1] / col[i]
                if (
                    best_ratio is None
                    or ratio < best_ratio - eps
                    or (abs(ratio - best_ratio) <= eps and basis[i] < basis[leaving])
                ):
                    best_ratio, leaving = ratio, i
        if leaving is None:
            return False
        _pivot(T, leaving, entering)
        basis[leaving] = entering
    raise RuntimeError(f"simplex did not terminate within {max_iter} pivots")


def solve_standard_form(c, A, b, eps: float = 1e-9, max_iter: int = 10_000) -> LPResult:
    A = np.array(A, dtype=float, ndmin=2)
    b = np.array(b, dtype=float).reshape(-1)
    c = np.array(c, dtype=float).reshape(-1)
    m, n = A.shape
    if b.shape[0] != m or c.shape[0] != n:
        raise ValueError(f"inconsistent LP shapes: A {A.shape}, b {b.shape}, c {c.shape}")

    flip = b < 0
    A[flip] *= -1.0
    b[flip] *= -1.0

    # phase 1: artificial basis, minimise their sum
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n : n + m] = np.eye(m)
    T[:m, -1] = b
    T[m, :n] = -A.sum(axis=0)
    T[m, -1] = -b.sum()
    basis = list(range(n, n + m))
    _iterate(T, basis, n + m, eps, max_iter)

    scale = 1.0 + float(np.abs(b).max(initial=0.0))
    if -T[m, -1] > eps * scale:
        return LPResult(INFEASIBLE)

    # drive remaining artificials out of the basis; drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= n:
            j = next((j for j in range(n) if abs(T[i, j]) > eps), None)
            if j is None:
                continue
            _pivot(T, i, j)
            basis[i] = j
        keep.append(i)
    T = np.vstack([T[keep][:, list(range(n)) + [-1]], np.zeros((1, n + 1))])
    basis = [basis[i] for i in keep]
    m = len(basis)

    # phase 2
    T[m, :n] = c
    for i, j in enumerate(basis):
        if T[m, j] != 0.0:
            T[m] -= T[m, j] * T[i]
    if not _iterate(T, basis, n, eps, max_iter):
        return LPResult(UNBOUNDED)

    x = np.zeros(n)
    for i, j in enumerate(basis):
        x[j] = max(T[i, -1], 0.0)
    return LPResult(OPTIMAL, x, float(c @ x))
