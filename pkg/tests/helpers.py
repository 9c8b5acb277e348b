import numpy as np

from tropix import TropVector, is_independent


def random_vector(rng, n, zero_rate=0.0, low=0.05, high=3.0):
    v = rng.uniform(low, high, size=n)
    if zero_rate:
        v[rng.random(n) < zero_rate] = 0.0
    return TropVector(v)


def max_independent(n):
    # two extreme rays at most in the plane; one in the line
    return {1: 1, 2: 2}.get(n, 4)


def random_independent_set(rng, n, k, zero_rate=0.0, simplicial=False):
    """Rejection-sample k independent vectors in dimension n.

    ``simplicial`` additionally asks for Euclidean linear independence.
    """
    while True:
        gens = []
        for _ in range(k):
            v = random_vector(rng, n, zero_rate)
            if not v.is_zero():
                gens.append(v)
        if len(gens) < k:
            continue
        if simplicial and np.linalg.matrix_rank(np.array([g.coords for g in gens])) < k:
            continue
        if is_independent(gens):
            return gens


def combination(gens, lam):
    return TropVector(sum(l * np.asarray(g.coords) for l, g in zip(lam, gens)))
