import itertools

import numpy as np
import pytest

from helpers import combination, max_independent, random_independent_set, random_vector
from oracles import lp_cone_member, lp_relint_margin
from tropix import (
    ComponentIndex,
    ConicSubspace,
    DimensionMismatch,
    NotIndependent,
    TooLarge,
    TropVector,
    basis_vector,
    component_index,
    cone_contains,
    face_restrict,
    from_trop_coordinates,
    is_independent,
    is_proportional,
    orthant_decomposition,
    relint_contains,
    span_contains,
    subspace_decomposition,
    trop_coordinates,
)

V = TropVector
SEED = 5
EX_GENS = (V([1, 0, 1]), V([0, 1, 1]))


def basis(n):
    return [basis_vector(n, j) for j in range(n)]


def test_cone_contains_examples():
    res = cone_contains(basis(2), V([2, 3]))
    assert res.feasible and np.allclose(res.witness, [2, 3])
    assert not cone_contains([V([1, 0, 0]), V([0, 1, 0]), V([1, 1, 2])], V([0, 0, 1])).feasible
    v = V([0.3, 1.2, 0])
    res = cone_contains([v], V([0.6, 2.4, 0]))
    assert res.feasible and np.allclose(res.witness, [2])
    with pytest.raises(DimensionMismatch):
        cone_contains(basis(2), V([1, 1, 1]))


def test_relint_contains_examples():
    res = relint_contains(basis(3), V([1, 1, 1]))
    assert res.feasible and res.margin == pytest.approx(1.0)
    assert not relint_contains(basis(3), V([1, 0, 1])).feasible
    v = V([0.5, 2])
    assert relint_contains([v], V([1.5, 6])).feasible


def test_origin_is_in_the_cone_but_not_the_open_span():
    assert cone_contains(basis(3), V([0, 0, 0])).feasible
    assert not relint_contains(basis(3), V([0, 0, 0])).feasible


def test_span_contains_examples():
    closed = ConicSubspace(EX_GENS, closed=True)
    open_ = ConicSubspace(EX_GENS, closed=False)
    assert span_contains(closed, V([1, 0, 1]))
    assert not span_contains(open_, V([1, 0, 1]))
    assert span_contains(closed, V([1, 1, 2])) and span_contains(open_, V([1, 1, 2]))
    with pytest.raises(DimensionMismatch):
        span_contains(closed, V([1, 1]))


def test_is_independent_examples():
    assert is_independent([V([1, 0, 0]), V([0, 1, 0]), V([1, 1, 2])])
    assert not is_independent([V([1, 0]), V([2, 0])])
    assert not is_independent([V([1, 0]), V([0, 1]), V([1, 1])])
    assert not is_independent([V([1, 0]), V([0, 0])])
    assert is_independent([V([0.2, 0.7])])


def test_pair_independence_is_non_proportionality():
    rng = np.random.default_rng(SEED)
    for _ in range(300):
        v = random_vector(rng, 3, 0.3)
        w = V(np.asarray(v.coords) * rng.uniform(0.1, 5)) if rng.random() < 0.3 else random_vector(rng, 3, 0.3)
        if v.is_zero() or w.is_zero():
            continue
        assert is_independent([v, w]) == (not is_proportional(v, w))


def test_conic_subspace_rejects_dependent_generators():
    with pytest.raises(NotIndependent):
        ConicSubspace((V([1, 0]), V([0, 1]), V([1, 1])))
    with pytest.raises(ValueError):
        ConicSubspace(())


def test_face_restrict_examples():
    C = ConicSubspace(EX_GENS)
    assert face_restrict(C, ComponentIndex((1, 0, 1))) == [V([1, 0, 1])]
    assert face_restrict(C, ComponentIndex((1, 1, 1))) == []
    assert face_restrict(C, ComponentIndex((0, 0, 0))) == []
    with pytest.raises(DimensionMismatch):
        face_restrict(C, ComponentIndex((1, 0)))


def test_subspace_decomposition_examples():
    dec = subspace_decomposition(ConicSubspace(EX_GENS))
    assert {I.bitstring: g for I, g in dec.items()} == {"101": [V([1, 0, 1])], "011": [V([0, 1, 1])]}
    interior = ConicSubspace((V([1, 2, 3]), V([3, 2, 1])))
    assert list(subspace_decomposition(interior)) == [ComponentIndex((1, 1, 1))]
    dec = subspace_decomposition(ConicSubspace(tuple(basis(3))))
    assert sorted(I.bitstring for I in dec) == ["001", "010", "100"]
    assert all(len(g) == 1 for g in dec.values())


def test_subspace_decomposition_partitions_generators():
    rng = np.random.default_rng(SEED)
    for _ in range(100):
        gens = random_independent_set(rng, 4, int(rng.integers(1, 5)), zero_rate=0.4)
        dec = subspace_decomposition(ConicSubspace(tuple(gens)))
        flat = [g for group in dec.values() for g in group]
        assert sorted(flat, key=lambda v: v.coords) == sorted(gens, key=lambda v: v.coords)
        for I, group in dec.items():
            assert face_restrict(ConicSubspace(tuple(gens)), I) == group


def test_orthant_decomposition_examples():
    assert [I.bits for I in orthant_decomposition(1)] == [(0,), (1,)]
    assert [I.bits for I in orthant_decomposition(2)] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert [I.rank for I in orthant_decomposition(3)] == list(range(1, 9))
    with pytest.raises(TooLarge):
        orthant_decomposition(17)


def test_lp_membership_against_constructive_witnesses_and_highs():
    rng = np.random.default_rng(SEED)
    for _ in range(500):
        n, k = int(rng.integers(1, 5)), int(rng.integers(1, 5))
        gens = [random_vector(rng, n, 0.2, low=0.0) for _ in range(k)]
        gens = [g for g in gens if not g.is_zero()] or [V(np.ones(n))]
        lam = rng.uniform(0, 3, size=len(gens))
        lam[rng.random(len(gens)) < 0.2] = 0.0
        x = combination(gens, lam)
        res = cone_contains(gens, x)
        assert res.feasible
        assert np.abs(np.array([g.coords for g in gens]).T @ res.witness - x.coords).max() <= 1e-9
        y = random_vector(rng, n, 0.2, low=0.0)
        assert cone_contains(gens, y).feasible == lp_cone_member([g.coords for g in gens], y.coords)


def _separated_instance(rng, n, k):
    """Generators on one side of a hyperplane through 0, a point on the other."""
    w = rng.uniform(-1, 1, size=n)
    w[0], w[1] = 1.0, -1.0
    gens = []
    while len(gens) < k:
        v = rng.uniform(0, 2, size=n)
        if w @ v > 0.05:
            gens.append(V(v))
    while True:
        x = rng.uniform(0, 2, size=n)
        if w @ x < -0.05:
            return gens, V(x)


def test_points_outside_a_separating_hyperplane_are_rejected():
    rng = np.random.default_rng(SEED)
    for _ in range(500):
        n = int(rng.integers(2, 5))
        gens, x = _separated_instance(rng, n, int(rng.integers(1, 5)))
        assert not cone_contains(gens, x).feasible
        assert not relint_contains(gens, x).feasible


def test_relint_is_inside_cone_and_matches_highs_margin():
    rng = np.random.default_rng(SEED)
    hits = 0
    for _ in range(1000):
        n, k = int(rng.integers(1, 5)), int(rng.integers(1, 5))
        gens = [random_vector(rng, n, 0.2) for _ in range(k)]
        gens = [g for g in gens if not g.is_zero()] or [V(np.ones(n))]
        if rng.random() < 0.5:
            x = combination(gens, rng.uniform(0, 2, size=len(gens)))
        else:
            x = random_vector(rng, n, 0.2, low=0.0)
        res = relint_contains(gens, x)
        if res.feasible:
            hits += 1
            assert cone_contains(gens, x).feasible
        ref = lp_relint_margin([g.coords for g in gens], x.coords)
        if ref is not None and ref > 1e-6:
            assert res.feasible and res.margin == pytest.approx(ref, abs=1e-7)
        elif ref is None:
            assert not res.feasible
    assert hits > 200


def test_strictly_positive_combinations_have_margin():
    rng = np.random.default_rng(SEED)
    for _ in range(500):
        n = int(rng.integers(1, 5))
        gens = random_independent_set(rng, n, int(rng.integers(1, max_independent(n) + 1)))
        lam = rng.uniform(0.1, 3, size=len(gens))
        res = relint_contains(gens, combination(gens, lam))
        assert res.feasible and res.margin >= 0.1 - 1e-9


def test_sub_span_exclusion_for_simplicial_cones():
    rng = np.random.default_rng(SEED)
    for _ in range(300):
        n = int(rng.integers(2, 5))
        k = int(rng.integers(2, n + 1))
        gens = random_independent_set(rng, n, k, simplicial=True)
        j = int(rng.integers(1, k))
        subset = [gens[i] for i in sorted(rng.choice(k, size=j, replace=False))]
        v = combination(subset, rng.uniform(0.1, 2, size=j))
        assert relint_contains(subset, v).feasible
        assert not relint_contains(gens, v).feasible


def test_sub_span_exclusion_fails_beyond_simplicial_cones():
    # four independent rays over a quadrilateral: the diagonal sum is interior
    gens = [V([1, 0, 0]), V([0, 1, 0]), V([0, 0.2, 0.8]), V([0.2, 0, 0.8])]
    assert is_independent(gens)
    v = combination([gens[0], gens[2]], [1, 1])
    assert relint_contains([gens[0], gens[2]], v).feasible
    assert relint_contains(gens, v).feasible


def test_basis_spans_orthant_and_is_the_unique_such_set():
    rng = np.random.default_rng(SEED)
    for n in range(1, 5):
        for x in (random_vector(rng, n, 0.3, low=0.0) for _ in range(50)):
            assert cone_contains(basis(n), x).feasible
    equal_cases = 0
    for _ in range(1000):
        n = int(rng.integers(1, 5))
        cand = [V(rng.choice([0.0, 0.0, 0.5, 1.0, 2.0], size=n)) for _ in range(n)]
        if any(c.is_zero() for c in cand):
            continue
        covers = all(cone_contains(cand, u).feasible for u in basis(n))
        inside = all(cone_contains(basis(n), c).feasible for c in cand)
        if covers and inside:
            equal_cases += 1
            matched = [next(j for j, u in enumerate(basis(n)) if is_proportional(c, u)) for c in cand]
            assert sorted(matched) == list(range(n))
    assert equal_cases > 10
    for n in range(1, 5):
        perm = rng.permutation(n)
        cand = [V(basis_vector(n, int(p)).coords) for p in perm]
        cand = [V(np.asarray(c.coords) * rng.uniform(0.1, 5)) for c in cand]
        assert all(cone_contains(cand, u).feasible for u in basis(n))


def test_orthant_stratification_partitions_points():
    rng = np.random.default_rng(SEED)
    strata = orthant_decomposition(3)
    for _ in range(10_000):
        x = random_vector(rng, 3, zero_rate=1 / 3, low=1e-3, high=5)
        I = component_index(x)
        assert sum(1 for J in strata if J == I) == 1
        coords = trop_coordinates(x)
        assert tuple(int(np.isfinite(c)) for c in coords) == I.bits
        assert from_trop_coordinates(coords).coords == pytest.approx(x.coords, rel=1e-12)


def test_open_strata_are_open_spans_of_basis_subsets():
    rng = np.random.default_rng(SEED)
    for I in orthant_decomposition(3)[1:]:
        sub = [basis_vector(3, j) for j, b in enumerate(I.bits) if b]
        for _ in range(20):
            x = random_vector(rng, 3, 0.4)
            assert relint_contains(sub, x).feasible == (component_index(x) == I)


def test_generator_strata_cover_the_cone_boundary():
    # every boundary point of the example lies on one of the two edge rays
    C = ConicSubspace(EX_GENS, closed=True)
    for s, t in itertools.product([0.0, 0.5, 2.0], repeat=2):
        x = V([s, t, s + t])
        assert span_contains(C, x)
        on_boundary = s == 0 or t == 0
        assert span_contains(ConicSubspace(EX_GENS, closed=False), x) == (not on_boundary and s + t > 0)
