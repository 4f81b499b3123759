import math
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from delpezzo.lattice import (
    DegenerateInputError,
    DimensionError,
    IntegerMatrix,
    LatticeVector,
    RankOutOfRangeError,
    Sublattice,
    canonical_class,
    degree,
    determinant,
    form_matrix,
    gram_matrix,
    inner,
    integer_kernel,
    invariant_factors,
    kernel_of_pairings,
    negated_form,
    orthogonal_complement,
    quotient_invariants,
    root_lattice,
    smith_normal_form,
)
from delpezzo.linalg import det_bareiss


def vectors(r):
    return st.lists(st.integers(-6, 6), min_size=r + 1, max_size=r + 1).map(lambda c: LatticeVector(tuple(c)))


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


def test_basis_products():
    e = [LatticeVector.basis(i, 3) for i in range(4)]
    assert inner(e[0], e[0]) == 1
    assert inner(e[2], e[2]) == -1
    assert inner(e[1], e[2]) == 0
    assert negated_form(e[1], e[1]) == 1


@pytest.mark.parametrize("r", range(1, 9))
def test_canonical_class_degree(r):
    k = canonical_class(r)
    assert k.coords == (-3,) + (1,) * r
    assert degree(r) == 9 - r


def test_rank_and_dimension_errors():
    with pytest.raises(RankOutOfRangeError):
        canonical_class(9)
    with pytest.raises(DimensionError):
        inner(LatticeVector((1, 0)), LatticeVector((1, 0, 0)))
    with pytest.raises(DegenerateInputError):
        orthogonal_complement(LatticeVector.zero(3))


def test_string_and_json():
    v = LatticeVector((2, -1, -1, 0))
    assert str(v) == "2e0 - e1 - e2"
    assert LatticeVector.from_json(v.to_json()) == v
    assert v.to_json() == ["2", "-1", "-1", "0"]


@given(st.integers(1, 8).flatmap(lambda r: st.tuples(vectors(r), vectors(r), vectors(r))), st.integers(-4, 4))
def test_form_is_symmetric_bilinear(uvw, a):
    u, v, w = uvw
    assert inner(u, v) == inner(v, u)
    assert inner(u * a + v, w) == a * inner(u, w) + inner(v, w)


@pytest.mark.parametrize("r", range(1, 9))
def test_unimodular(r):
    assert abs(determinant(IntegerMatrix.of(form_matrix(r)))) == 1


@given(matrices())
def test_smith_form_properties(rows):
    M = IntegerMatrix.of(rows)
    U, D, V = smith_normal_form(M)
    assert U @ M @ V == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    off = [D.entries[i][j] for i in range(D.rows) for j in range(D.cols) if i != j]
    assert not any(off)
    f = invariant_factors(M)
    assert all(d > 0 for d in f)
    assert all(b % a == 0 for a, b in zip(f, f[1:]))


@given(matrices(4, 4))
def test_invariant_factors_match_determinantal_divisors(rows):
    # d_1 ... d_k = gcd of k x k minors; an oracle independent of the elimination
    f = invariant_factors(IntegerMatrix.of(rows))
    m, n = len(rows), len(rows[0])
    prod = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = math.gcd(g, int(det_bareiss([[rows[i][j] for j in cs] for i in rs])))
        if k <= len(f):
            prod *= f[k - 1]
            assert g == prod
        else:
            assert g == 0


def test_smith_known_example():
    assert invariant_factors(IntegerMatrix.of([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])) == [2, 6, 12]


@given(matrices(3, 5))
def test_integer_kernel(rows):
    M = IntegerMatrix.of(rows)
    ker = integer_kernel(M)
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)
    rank = len(invariant_factors(M))
    assert len(ker) == len(rows[0]) - rank
    if ker:
        assert all(d == 1 for d in invariant_factors(IntegerMatrix.of(ker)))


def test_sublattice_membership():
    r = 2
    L = Sublattice((LatticeVector((2, 0, 0)), LatticeVector((0, 1, 1))), r)
    assert L.contains(LatticeVector((4, 3, 3)))
    assert not L.contains(LatticeVector((1, 0, 0)))
    assert not L.saturated
    assert quotient_invariants(L) == [2]


@pytest.mark.parametrize("r", range(3, 9))
def test_root_lattice_is_kappa_perp(r):
    L = root_lattice(r)
    assert L.rank == r
    assert L.saturated
    k = canonical_class(r)
    assert all(inner(g, k) == 0 for g in L.generators)
    # the even lattice kappa^perp has |discriminant| = kappa^2 = 9 - r
    assert abs(det_bareiss(gram_matrix(L.generators))) == 9 - r


def test_kernel_of_pairings():
    r = 4
    a = LatticeVector((0, 1, -1, 0, 0))
    K = kernel_of_pairings([a], r)
    assert K.rank == r
    assert all(inner(g, a) == 0 for g in K.generators)
    assert kernel_of_pairings([], r).rank == r + 1
