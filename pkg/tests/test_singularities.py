import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from delpezzo.lattice import LatticeVector, pairing_row
from delpezzo.roots import enumerate_roots, standard_simple_system
from delpezzo.sampling import random_config
from delpezzo.singularities import (
    ADEType,
    DependentSetError,
    NotADEError,
    NotARootError,
    PairingError,
    RootConfig,
    cartan_matrix,
    classify_ADE,
    classify_graph,
    generated_subsystem,
    kernel_sublattice,
    positive_subsystem,
    reflection_closure,
    semisimple_centralizer_type,
    torus_connected,
    validate_config,
    weyl_subgroup_order,
)
from delpezzo.verify import _small_configs
from delpezzo.linalg import det_bareiss
from delpezzo.weyl import weyl_group_elements, word_to_isometry

from conftest import maximal_minor_gcd


def cfg(r, *exprs):
    return RootConfig(r, tuple(LatticeVector(tuple(e)) for e in exprs))


def e(r, *pairs):
    c = [0] * (r + 1)
    for i, k in pairs:
        c[i] += k
    return tuple(c)


A2 = lambda r: cfg(r, e(r, (1, 1), (2, -1)), e(r, (2, 1), (3, -1)))


def test_a2_example():
    c = A2(6)
    assert classify_ADE(c).label == "A2"
    assert torus_connected(c).connected
    assert kernel_sublattice(c).rank == 5
    assert weyl_subgroup_order(c) == 6
    assert len(generated_subsystem(c)) == 6


def test_validation_errors():
    with pytest.raises(NotARootError):
        validate_config(cfg(6, e(6, (1, 1))))
    with pytest.raises(DependentSetError):
        validate_config(cfg(6, e(6, (1, 1), (2, -1)), e(6, (1, -1), (2, 1))))
    with pytest.raises(PairingError):
        # e1 - e2 and e1 - e3 pair to -1
        validate_config(cfg(6, e(6, (1, 1), (2, -1)), e(6, (1, 1), (3, -1))))


def test_empty_config():
    c = RootConfig(5, ())
    assert classify_ADE(c).label == "trivial"
    assert torus_connected(c).connected
    assert kernel_sublattice(c).rank == 6


@pytest.mark.parametrize("r,label", [(3, "A1+A2"), (4, "A4"), (5, "D5"), (6, "E6"), (7, "E7"), (8, "E8")])
def test_simple_systems(r, label):
    c = RootConfig(r, standard_simple_system(r).simple_roots)
    t = classify_ADE(c)
    assert t.label == label
    assert len(generated_subsystem(c)) == len(enumerate_roots(r))
    assert len(positive_subsystem(c)) * 2 == len(enumerate_roots(r))


def test_classify_graph_rejects_cycles_and_bad_trees():
    with pytest.raises(NotADEError):
        classify_graph({0: {1, 2}, 1: {0, 2}, 2: {0, 1}})
    star = {0: {1, 2, 3, 4}, 1: {0}, 2: {0}, 3: {0}, 4: {0}}
    with pytest.raises(NotADEError):
        classify_graph(star)
    # branched tree with arms 2, 5, 1 is not ADE
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 8)]
    adj = {i: set() for i in range(9)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    with pytest.raises(NotADEError):
        classify_graph(adj)


def test_ade_parse_roundtrip():
    t = ADEType.parse("A1+A2")
    assert t.label == "A1+A2" and t.rank == 3
    assert ADEType.parse("trivial").label == "trivial"


@pytest.mark.parametrize("r", [3, 4, 5])
def test_small_configs_connected_exhaustively(r):
    for c in _small_configs(r):
        cert = torus_connected(c)
        assert cert.connected
        assert maximal_minor_gcd([pairing_row(a) for a in c.roots]) == 1


@given(st.integers(0, 10**6), st.integers(6, 8))
def test_certificate_matches_minor_gcd_oracle(seed, r):
    c = random_config(random.Random(seed), r)
    cert = torus_connected(c)
    g = maximal_minor_gcd([pairing_row(a) for a in c.roots])
    prod = 1
    for d in cert.invariant_factors:
        prod *= d
    assert prod == g
    assert cert.connected == (g == 1)


def test_four_a1_in_cubic_is_disconnected():
    c = cfg(6, e(6, (1, 1), (2, -1)), e(6, (3, 1), (4, -1)), e(6, (5, -1), (6, 1)),
            e(6, (0, -2), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1)))
    assert classify_ADE(c).label == "A1+A1+A1+A1"
    cert = torus_connected(c)
    assert not cert.connected
    assert cert.invariant_factors == (1, 1, 1, 2)


def test_three_a2_in_e6_is_disconnected():
    r = 6
    c = RootConfig(r, tuple(LatticeVector(v) for v in [
        e(r, (0, -1), (1, 1), (2, 1), (3, 1)), e(r, (1, -1), (6, 1)), e(r, (2, -1), (3, 1)),
        e(r, (4, 1), (5, -1)), e(r, (0, 1), (1, -1), (4, -1), (6, -1)), e(r, (0, 1), (3, -1), (4, -1), (5, -1)),
    ]))
    assert classify_ADE(c).label == "A2+A2+A2"
    cert = torus_connected(c)
    assert not cert.connected
    assert cert.invariant_factors[-1] == 3


@pytest.mark.parametrize("r", [5, 6])
def test_parabolic_configs_connected(r):
    # W-translates of subsets of the simple system: the case where saturation does hold
    rng = random.Random(r)
    simple = standard_simple_system(r).simple_roots
    W = weyl_group_elements(5).elements if r == 5 else None
    for _ in range(60):
        subset = rng.sample(simple, rng.randint(1, r))
        w = rng.choice(W) if W else word_to_isometry([rng.randint(1, r) for _ in range(12)], r)
        c = RootConfig(r, tuple(w @ a for a in subset))
        assert torus_connected(c).connected


@given(st.integers(0, 10**6), st.integers(3, 8))
def test_generated_subsystem_is_reflection_closed(seed, r):
    c = random_config(random.Random(seed), r, size=min(r, 3))
    gen = set(generated_subsystem(c))
    assert gen == set(reflection_closure(c))


@given(st.integers(0, 10**6), st.integers(3, 7))
def test_cartan_matrix_shape(seed, r):
    c = validate_config(random_config(random.Random(seed), r))
    C = cartan_matrix(c)
    assert all(C[i][i] == 2 for i in range(len(C)))
    assert all(C[i][j] in (0, -1) for i in range(len(C)) for j in range(len(C)) if i != j)
    t = classify_ADE(c)
    assert t.rank == len(c)
    # |det Cartan| is the product of the component discriminants
    disc = {"A": lambda n: n + 1, "D": lambda n: 4, "E": lambda n: 9 - n}
    expected = 1
    for letter, n in t.components:
        expected *= disc[letter](n)
    assert det_bareiss(C) == expected


@pytest.mark.parametrize("label,order", [("A1", 2), ("A2", 6), ("A1+A1", 4), ("A3", 24)])
def test_weyl_subgroup_orders(label, order):
    r = 6
    simple = standard_simple_system(r).simple_roots
    pick = {"A1": [0], "A2": [0, 1], "A1+A1": [0, 2], "A3": [0, 1, 2]}[label]
    c = RootConfig(r, tuple(simple[i] for i in pick))
    assert classify_ADE(c).label == label
    assert weyl_subgroup_order(c) == order


def test_semisimple_centralizer():
    roots, t = semisimple_centralizer_type([0] * 7)
    assert len(roots) == 72 and t.label == "E6"
    roots, t = semisimple_centralizer_type([Fraction(1, 3), Fraction(-1, 3)] + [0] * 5)
    assert len(roots) == 40 and t.label == "D5"
