from itertools import permutations, product

import pytest

from delpezzo.lattice import LatticeVector, canonical_class, inner
from delpezzo.roots import (
    dynkin_diagram,
    enumerate_lines,
    enumerate_roots,
    positive_roots,
    standard_simple_system,
)
from delpezzo.singularities import RootConfig, classify_ADE
from delpezzo.weyl import orbit, simple_reflections

ROOTS = {3: 8, 4: 20, 5: 40, 6: 72, 7: 126, 8: 240}
LINES = {3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}


def brute_force(r, square, kappa_pairing, box=4):
    k = canonical_class(r)
    found = set()
    for c in product(range(-box, box + 1), repeat=r + 1):
        v = LatticeVector(c)
        if inner(v, v) == square and inner(v, k) == kappa_pairing:
            found.add(v)
    return found


@pytest.mark.parametrize("r", sorted(ROOTS))
def test_counts(r):
    assert len(enumerate_roots(r)) == ROOTS[r]
    assert len(enumerate_lines(r)) == LINES[r]


@pytest.mark.parametrize("r", [3, 4, 5])
def test_against_box_search(r):
    assert set(enumerate_roots(r)) == brute_force(r, -2, 0)
    assert set(enumerate_lines(r)) == brute_force(r, -1, -1)


def test_e8_root_with_leading_coefficient_three():
    v = LatticeVector((3, -2, -1, -1, -1, -1, -1, -1, -1))
    assert v in enumerate_roots(8)
    assert max(abs(x[0]) for x in enumerate_roots(8)) == 3
    assert max(abs(x[0]) for x in enumerate_lines(8)) == 6


@pytest.mark.parametrize("r", range(4, 9))
def test_roots_form_one_weyl_orbit(r):
    roots = enumerate_roots(r)
    assert set(orbit(roots.roots[0], simple_reflections(r))) == set(roots)


@pytest.mark.parametrize("r", range(3, 9))
def test_lines_form_one_weyl_orbit(r):
    lines = enumerate_lines(r)
    assert set(orbit(lines.lines[0], simple_reflections(r))) == set(lines)


@pytest.mark.parametrize("r", range(3, 9))
def test_roots_closed_under_negation(r):
    roots = enumerate_roots(r)
    assert all(-a in roots for a in roots)
    assert len(positive_roots(r)) * 2 == len(roots)


@pytest.mark.parametrize("r", range(3, 9))
def test_duality(r):
    ss = standard_simple_system(r)
    P = ss.pairing_matrix()
    for i in range(r + 1):
        for j in range(r + 1):
            expected = 0 if i != j else (-1 if i == r else 1)
            assert P[i][j] == expected


@pytest.mark.parametrize("r", range(3, 9))
def test_simple_coordinates_are_sign_coherent(r):
    ss = standard_simple_system(r)
    for a in enumerate_roots(r):
        c = ss.root_coordinates(a)
        assert all(x >= 0 for x in c) or all(x <= 0 for x in c)
        back = LatticeVector.zero(r)
        for x, s in zip(c, ss.simple_roots):
            back = back + s * x
        assert back == a


@pytest.mark.parametrize("r,label", [(3, "A1+A2"), (4, "A4"), (5, "D5"), (6, "E6"), (7, "E7"), (8, "E8")])
def test_dynkin_types(r, label):
    ss = standard_simple_system(r)
    assert classify_ADE(RootConfig(r, ss.simple_roots)).label == label
    edges = sum(len(v) for v in dynkin_diagram(r).values()) // 2
    assert edges == r - (2 if r == 3 else 1)


@pytest.mark.parametrize("r", [3, 4, 5])
def test_ordered_exceptional_systems_count_weyl_order(r):
    # markings <-> ordered r-tuples of pairwise disjoint lines; independent of the orbit code
    lines = list(enumerate_lines(r))
    count = 0
    for tup in permutations(lines, r):
        if all(inner(a, b) == 0 for i, a in enumerate(tup) for b in tup[i + 1:]):
            count += 1
    assert count == {3: 12, 4: 120, 5: 1920}[r]


def test_cubic_surface_line_incidences():
    lines = list(enumerate_lines(6))
    for l in lines:
        assert sum(1 for m in lines if inner(l, m) == 1) == 10
