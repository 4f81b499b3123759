import random

import pytest
from hypothesis import given, strategies as st

from delpezzo.lattice import LatticeVector, canonical_class, inner
from delpezzo.roots import enumerate_roots
from delpezzo.weyl import (
    InvalidIsometryError,
    InvalidRootError,
    Isometry,
    OrbitCapExceeded,
    act_on_marking,
    group_order,
    orbit,
    reflect,
    reflection,
    simple_reflections,
    weyl_group_elements,
    word_to_isometry,
)


@pytest.mark.parametrize("r,order", [(3, 12), (4, 120), (5, 1920)])
def test_group_orders(r, order):
    assert group_order(r) == order


def test_r8_exceeds_cap():
    with pytest.raises(OrbitCapExceeded):
        group_order(8)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("DELPEZZO_ORBIT_CAP", "100")
    with pytest.raises(OrbitCapExceeded):
        group_order(4)


def root_pairs(r):
    roots = list(enumerate_roots(r))
    return st.tuples(st.sampled_from(roots), st.sampled_from(roots))


@given(st.integers(3, 8).flatmap(root_pairs))
def test_reflection_properties(pair):
    a, x = pair
    s = reflection(a)
    assert s.is_valid()
    assert (s @ s).is_identity()
    assert s @ a == -a
    assert s @ x == reflect(a, x)
    assert reflect(a, x) in enumerate_roots(a.rank_r)


@given(st.integers(3, 8), st.data())
def test_reflections_preserve_form(r, data):
    roots = list(enumerate_roots(r))
    a = data.draw(st.sampled_from(roots))
    u = LatticeVector(tuple(data.draw(st.lists(st.integers(-5, 5), min_size=r + 1, max_size=r + 1))))
    v = LatticeVector(tuple(data.draw(st.lists(st.integers(-5, 5), min_size=r + 1, max_size=r + 1))))
    assert inner(reflect(a, u), reflect(a, v)) == inner(u, v)
    assert reflect(a, canonical_class(r)) == canonical_class(r)


def test_reflection_rejects_non_roots():
    with pytest.raises(InvalidRootError):
        reflection(LatticeVector((1, 0, 0, 0)))


def test_invalid_isometry():
    bad = Isometry(((2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
    with pytest.raises(InvalidIsometryError):
        act_on_marking(bad, Isometry.identity(3))


def test_marking_action_is_a_group_action():
    W = weyl_group_elements(4).elements
    rng = random.Random(7)
    for _ in range(30):
        g, h, m = rng.sample(W, 3)
        assert act_on_marking(g @ h, m) == act_on_marking(g, act_on_marking(h, m))
        assert act_on_marking(Isometry.identity(4), m) == m


@pytest.mark.parametrize("r", [3, 4])
def test_simply_transitive(r):
    W = weyl_group_elements(r).elements
    m = W[len(W) // 2]
    images = {act_on_marking(w, m) for w in W}
    assert len(images) == len(W)
    assert [w for w in W if act_on_marking(w, m) == m] == [Isometry.identity(r)]


def test_inverse_and_words():
    r = 5
    w = word_to_isometry([1, 2, 3, 5, 4, 2], r)
    assert (w @ w.inverse()).is_identity()
    s = simple_reflections(r)
    assert w == s[0] @ s[1] @ s[2] @ s[4] @ s[3] @ s[1]


def test_orbit_words_reproduce_elements():
    r = 4
    res = orbit(Isometry.identity(r), simple_reflections(r), words=True)
    gens = simple_reflections(r)
    for x, word in list(res.generator_words.items())[:50]:
        y = Isometry.identity(r)
        for k in word:
            y = gens[k] @ y
        assert y == x


def test_elements_fix_kappa():
    for w in weyl_group_elements(4).elements:
        assert w @ canonical_class(4) == canonical_class(4)
