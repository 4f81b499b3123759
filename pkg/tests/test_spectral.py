import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from delpezzo.polynomials import Poly
from delpezzo.regularity import is_regular
from delpezzo.sampling import random_monic, random_triangular_field, sample_points
from delpezzo.spectral import (
    DomainError,
    NotMonicError,
    ParseError,
    PolyMatrix,
    SpectralCurve,
    companion_from_spectral,
    eigenline,
    format_bivariate,
    minor_gcd_at,
    parse_bivariate,
    parse_spectral,
    parse_univariate,
    pointwise_equivalent,
    regularity_divisor,
    spectral_curve,
)

s = Poly.x()
seeds = st.integers(0, 10**6)


def test_spectral_curve_examples():
    assert spectral_curve(PolyMatrix.of([[0, s], [1, 0]])) == parse_spectral("t^2 - s")
    assert spectral_curve(PolyMatrix.of([[0] * 3] * 3)) == parse_spectral("t^3")
    assert spectral_curve(PolyMatrix.of([[s, 0], [0, -s]])) == parse_spectral("t^2 - s^2")


def test_regularity_divisor_examples():
    assert regularity_divisor(PolyMatrix.of([[0, s], [1, 0]])) == Poly.const(1)
    assert regularity_divisor(PolyMatrix.of([[s, 0], [0, s]])).is_zero()
    D = regularity_divisor(PolyMatrix.of([[s, 0], [0, -s]]))
    assert D(0) == 0 and D(1) != 0 and D(-3) != 0


def test_companion_examples():
    phi = companion_from_spectral(parse_spectral("t^2 - s"))
    assert phi == PolyMatrix.of([[0, s], [1, 0]])
    P = parse_spectral("t^3 - s*t - 1")
    assert spectral_curve(companion_from_spectral(P)) == P
    nil = companion_from_spectral(parse_spectral("t^4"))
    assert regularity_divisor(nil) == Poly.const(1)
    with pytest.raises(NotMonicError):
        companion_from_spectral(parse_spectral("2t^2 - s"))


def test_eigenline_examples():
    phi = PolyMatrix.of([[0, s], [1, 0]])
    (v,) = eigenline(phi, 4, 2)
    assert v[0] == 2 * v[1]
    assert len(eigenline(PolyMatrix.of([[s, 0], [0, s]]), 1, 1)) == 2
    assert len(eigenline(companion_from_spectral(parse_spectral("t^3")), 7, 0)) == 1
    with pytest.raises(DomainError):
        eigenline(phi, 4, 3)


@given(seeds)
def test_roundtrip(seed):
    P = random_monic(random.Random(seed))
    phi = companion_from_spectral(P)
    assert spectral_curve(phi) == P
    assert regularity_divisor(phi) == Poly.const(1)


@given(seeds, st.integers(1, 4))
def test_trace_and_degree(seed, n):
    phi, _ = random_triangular_field(random.Random(seed), n)
    P = spectral_curve(phi)
    assert P.degree_t == n and P.is_monic()
    assert P.coeffs[n - 1] == -phi.trace()


@given(seeds, st.integers(1, 4))
def test_divisor_matches_pointwise_minor_gcd(seed, n):
    rng = random.Random(seed)
    phi, _ = random_triangular_field(rng, n)
    D = regularity_divisor(phi)
    for s0 in sample_points(rng, 4) + [Fraction(0)]:
        regular = minor_gcd_at(phi, s0) == Poly.const(1)
        assert regular == (D(s0) != 0)
        assert regular == is_regular(phi.at(s0))


@given(seeds, st.integers(1, 4))
def test_eigenlines_at_regular_points(seed, n):
    rng = random.Random(seed)
    phi, diag = random_triangular_field(rng, n)
    D = regularity_divisor(phi)
    for s0 in sample_points(rng, 3):
        for d in diag:
            dim = len(eigenline(phi, s0, d(s0)))
            if D(s0) != 0:
                assert dim == 1
            assert dim >= 1


@given(seeds)
def test_pointwise_equivalence_on_regular_fields(seed):
    rng = random.Random(seed)
    phi = companion_from_spectral(random_monic(rng, 4, 2))
    for s0 in sample_points(rng, 50):
        assert pointwise_equivalent(phi, s0)


def test_scalar_field_not_equivalent_to_companion():
    phi = PolyMatrix.of([[s, 0], [0, s]])
    assert not pointwise_equivalent(phi, 2)


def test_parser():
    assert parse_univariate("s^2 - 3/2*s + 1") == Poly([1, Fraction(-3, 2), 1])
    assert parse_univariate("(s+1)**2") == Poly([1, 2, 1])
    terms = parse_bivariate("t^2 - s*t + 2")
    assert terms == {(0, 2): 1, (1, 1): -1, (0, 0): 2}
    assert parse_bivariate(format_bivariate(terms)) == terms
    for bad in ("t^", "s +* t", "x", "(s"):
        with pytest.raises(ParseError):
            parse_bivariate(bad)


@given(seeds)
def test_json_roundtrip(seed):
    P = random_monic(random.Random(seed))
    assert SpectralCurve.from_json(P.to_json()) == P
    assert parse_spectral(str(P)) == P
