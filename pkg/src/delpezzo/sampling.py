"""Seeded random generators for property checks."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .lattice import LatticeVector, inner
from .linalg import rank
from .polynomials import Poly
from .regularity import RationalMatrix, block_diagonal, companion_matrix, jordan_block
from .roots import enumerate_roots
from .singularities import RootConfig
from .spectral import PolyMatrix, SpectralCurve


def small_fraction(rng: random.Random, num: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_unimodularish(rng: random.Random, n: int) -> RationalMatrix:
    """Random invertible rational matrix (unit lower times random upper triangular)."""
    L = [[Fraction(int(i == j)) if i <= j else small_fraction(rng, 3, 2) for j in range(n)] for i in range(n)]
    U = [[(Fraction(rng.choice([1, 2, -1, Fraction(1, 2)])) if i == j else small_fraction(rng, 3, 3)) if i <= j
          else Fraction(0) for j in range(n)] for i in range(n)]
    return RationalMatrix.of(L) @ RationalMatrix.of(U)


def random_structured_matrix(rng: random.Random, n: int) -> RationalMatrix:
    """Conjugate of a block matrix mixing Jordan blocks and companions of powers.

    Repeated eigenvalues and non-split characteristic polynomials make the
    Jordan-Chevalley parts nontrivial.
    """
    blocks: list[RationalMatrix] = []
    left = n
    while left:
        kind = rng.random()
        if kind < 0.4:
            size = rng.randint(1, left)
            blocks.append(jordan_block(size, rng.randint(-2, 2)))
        elif kind < 0.7 and left >= 2:
            base = Poly([rng.randint(-3, 3), rng.randint(-2, 2), 1])
            k = rng.randint(1, left // 2)
            blocks.append(companion_matrix(base ** k))
        else:
            size = rng.randint(1, left)
            c = rng.randint(-2, 2)
            blocks.append(RationalMatrix.identity(size).scale(c))
        left = n - sum(b.n for b in blocks)
    B = block_diagonal(blocks)
    P = random_unimodularish(rng, n)
    return P @ B @ P.inverse()


def random_matrix(rng: random.Random, n: int) -> RationalMatrix:
    if rng.random() < 0.25:
        return RationalMatrix.of([[small_fraction(rng) for _ in range(n)] for _ in range(n)])
    return random_structured_matrix(rng, n)


def random_config(rng: random.Random, r: int, size: int | None = None) -> RootConfig:
    """A random validated configuration, grown greedily from shuffled roots."""
    roots = list(enumerate_roots(r))
    target = size if size is not None else rng.randint(1, r)
    while True:
        rng.shuffle(roots)
        chosen: list[LatticeVector] = []
        for a in roots:
            if any(inner(a, b) not in (0, 1) for b in chosen):
                continue
            if rank([b.coords for b in chosen + [a]]) < len(chosen) + 1:
                continue
            chosen.append(a)
            if len(chosen) == target:
                return RootConfig(r, tuple(sorted(chosen)))


def random_monic(rng: random.Random, max_deg_t: int = 5, max_deg_s: int = 4) -> SpectralCurve:
    n = rng.randint(1, max_deg_t)
    coeffs = [Poly([small_fraction(rng, 4, 3) for _ in range(rng.randint(0, max_deg_s + 1))]) for _ in range(n)]
    return SpectralCurve(tuple(coeffs) + (Poly.const(1),))


def random_poly_s(rng: random.Random, deg: int = 2) -> Poly:
    return Poly([rng.randint(-3, 3) for _ in range(rng.randint(0, deg + 1))])


def random_triangular_field(rng: random.Random, n: int) -> PolyMatrix:
    """Conjugate (by a constant matrix) of an upper-triangular polynomial matrix.

    Its eigenvalues at s0 are the diagonal polynomials evaluated at s0, which
    gives rational points on the spectral curve.
    """
    T = [[random_poly_s(rng) if i <= j else Poly() for j in range(n)] for i in range(n)]
    P = random_unimodularish(rng, n)
    Pinv = P.inverse()
    rows = [[sum((P.rows[i][k] * T[k][l] * Pinv.rows[l][j] for k in range(n) for l in range(n)), Poly())
             for j in range(n)] for i in range(n)]
    return PolyMatrix.of(rows), [T[i][i] for i in range(n)]


def sample_points(rng: random.Random, k: int, lo: int = -5, hi: int = 5) -> list[Fraction]:
    return [Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(k)]


def permutations_sample(rng: random.Random, n: int, k: int) -> list[tuple[int, ...]]:
    out = []
    for _ in range(k):
        p = list(range(n))
        rng.shuffle(p)
        out.append(tuple(p))
    return out


def permute_vector(v: LatticeVector, perm: Sequence[int]) -> LatticeVector:
    """Permute the coordinates 1..r by ``perm`` (a permutation of 0..r-1)."""
    c = v.coords
    out = [c[0]] + [0] * (len(c) - 1)
    for i, p in enumerate(perm):
        out[p + 1] = c[i + 1]
    return LatticeVector(tuple(out))
