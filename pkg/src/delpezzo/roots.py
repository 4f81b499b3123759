"""Roots, lines (exceptional classes) and the standard simple system of Lambda_r."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt

from .lattice import LatticeVector, canonical_class, check_rank, inner

MIN_R, MAX_R = 3, 8


@dataclass(frozen=True)
class RootSet:
    rank_r: int
    roots: tuple[LatticeVector, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.roots))

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, v) -> bool:
        return v in self._members


@dataclass(frozen=True)
class LineSet:
    rank_r: int
    lines: tuple[LatticeVector, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.lines))

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def __contains__(self, v) -> bool:
        return v in self._members


@dataclass(frozen=True)
class SimpleSystem:
    """alphas[i] / omegas[i] hold alpha_{i+1} / omega_{i+1}; the last entries extend to bases."""

    rank_r: int
    alphas: tuple[LatticeVector, ...]
    omegas: tuple[LatticeVector, ...]

    @property
    def simple_roots(self) -> tuple[LatticeVector, ...]:
        return self.alphas[: self.rank_r]

    def pairing_matrix(self) -> list[list[int]]:
        """Entry (i, j) is alpha_{i+1} . omega_{j+1} (dot product)."""
        return [[inner(a, w) for w in self.omegas] for a in self.alphas]

    def negated_pairing_matrix(self) -> list[list[int]]:
        return [[-x for x in row] for row in self.pairing_matrix()]

    def root_coordinates(self, alpha: LatticeVector) -> tuple[int, ...]:
        """Coefficients of a root in the basis alpha_1..alpha_r."""
        return tuple(inner(alpha, w) for w in self.omegas[: self.rank_r])

    def is_positive(self, alpha: LatticeVector) -> bool:
        c = self.root_coordinates(alpha)
        return any(c) and all(x >= 0 for x in c)


def _solutions(r: int, linear: int, quadratic: int):
    """Integer b in Z^r with sum(b) = linear and sum(b_i^2) = quadratic."""
    out: list[tuple[int, ...]] = []
    b = [0] * r

    def rec(i: int, rem_lin: int, rem_sq: int) -> None:
        left = r - i
        if left == 0:
            if rem_lin == 0 and rem_sq == 0:
                out.append(tuple(b))
            return
        # Cauchy-Schwarz on the remaining coordinates
        if rem_sq < 0 or rem_lin * rem_lin > left * rem_sq:
            return
        bound = isqrt(rem_sq)
        for x in range(-bound, bound + 1):
            b[i] = x
            rec(i + 1, rem_lin - x, rem_sq - x * x)
        b[i] = 0

    rec(0, linear, quadratic)
    return out


def _leading_range(r: int, lin_c: int, sq_c: int) -> list[int]:
    """Leading coefficients a allowed by Cauchy-Schwarz: (3a + lin_c)^2 <= r (a^2 + sq_c).

    Since r < 9 the quadratic in a has positive leading term, so the set is a
    bounded interval; |a| <= 20 contains it for every r <= 8.
    """
    return [a for a in range(-20, 21) if (3 * a + lin_c) ** 2 <= r * (a * a + sq_c)]


def _enumerate(r: int, lin_c: int, sq_c: int) -> tuple[LatticeVector, ...]:
    # x = a e_0 - sum b_i e_i with sum b_i = 3a + lin_c and sum b_i^2 = a^2 + sq_c
    found = []
    for a in _leading_range(r, lin_c, sq_c):
        if a * a + sq_c < 0:
            continue
        for b in _solutions(r, 3 * a + lin_c, a * a + sq_c):
            found.append(LatticeVector((a,) + tuple(-x for x in b)))
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def enumerate_roots(r: int) -> RootSet:
    """All alpha with alpha.alpha = -2 and alpha.kappa_r = 0, sorted lexicographically."""
    check_rank(r, MIN_R, MAX_R)
    roots = _enumerate(r, 0, 2)
    k = canonical_class(r)
    assert all(inner(a, a) == -2 and inner(a, k) == 0 for a in roots)
    return RootSet(r, roots)


@lru_cache(maxsize=None)
def enumerate_lines(r: int) -> LineSet:
    """All l with l.l = -1 and l.kappa_r = -1, sorted lexicographically."""
    check_rank(r, MIN_R, MAX_R)
    lines = _enumerate(r, -1, 1)
    k = canonical_class(r)
    assert all(inner(x, x) == -1 and inner(x, k) == -1 for x in lines)
    return LineSet(r, lines)


def _e(i: int, r: int) -> LatticeVector:
    return LatticeVector.basis(i, r)


@lru_cache(maxsize=None)
def standard_simple_system(r: int) -> SimpleSystem:
    check_rank(r, MIN_R, MAX_R)
    e = [_e(i, r) for i in range(r + 1)]
    alphas = [e[i] - e[i + 1] for i in range(1, r)]
    alphas.append(e[0] - e[1] - e[2] - e[3])
    alphas.append(e[3])

    omegas = [e[0] - e[1], 2 * e[0] - e[1] - e[2]]
    for i in range(3, r):
        w = LatticeVector.zero(r)
        for j in range(i + 1, r + 1):
            w = w + e[j]
        omegas.append(w)
    omegas.append(e[0])
    omegas.append(canonical_class(r))
    return SimpleSystem(r, tuple(alphas), tuple(omegas))


def dynkin_diagram(r: int) -> dict[int, set[int]]:
    """Adjacency over 1..r: i ~ j iff alpha_i . alpha_j = 1."""
    simple = standard_simple_system(r).simple_roots
    adj: dict[int, set[int]] = {i: set() for i in range(1, r + 1)}
    for i in range(r):
        for j in range(i + 1, r):
            if inner(simple[i], simple[j]) == 1:
                adj[i + 1].add(j + 1)
                adj[j + 1].add(i + 1)
    return adj


def positive_roots(r: int) -> tuple[LatticeVector, ...]:
    ss = standard_simple_system(r)
    return tuple(a for a in enumerate_roots(r) if ss.is_positive(a))
