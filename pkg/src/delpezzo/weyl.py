"""Reflections, Weyl group orbits and the action of W on markings.

A marking Lambda_r -> Pic(S) is modelled as a self-isometry of Lambda_r
fixing kappa_r. W acts on markings by precomposition: w . m = m o w^{-1}.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .lattice import LatticeVector, canonical_class, check_rank, inner, pairing_row
from .roots import standard_simple_system

DEFAULT_ORBIT_CAP = 10**7
ORBIT_CAP_ENV = "DELPEZZO_ORBIT_CAP"


class InvalidRootError(ValueError):
    pass


class InvalidIsometryError(ValueError):
    pass


class ResourceError(RuntimeError):
    pass


class OrbitCapExceeded(ResourceError):
    def __init__(self, cap: int):
        super().__init__(f"orbit exceeded the size cap of {cap} elements (set {ORBIT_CAP_ENV} to change it)")
        self.cap = cap


def orbit_cap() -> int:
    raw = os.environ.get(ORBIT_CAP_ENV)
    return int(raw) if raw else DEFAULT_ORBIT_CAP


@dataclass(frozen=True)
class Isometry:
    """Integer matrix acting on coordinate columns.

    ``root`` is set for reflections and only speeds up multiplication.
    """

    matrix: tuple[tuple[int, ...], ...]
    root: LatticeVector | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(int(x) for x in row) for row in self.matrix))

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def rank_r(self) -> int:
        return len(self.matrix) - 1

    @classmethod
    def identity(cls, r: int) -> Isometry:
        return cls(tuple(tuple(int(i == j) for j in range(r + 1)) for i in range(r + 1)))

    def flat(self) -> tuple[int, ...]:
        return tuple(x for row in self.matrix for x in row)

    def __lt__(self, other: Isometry) -> bool:
        return self.flat() < other.flat()

    def __matmul__(self, other):
        if isinstance(other, LatticeVector):
            return LatticeVector(tuple(sum(a * x for a, x in zip(row, other.coords)) for row in self.matrix))
        if isinstance(other, Isometry):
            if self.root is not None:
                return Isometry(_reflect_columns(self.root.coords, other.matrix))
            cols = list(zip(*other.matrix))
            return Isometry(tuple(tuple(sum(a * b for a, b in zip(row, c)) for c in cols) for row in self.matrix))
        return NotImplemented

    def inverse(self) -> Isometry:
        # M^T G M = G  =>  M^{-1} = G M^T G with G = diag(1, -1, ..., -1)
        n = self.size
        sgn = [1] + [-1] * (n - 1)
        return Isometry(
            tuple(tuple(sgn[i] * self.matrix[j][i] * sgn[j] for j in range(n)) for i in range(n)),
            root=self.root,
        )

    def preserves_form(self) -> bool:
        n = self.size
        sgn = [1] + [-1] * (n - 1)
        cols = list(zip(*self.matrix))
        for i in range(n):
            for j in range(i, n):
                val = sum(s * a * b for s, a, b in zip(sgn, cols[i], cols[j]))
                if val != (sgn[i] if i == j else 0):
                    return False
        return True

    def fixes_canonical_class(self) -> bool:
        k = canonical_class(self.rank_r)
        return self @ k == k

    def is_valid(self) -> bool:
        return self.preserves_form() and self.fixes_canonical_class()

    def check(self) -> Isometry:
        if not self.preserves_form():
            raise InvalidIsometryError("matrix does not preserve the intersection form")
        if not self.fixes_canonical_class():
            raise InvalidIsometryError("matrix does not fix kappa_r")
        return self

    def is_identity(self) -> bool:
        return self == Isometry.identity(self.rank_r)

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.matrix]


def _reflect_columns(alpha: Sequence[int], M) -> tuple[tuple[int, ...], ...]:
    # s(x) = x + (x . alpha) alpha, applied to every column of M
    p = [alpha[0]] + [-a for a in alpha[1:]]
    support = [i for i, a in enumerate(p) if a]
    ncols = len(M[0])
    coef = [sum(p[i] * M[i][j] for i in support) for j in range(ncols)]
    out = []
    for i, row in enumerate(M):
        a = alpha[i]
        out.append(tuple(x + a * c for x, c in zip(row, coef)) if a else row)
    return tuple(out)


def _check_root(alpha: LatticeVector) -> None:
    if inner(alpha, alpha) != -2:
        raise InvalidRootError(f"{alpha} has self-intersection {inner(alpha, alpha)}, not -2")


def reflect(alpha: LatticeVector, x: LatticeVector) -> LatticeVector:
    """s_alpha(x) = x + (x . alpha) alpha."""
    _check_root(alpha)
    return x + inner(x, alpha) * alpha


def reflection(alpha: LatticeVector) -> Isometry:
    _check_root(alpha)
    p = pairing_row(alpha)
    n = len(alpha)
    M = tuple(tuple(int(i == j) + alpha[i] * p[j] for j in range(n)) for i in range(n))
    return Isometry(M, root=alpha)


def simple_reflections(r: int) -> list[Isometry]:
    return [reflection(a) for a in standard_simple_system(r).simple_roots]


Element = Union[LatticeVector, Isometry]


@dataclass(frozen=True)
class OrbitResult:
    """Sorted orbit; ``generator_words[x]`` lists generator indices i_1..i_k with
    x = g_{i_k} ... g_{i_1} . seed (shortest such word)."""

    elements: tuple
    generator_words: dict | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._set

    @property
    def _set(self) -> frozenset:
        s = self.__dict__.get("_cached_set")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_cached_set", s)
        return s


def orbit(seed: Element, gens: Sequence[Isometry], cap: int | None = None, words: bool = False) -> OrbitResult:
    """Closure of ``seed`` under left multiplication by ``gens`` (breadth first)."""
    cap = orbit_cap() if cap is None else cap
    seen = {seed: () if words else None}
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for k, g in enumerate(gens):
            y = g @ x
            if y not in seen:
                if len(seen) >= cap:
                    raise OrbitCapExceeded(cap)
                seen[y] = seen[x] + (k,) if words else None
                queue.append(y)
    elements = tuple(sorted(seen))
    return OrbitResult(elements, dict(seen) if words else None)


def weyl_group_elements(r: int, cap: int | None = None) -> OrbitResult:
    """All of W(E_r) as the orbit of the identity marking."""
    return orbit(Isometry.identity(r), simple_reflections(r), cap=cap)


def group_order(r: int, cap: int | None = None) -> int:
    """|W(E_r)| as the size of the marking orbit of the identity (W acts simply transitively)."""
    if r == 8:
        raise OrbitCapExceeded(orbit_cap() if cap is None else cap)
    check_rank(r, 3, 7)
    return len(weyl_group_elements(r, cap=cap))


def act_on_marking(w: Isometry, m: Isometry) -> Isometry:
    """w . m = m o w^{-1}."""
    w.check()
    m.check()
    return m @ w.inverse()


def stabilizer(m: Isometry, elements: Iterable[Isometry]) -> list[Isometry]:
    return [w for w in elements if act_on_marking(w, m) == m]


def word_to_isometry(word: Sequence[int], r: int) -> Isometry:
    """Product s_{i_1} s_{i_2} ... of simple reflections (1-based indices)."""
    gens = simple_reflections(r)
    out = Isometry.identity(r)
    for i in reversed(word):
        out = gens[i - 1] @ out
    return out
