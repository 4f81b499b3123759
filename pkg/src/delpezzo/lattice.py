"""The odd unimodular lattice of signature (1, r) and integer matrix tools.

Vectors are coordinates in the basis e_0, ..., e_r with
e_0.e_0 = 1, e_i.e_i = -1 (i >= 1) and all other products zero.
Only the dot product is stored; :func:`negated_form` is the positive-sign
variant (x, y) := -x.y used for Cartan-matrix style conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MIN_RANK, MAX_RANK = 1, 8


class DimensionError(ValueError):
    """Vectors or matrices of incompatible sizes."""


class DegenerateInputError(ValueError):
    """Input for which the requested construction is undefined (e.g. a zero vector)."""


class RankOutOfRangeError(ValueError):
    pass


def check_rank(r: int, lo: int = MIN_RANK, hi: int = MAX_RANK) -> int:
    if not isinstance(r, int) or not lo <= r <= hi:
        raise RankOutOfRangeError(f"r must be an integer in [{lo}, {hi}], got {r!r}")
    return r


@dataclass(frozen=True, order=True)
class LatticeVector:
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) < 2:
            raise DimensionError("a vector of Lambda_r needs at least 2 coordinates")

    @property
    def rank_r(self) -> int:
        return len(self.coords) - 1

    @classmethod
    def basis(cls, i: int, r: int) -> LatticeVector:
        if not 0 <= i <= r:
            raise DimensionError(f"e{i} does not exist in Lambda_{r}")
        return cls(tuple(int(j == i) for j in range(r + 1)))

    @classmethod
    def zero(cls, r: int) -> LatticeVector:
        return cls((0,) * (r + 1))

    def _check(self, other: LatticeVector) -> None:
        if len(self.coords) != len(other.coords):
            raise DimensionError(f"rank mismatch: Lambda_{self.rank_r} vs Lambda_{other.rank_r}")

    def __add__(self, other: LatticeVector) -> LatticeVector:
        self._check(other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        self._check(other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> LatticeVector:
        return LatticeVector(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> LatticeVector:
        if not isinstance(k, int):
            return NotImplemented
        return LatticeVector(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append((sign, f"{mag}e{i}"))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> LatticeVector:
        return cls(tuple(int(x) for x in data))


def inner(u: LatticeVector, v: LatticeVector) -> int:
    """Intersection form u_0 v_0 - sum_{i>=1} u_i v_i."""
    u._check(v)
    a, b = u.coords, v.coords
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


def negated_form(u: LatticeVector, v: LatticeVector) -> int:
    return -inner(u, v)


def canonical_class(r: int) -> LatticeVector:
    """kappa_r = -3 e_0 + e_1 + ... + e_r."""
    check_rank(r)
    return LatticeVector((-3,) + (1,) * r)


def degree(r: int) -> int:
    k = canonical_class(r)
    return inner(k, k)


def gram_matrix(vectors: Sequence[LatticeVector]) -> list[list[int]]:
    return [[inner(u, v) for v in vectors] for u in vectors]


def form_matrix(r: int) -> list[list[int]]:
    """Gram matrix of the standard basis, diag(1, -1, ..., -1)."""
    return [[(1 if i == 0 else -1) if i == j else 0 for j in range(r + 1)] for i in range(r + 1)]


def pairing_row(v: LatticeVector) -> list[int]:
    """Coefficients of the functional x -> inner(x, v) in the standard basis."""
    return [v.coords[0]] + [-c for c in v.coords[1:]]


# -- integer matrices --------------------------------------------------------


@dataclass(frozen=True)
class IntegerMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if rows and len({len(r) for r in rows}) != 1:
            raise DimensionError("ragged integer matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> IntegerMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = list(zip(*other.entries))
        return IntegerMatrix(tuple(tuple(sum(a * b for a, b in zip(row, c)) for c in cols) for row in self.entries))

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(tuple(zip(*self.entries)))

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.entries]


def smith_normal_form(M: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Return (U, D, V) with U M V = D, U and V unimodular, d_1 | d_2 | ... .

    The pivot at each stage is a nonzero entry of least absolute value in the
    remaining block, ties broken by the smallest (row, col); this makes U and
    V reproducible.
    """
    A = [list(r) for r in M.entries]
    m, n = M.rows, M.cols
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    a = A[i][j]
                    if a and (best is None or abs(a) < best[0]):
                        best = (abs(a), i, j)
            if best is None:
                return IntegerMatrix.of(U), IntegerMatrix.of(A), IntegerMatrix.of(V)
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    dirty = dirty or A[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is not None:
                add_row(t, bad, 1)
                continue
            break
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return IntegerMatrix.of(U), IntegerMatrix.of(A), IntegerMatrix.of(V)


def invariant_factors(M: IntegerMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith form."""
    _, D, _ = smith_normal_form(M)
    return [d for d in D.diagonal() if d]


def integer_kernel(M: IntegerMatrix, ncols: int | None = None) -> list[tuple[int, ...]]:
    """A Z-basis of {x in Z^n : M x = 0}; the span is always saturated."""
    n = M.cols if M.rows else (ncols or 0)
    if not M.rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    _, D, V = smith_normal_form(M)
    rk = sum(1 for d in D.diagonal() if d)
    return [tuple(V.entries[i][j] for i in range(n)) for j in range(rk, n)]


def determinant(M: IntegerMatrix) -> int:
    from .linalg import det_bareiss

    if M.rows != M.cols:
        raise DimensionError("determinant of a non-square matrix")
    return det_bareiss(M.entries)


# -- sublattices ---------------------------------------------------------------


@dataclass(frozen=True)
class Sublattice:
    generators: tuple[LatticeVector, ...]
    ambient_rank: int

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.rank_r != self.ambient_rank:
                raise DimensionError(f"generator {g} is not in Lambda_{self.ambient_rank}")

    def matrix(self) -> IntegerMatrix:
        return IntegerMatrix.of(g.coords for g in self.generators)

    @property
    def rank(self) -> int:
        if not self.generators:
            return 0
        return len(invariant_factors(self.matrix()))

    @property
    def saturated(self) -> bool:
        return not self.generators or all(d == 1 for d in invariant_factors(self.matrix()))

    def contains(self, v: LatticeVector) -> bool:
        """Membership in the Z-span of the generators."""
        if not self.generators:
            return v.is_zero()
        U, D, V = smith_normal_form(self.matrix().transpose())
        # generators as columns: G x = v  <=>  D (V^-1 x) = U v
        y = (U @ IntegerMatrix.of([[c] for c in v.coords])).entries
        diag = D.diagonal()
        for i, (val,) in enumerate(y):
            d = diag[i] if i < len(diag) else 0
            if d == 0:
                if val != 0:
                    return False
            elif val % d:
                return False
        return True

    def gram(self) -> list[list[int]]:
        return gram_matrix(self.generators)


def quotient_invariants(L: Sublattice) -> list[int]:
    """Torsion invariant factors of Z^{1+r} / span(L); ``[]`` iff saturated."""
    if not L.generators:
        return []
    return [d for d in invariant_factors(L.matrix()) if d > 1]


def orthogonal_complement(v: LatticeVector) -> Sublattice:
    """The sublattice {x : inner(x, v) = 0}."""
    if v.is_zero():
        raise DegenerateInputError("orthogonal complement of the zero vector")
    basis = integer_kernel(IntegerMatrix.of([pairing_row(v)]))
    return Sublattice(tuple(LatticeVector(b) for b in basis), v.rank_r)


def kernel_of_pairings(vectors: Sequence[LatticeVector], r: int) -> Sublattice:
    """{x in Lambda_r : inner(x, a) = 0 for every a in ``vectors``}."""
    if not vectors:
        return Sublattice(tuple(LatticeVector.basis(i, r) for i in range(r + 1)), r)
    M = IntegerMatrix.of(pairing_row(a) for a in vectors)
    return Sublattice(tuple(LatticeVector(b) for b in integer_kernel(M)), r)


def root_lattice(r: int) -> Sublattice:
    return orthogonal_complement(canonical_class(r))
