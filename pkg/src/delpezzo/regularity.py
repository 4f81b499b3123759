"""Regular and subregular elements of gl_n over Q, and the Jordan-Chevalley splitting.

Everything is decided by exact ranks and polynomial gcds; eigenvalues are
never computed, so no splitting field is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg as la
from .polynomials import Poly, is_squarefree, squarefree_part


@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = la.as_matrix(self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> RationalMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(la.identity(n))

    @classmethod
    def zero(cls, n: int) -> RationalMatrix:
        return cls(la.zeros(n, n))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        return RationalMatrix(la.mat_mul(self.rows, other.rows))

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        return RationalMatrix(la.mat_add(self.rows, other.rows))

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        return RationalMatrix(la.mat_sub(self.rows, other.rows))

    def __neg__(self) -> RationalMatrix:
        return RationalMatrix(la.mat_scale(-1, self.rows))

    def scale(self, c) -> RationalMatrix:
        return RationalMatrix(la.mat_scale(Fraction(c), self.rows))

    def __pow__(self, k: int) -> RationalMatrix:
        return RationalMatrix(la.mat_pow(self.rows, k))

    def inverse(self) -> RationalMatrix:
        return RationalMatrix(la.inverse(self.rows))

    def is_zero(self) -> bool:
        return la.is_zero_matrix(self.rows)

    def evaluate(self, p: Poly) -> RationalMatrix:
        """p(A) by Horner's rule."""
        out = RationalMatrix.zero(self.n)
        eye = RationalMatrix.identity(self.n)
        for c in reversed(p.coeffs):
            out = out @ self + eye.scale(c)
        return out

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows]


def commutation_operator(A: RationalMatrix) -> list[list[Fraction]]:
    """Matrix of X -> AX - XA on row-major vec(X)."""
    n = A.n
    a = A.rows
    op = [[Fraction(0)] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            row = op[i * n + j]
            for k in range(n):
                row[k * n + j] += a[i][k]
                row[i * n + k] -= a[k][j]
    return op


def centralizer_dim(A: RationalMatrix) -> int:
    return A.n * A.n - la.rank(commutation_operator(A))


def centralizer_basis(A: RationalMatrix) -> list[tuple[Fraction, ...]]:
    return la.nullspace(commutation_operator(A))


def characteristic_polynomial(A: RationalMatrix) -> Poly:
    return Poly(la.charpoly_coefficients(A.rows))


def krylov_rank(A: RationalMatrix) -> int:
    """Rank of {I, A, ..., A^{n-1}}, i.e. the degree of the minimal polynomial."""
    powers, P = [], RationalMatrix.identity(A.n)
    for _ in range(A.n):
        powers.append(la.vec(P.rows))
        P = P @ A
    return la.rank(powers)


def minimal_polynomial(A: RationalMatrix) -> Poly:
    """Monic generator of {p : p(A) = 0}, from the first dependency among I, A, A^2, ..."""
    powers, P = [la.vec(RationalMatrix.identity(A.n).rows)], RationalMatrix.identity(A.n)
    for _ in range(A.n):
        P = P @ A
        target = la.vec(P.rows)
        sol = la.solve(la.transpose(tuple(powers)), [-x for x in target])
        if sol is not None:
            return Poly(list(sol) + [1])
        powers.append(target)
    raise AssertionError("Cayley-Hamilton violated")


def is_regular(A: RationalMatrix) -> bool:
    """dim C(A) = n; agrees with deg(minimal polynomial) = n."""
    by_centralizer = centralizer_dim(A) == A.n
    by_krylov = krylov_rank(A) == A.n
    if by_centralizer != by_krylov:
        raise AssertionError("centralizer and minimal-polynomial regularity criteria disagree")
    return by_centralizer


def is_subregular(A: RationalMatrix) -> bool:
    return centralizer_dim(A) == A.n + 2


@dataclass(frozen=True)
class JordanChevalley:
    semisimple_part: RationalMatrix
    nilpotent_part: RationalMatrix

    def multiplicative_parts(self) -> tuple[RationalMatrix, RationalMatrix]:
        """(x_s, x_u) with x = x_s x_u, for invertible x."""
        S, N = self.semisimple_part, self.nilpotent_part
        return S, RationalMatrix.identity(S.n) + S.inverse() @ N


def jordan_chevalley(A: RationalMatrix) -> JordanChevalley:
    """A = S + N with S semisimple, N nilpotent and SN = NS.

    Newton iteration S <- S - g(S) g'(S)^{-1} for the squarefree part g of
    the characteristic polynomial; g(S) vanishes after ceil(log2 n) steps.
    """
    g = squarefree_part(characteristic_polynomial(A))
    dg = g.derivative()
    S = A
    for _ in range(A.n + 1):
        gS = S.evaluate(g)
        if gS.is_zero():
            break
        S = S - gS @ S.evaluate(dg).inverse()
    else:
        raise AssertionError("Newton iteration did not converge")
    return JordanChevalley(S, A - S)


def check_jordan_chevalley(A: RationalMatrix, jc: JordanChevalley) -> dict[str, bool]:
    S, N = jc.semisimple_part, jc.nilpotent_part
    return {
        "sum": S + N == A,
        "commute": S @ N == N @ S,
        "nilpotent": (N ** A.n).is_zero(),
        "semisimple": is_squarefree(minimal_polynomial(S)),
    }


def centralizer_reduction_check(A: RationalMatrix) -> bool:
    """ker ad(A) == ker ad(S) & ker ad(N) as subspaces of gl_n."""
    jc = jordan_chevalley(A)
    lhs = la.nullspace(commutation_operator(A))
    stacked = commutation_operator(jc.semisimple_part) + commutation_operator(jc.nilpotent_part)
    rhs = la.nullspace(stacked)
    return la.span_equal(lhs, rhs)


def jordan_block(n: int, lam=0) -> RationalMatrix:
    return RationalMatrix.of([[lam if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)])


def block_diagonal(blocks: Sequence[RationalMatrix]) -> RationalMatrix:
    n = sum(b.n for b in blocks)
    rows = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.n):
            for j in range(b.n):
                rows[off + i][off + j] = b.rows[i][j]
        off += b.n
    return RationalMatrix.of(rows)


def nilpotent_of_partition(parts: Sequence[int]) -> RationalMatrix:
    return block_diagonal([jordan_block(p) for p in parts])


def companion_matrix(p: Poly) -> RationalMatrix:
    """Companion of a monic polynomial: multiplication by x on Q[x]/(p) in the basis 1, x, ..."""
    p = p.monic()
    n = p.degree
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] = -p[i]
    return RationalMatrix.of(rows)
