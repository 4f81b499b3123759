"""Exact dense linear algebra on nested tuples.

Rational routines work on ``Fraction`` entries. ``charpoly_coefficients`` and
``det_laplace`` only need ring operations, so they also accept polynomial
entries (see :mod:`delpezzo.polynomials`).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import permutations
from math import lcm
from typing import Any, Sequence

Matrix = tuple[tuple[Any, ...], ...]


def frac(x) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"3/7"`` or ``"0.25"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(frac(x) for x in row) for row in rows)


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(m: int, n: int) -> Matrix:
    return tuple((Fraction(0),) * n for _ in range(m))


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A)) if A else ()


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    cols = tuple(zip(*B))
    return tuple(tuple(sum((a * b for a, b in zip(row, col)), 0 * row[0]) for col in cols) for row in A)


def mat_vec(A: Matrix, v: Sequence) -> tuple:
    return tuple(sum((a * x for a, x in zip(row, v)), 0 * v[0]) for row in A)


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(c, A: Matrix) -> Matrix:
    return tuple(tuple(c * a for a in row) for row in A)


def mat_pow(A: Matrix, k: int) -> Matrix:
    out = identity(len(A))
    for _ in range(k):
        out = mat_mul(out, A)
    return out


def is_zero_matrix(A: Matrix) -> bool:
    return all(a == 0 for row in A for a in row)


def trace(A: Matrix):
    return sum((A[i][i] for i in range(len(A))), 0 * A[0][0])


def vec(A: Matrix) -> tuple:
    """Row-major flattening."""
    return tuple(a for row in A for a in row)


# -- fraction-free elimination ---------------------------------------------


def _integer_rows(M: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in M:
        row = [frac(x) for x in row]
        den = reduce(lcm, (x.denominator for x in row), 1)
        out.append([int(x * den) for x in row])
    return out


def bareiss_rank(M: Sequence[Sequence]) -> int:
    """Rank over Q by Bareiss elimination on the row-scaled integer matrix."""
    A = _integer_rows(M)
    if not A:
        return 0
    m, n = len(A), len(A[0])
    prev = 1
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, m):
            a = A[i][c]
            row_i, row_r = A[i], A[r]
            for j in range(c + 1, n):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def rank(M: Sequence[Sequence]) -> int:
    return bareiss_rank(M)


def det_bareiss(M: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if piv is None:
                return 0
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def det_laplace(M: Sequence[Sequence], zero=0, one=1):
    """Permutation expansion; for small matrices over any commutative ring."""
    n = len(M)
    if n == 0:
        return one
    total = zero
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = one
        for i, j in enumerate(perm):
            term = term * M[i][j]
        total = total - term if inversions % 2 else total + term
    return total


# -- Gauss-Jordan over Q --------------------------------------------------


def rref(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    A = [[frac(x) for x in row] for row in M]
    if not A:
        return A, []
    m, n = len(A), len(A[0])
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A, pivots


def nullspace(M: Sequence[Sequence], ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel ``{x : M x = 0}`` over Q."""
    if not M:
        n = ncols or 0
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    R, pivots = rref(M)
    n = len(R[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(A: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Some solution of ``A x = b`` or ``None`` when inconsistent."""
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    n = len(A[0])
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(R, pivots):
        x[p] = row[n]
    return tuple(x)


def inverse(A: Matrix) -> Matrix:
    n = len(A)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in R)


def span_equal(B1: Sequence[Sequence], B2: Sequence[Sequence]) -> bool:
    """Whether two lists of vectors span the same subspace."""
    r1, r2 = rank(B1) if B1 else 0, rank(B2) if B2 else 0
    if r1 != r2:
        return False
    both = list(B1) + list(B2)
    return (rank(both) if both else 0) == r1


def charpoly_coefficients(A: Matrix, zero=Fraction(0), one=Fraction(1)) -> list:
    """Coefficients ``[c_0, ..., c_n]`` of ``det(t I - A)``, low degree first.

    Faddeev-LeVerrier; the only divisions are by the integers ``1..n``, so
    entries may live in any commutative Q-algebra.
    """
    n = len(A)
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    M = tuple(tuple(zero for _ in range(n)) for _ in range(n))
    for k in range(1, n + 1):
        AM = mat_mul(A, M) if k > 1 else M
        M = tuple(
            tuple(AM[i][j] + (coeffs[n - k + 1] if i == j else zero) for j in range(n))
            for i in range(n)
        )
        AM = mat_mul(A, M)
        coeffs[n - k] = trace(AM) * Fraction(-1, k)
    return coeffs
