"""Higgs fields over the affine line and their spectral curves.

A Higgs field is an n x n matrix phi(s) of polynomials in the base
coordinate s (trivial bundle, trivial coefficient line bundle). Its
spectral curve is det(t I - phi(s)) = 0 in the (s, t) plane, and the
companion matrix of a monic P(s, t) recovers a Higgs field regular at
every point of the base.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from . import linalg as la
from .polynomials import Poly, poly_gcd_many
from .regularity import RationalMatrix, minimal_polynomial, characteristic_polynomial

Entry = Union[Poly, int, Fraction, str]


class DomainError(ValueError):
    pass


class NotMonicError(ValueError):
    pass


def _as_poly(x: Entry) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, str):
        return parse_univariate(x, "s")
    return Poly.const(Fraction(x))


@dataclass(frozen=True)
class PolyMatrix:
    rows: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_as_poly(x) for x in row) for row in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("Higgs field must be a square matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[Entry]]) -> PolyMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def at(self, s0) -> RationalMatrix:
        s0 = Fraction(s0)
        return RationalMatrix.of([[p(s0) for p in row] for row in self.rows])

    def trace(self) -> Poly:
        return sum((self.rows[i][i] for i in range(self.n)), Poly())

    def to_json(self) -> list[list[str]]:
        return [[p.format("s") for p in row] for row in self.rows]


@dataclass(frozen=True)
class SpectralCurve:
    """Monic P(s, t) = sum_j coeffs[j](s) t^j with coeffs[-1] == 1."""

    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree_t(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == Poly.const(1)

    def at(self, s0) -> Poly:
        """The fibre polynomial P(s0, t) in t."""
        s0 = Fraction(s0)
        return Poly(c(s0) for c in self.coeffs)

    def __call__(self, s0, t0) -> Fraction:
        return self.at(s0)(Fraction(t0))

    def terms(self) -> dict[tuple[int, int], Fraction]:
        """{(i, j): coefficient of s^i t^j}."""
        return {(i, j): c for j, p in enumerate(self.coeffs) for i, c in enumerate(p.coeffs) if c}

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], Fraction]) -> SpectralCurve:
        deg_t = max((j for (_, j), c in terms.items() if c), default=-1)
        cols: list[dict[int, Fraction]] = [dict() for _ in range(deg_t + 1)]
        for (i, j), c in terms.items():
            if c:
                cols[j][i] = cols[j].get(i, Fraction(0)) + Fraction(c)
        return cls(tuple(Poly([col.get(i, 0) for i in range(max(col, default=-1) + 1)]) for col in cols))

    def to_json(self) -> dict[str, str]:
        return {f"({i},{j})": str(c) for (i, j), c in sorted(self.terms().items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> SpectralCurve:
        terms = {}
        for key, val in data.items():
            m = re.fullmatch(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", key)
            if not m:
                raise ValueError(f"bad monomial key {key!r}")
            terms[(int(m.group(1)), int(m.group(2)))] = Fraction(val)
        return cls.from_terms(terms)

    def __str__(self) -> str:
        return format_bivariate(self.terms())


def spectral_curve(phi: PolyMatrix) -> SpectralCurve:
    """det(t I - phi) as a polynomial in t with coefficients in Q[s]."""
    coeffs = la.charpoly_coefficients(phi.rows, zero=Poly(), one=Poly.const(1))
    return SpectralCurve(tuple(coeffs))


def _gcd_of_maximal_minors(rows: list[list[Poly]]) -> Poly:
    """gcd of the ncols x ncols minors of a tall matrix over Q[s].

    Unimodular row operations (Euclid on each column) preserve that gcd;
    the result is the product of the pivots of the echelon form.
    """
    A = [list(r) for r in rows]
    m, n = len(A), len(A[0])
    det = Poly.const(1)
    for c in range(n):
        while True:
            live = [i for i in range(c, m) if A[i][c]]
            if not live:
                return Poly()
            piv = min(live, key=lambda i: (A[i][c].degree, i))
            A[c], A[piv] = A[piv], A[c]
            done = True
            for i in range(c + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[c][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[c])]
                    done = done and A[i][c].is_zero()
            if done:
                break
        det = det * A[c][c]
    return det


def krylov_matrix(phi: PolyMatrix) -> list[list[Poly]]:
    """Columns vec(I), vec(phi), ..., vec(phi^{n-1}) over Q[s]."""
    n = phi.n
    one, zero = Poly.const(1), Poly()
    P = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
    cols = []
    for _ in range(n):
        cols.append(la.vec(P))
        P = la.mat_mul(P, phi.rows)
    return [list(r) for r in zip(*cols)]


def regularity_divisor(phi: PolyMatrix) -> Poly:
    """Primitive integer polynomial D(s) with phi(s0) regular iff D(s0) != 0.

    phi(s0) is regular iff I, phi(s0), ..., phi(s0)^{n-1} are independent,
    i.e. iff some maximal minor of the Krylov matrix survives at s0; the
    ideal of those minors in Q[s] is generated by their gcd. The zero
    polynomial means phi is nowhere regular.
    """
    if phi.n == 0:
        return Poly.const(1)
    return _gcd_of_maximal_minors(krylov_matrix(phi)).primitive()


def minor_gcd_at(phi: PolyMatrix, s0) -> Poly:
    """Monic gcd d_{n-1}(t) of the (n-1) x (n-1) minors of t I - phi(s0).

    phi(s0) is regular iff this is 1 (minimal = characteristic polynomial).
    """
    n = phi.n
    if n <= 1:
        return Poly.const(1)
    A = phi.at(s0).rows
    t = Poly.x()
    M = [[(t if i == j else Poly()) - A[i][j] for j in range(n)] for i in range(n)]
    minors = []
    for di in range(n):
        for dj in range(n):
            sub = [[M[i][j] for j in range(n) if j != dj] for i in range(n) if i != di]
            minors.append(la.det_laplace(sub, zero=Poly(), one=Poly.const(1)))
    return poly_gcd_many(minors)


def companion_from_spectral(P: SpectralCurve) -> PolyMatrix:
    """Multiplication by t on Q[s][t]/(P) in the basis 1, t, ..., t^{n-1}."""
    if not P.is_monic():
        raise NotMonicError("spectral polynomial must be monic in t")
    n = P.degree_t
    zero, one = Poly(), Poly.const(1)
    rows = [[zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = one
    for i in range(n):
        rows[i][n - 1] = -P.coeffs[i]
    return PolyMatrix.of(rows)


def eigenline(phi: PolyMatrix, s0, lam) -> list[tuple[Fraction, ...]]:
    """Basis of ker(lam I - phi(s0)); the fibre of the eigen-sheaf at (s0, lam)."""
    s0, lam = Fraction(s0), Fraction(lam)
    if spectral_curve(phi)(s0, lam) != 0:
        raise DomainError(f"({s0}, {lam}) is not on the spectral curve")
    A = phi.at(s0).rows
    n = phi.n
    M = [[(lam if i == j else 0) - A[i][j] for j in range(n)] for i in range(n)]
    return la.nullspace(M)


def pointwise_equivalent(phi: PolyMatrix, s0) -> bool:
    """phi(s0) and the companion of its spectral curve at s0 share char and min polynomials."""
    C = companion_from_spectral(spectral_curve(phi)).at(s0)
    A = phi.at(s0)
    return characteristic_polynomial(A) == characteristic_polynomial(C) and minimal_polynomial(
        A
    ) == minimal_polynomial(C)


# -- expressions ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?(?:/\d+)?)|([st])|(\*\*|[-+*^()]))")


class ParseError(ValueError):
    pass


def _tokens(expr: str):
    pos, out = 0, []
    expr = expr.strip()
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at {expr[pos:]!r}")
        num, var, op = m.groups()
        out.append(("num", Fraction(num)) if num else ("var", var) if var else ("op", "^" if op == "**" else op))
        pos = m.end()
    return out


Terms = dict[tuple[int, int], Fraction]


def _mul(a: Terms, b: Terms) -> Terms:
    out: Terms = {}
    for (i, j), x in a.items():
        for (k, l), y in b.items():
            out[(i + k, j + l)] = out.get((i + k, j + l), Fraction(0)) + x * y
    return {k: v for k, v in out.items() if v}


def _add(a: Terms, b: Terms, sign: int = 1) -> Terms:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + sign * v
    return {k: v for k, v in out.items() if v}


def parse_bivariate(expr: str) -> Terms:
    """Parse sums/products/powers of rationals, s and t into {(i, j): coeff of s^i t^j}."""
    toks = _tokens(expr)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        if pos >= len(toks):
            raise ParseError("unexpected end of expression")
        pos += 1
        return toks[pos - 1]

    def expr_():
        sign = 1
        if peek() in (("op", "-"), ("op", "+")):
            sign = -1 if take()[1] == "-" else 1
        acc = _mul({(0, 0): Fraction(sign)}, term())
        while peek() in (("op", "-"), ("op", "+")):
            op = take()[1]
            acc = _add(acc, term(), -1 if op == "-" else 1)
        return acc

    def term():
        acc = power()
        while True:
            kind, val = peek()
            if (kind, val) == ("op", "*"):
                take()
                acc = _mul(acc, power())
            elif kind in ("num", "var") or (kind, val) == ("op", "("):
                acc = _mul(acc, power())
            else:
                return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, k = take()
            if kind != "num" or k.denominator != 1 or k < 0:
                raise ParseError("exponents must be nonnegative integers")
            out = {(0, 0): Fraction(1)}
            for _ in range(int(k)):
                out = _mul(out, base)
            return out
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return {(0, 0): val} if val else {}
        if kind == "var":
            return {(1, 0): Fraction(1)} if val == "s" else {(0, 1): Fraction(1)}
        if (kind, val) == ("op", "("):
            inner_ = expr_()
            if take() != ("op", ")"):
                raise ParseError("unbalanced parentheses")
            return inner_
        raise ParseError(f"unexpected token {val!r}")

    if not toks:
        raise ParseError("empty expression")
    out = expr_()
    if pos != len(toks):
        raise ParseError(f"trailing input near token {toks[pos][1]!r}")
    return out


def parse_spectral(expr: str) -> SpectralCurve:
    return SpectralCurve.from_terms(parse_bivariate(expr))


def parse_univariate(expr: str, var: str = "s") -> Poly:
    terms = parse_bivariate(expr)
    axis = 0 if var == "s" else 1
    if any(key[1 - axis] for key in terms):
        raise ParseError(f"expression {expr!r} must only involve {var}")
    coeffs: dict[int, Fraction] = {key[axis]: c for key, c in terms.items()}
    return Poly([coeffs.get(k, 0) for k in range(max(coeffs, default=-1) + 1)])


def format_bivariate(terms: Mapping[tuple[int, int], Fraction]) -> str:
    if not terms:
        return "0"
    pieces = []
    for (i, j) in sorted(terms, key=lambda k: (-k[1], -k[0])):
        c = terms[(i, j)]
        mono = "*".join(x for x in (
            "" if i == 0 else ("s" if i == 1 else f"s^{i}"),
            "" if j == 0 else ("t" if j == 1 else f"t^{j}"),
        ) if x)
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
        pieces.append(("-" if c < 0 else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out

