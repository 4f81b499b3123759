"""(-2)-curve configurations: validation, ADE type, and the attached lattice data.

A configuration is a list of roots of Lambda_r standing for the classes of
contracted (-2)-curves. From it we derive the generated root subsystem,
the kernel sublattice, the Weyl subgroup and the connectedness certificate
for the subtorus cut out by the roots.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .lattice import (
    IntegerMatrix,
    LatticeVector,
    Sublattice,
    gram_matrix,
    inner,
    invariant_factors,
    kernel_of_pairings,
    pairing_row,
)
from .linalg import inverse, rank
from .roots import RootSet, enumerate_roots, standard_simple_system
from .weyl import Isometry, ResourceError, orbit, reflection

MAX_SUBGROUP_BFS = 6


class ConfigError(ValueError):
    pass


class NotARootError(ConfigError):
    pass


class DependentSetError(ConfigError):
    pass


class PairingError(ConfigError):
    pass


class NotADEError(ValueError):
    pass


@dataclass(frozen=True)
class RootConfig:
    rank_r: int
    roots: tuple[LatticeVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(self.roots))

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


@dataclass(frozen=True, order=True)
class ADEType:
    components: tuple[tuple[str, int], ...]

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.components)

    @property
    def label(self) -> str:
        if not self.components:
            return "trivial"
        return "+".join(f"{letter}{n}" for letter, n in self.components)

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, label: str) -> ADEType:
        if label in ("", "trivial"):
            return cls(())
        comps = []
        for part in label.replace("_", "").replace("x", "+").split("+"):
            part = part.strip()
            comps.append((part[0].upper(), int(part[1:])))
        return cls(tuple(sorted(comps)))


# -- validation ---------------------------------------------------------------


def validate_config(c: RootConfig) -> RootConfig:
    """Check that members are roots, independent and pair to 0 or 1; sort them."""
    r = c.rank_r
    roots = enumerate_roots(r)
    for a in c.roots:
        if a.rank_r != r or a not in roots:
            raise NotARootError(f"{a} is not a root of Lambda_{r}")
    if c.roots and rank([a.coords for a in c.roots]) < len(c.roots):
        raise DependentSetError("configuration is linearly dependent")
    for a, b in combinations(c.roots, 2):
        p = inner(a, b)
        if p not in (0, 1):
            raise PairingError(f"{a} . {b} = {p}; distinct (-2)-curves must pair to 0 or 1")
    return RootConfig(r, tuple(sorted(c.roots)))


def is_valid_config(c: RootConfig) -> bool:
    try:
        validate_config(c)
    except ConfigError:
        return False
    return True


# -- ADE classification --------------------------------------------------------


def dual_graph(c: RootConfig) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {i: set() for i in range(len(c.roots))}
    for i, j in combinations(range(len(c.roots)), 2):
        if inner(c.roots[i], c.roots[j]) == 1:
            adj[i].add(j)
            adj[j].add(i)
    return adj


def _components(adj: dict[int, set[int]]) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def _arm_length(adj, center: int, start: int) -> int:
    prev, cur, length = center, start, 1
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return length
        prev, cur, length = cur, nxt[0], length + 1


def classify_graph(adj: dict[int, set[int]]) -> ADEType:
    """ADE type of a simple graph given by adjacency sets."""
    comps = []
    for comp in _components(adj):
        n = len(comp)
        edges = sum(len(adj[v]) for v in comp) // 2
        degrees = Counter(len(adj[v]) for v in comp)
        if edges != n - 1 or max(degrees) > 3 or degrees[3] > 1:
            raise NotADEError(f"component of size {n} is not a Dynkin diagram of type A, D or E")
        if degrees[3] == 0:
            comps.append(("A", n))
            continue
        center = next(v for v in comp if len(adj[v]) == 3)
        arms = sorted(_arm_length(adj, center, w) for w in adj[center])
        if arms[0] == 1 and arms[1] == 1:
            comps.append(("D", n))
        elif arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            comps.append(("E", n))
        else:
            raise NotADEError(f"branched tree with arms {arms} is not of type D or E")
    return ADEType(tuple(sorted(comps)))


def classify_ADE(c: RootConfig) -> ADEType:
    return classify_graph(dual_graph(validate_config(c)))


def cartan_matrix(c: RootConfig) -> list[list[int]]:
    """-(alpha_i . alpha_j): 2 on the diagonal, -1 for adjacent nodes."""
    return [[-x for x in row] for row in gram_matrix(c.roots)]


# -- attached lattice data -------------------------------------------------------


def _span_coordinates(c: RootConfig):
    """Function sending x to its rational coordinates in the basis c, or None off the span."""
    G = gram_matrix(c.roots)
    Ginv = inverse(tuple(tuple(Fraction(x) for x in row) for row in G))

    def coords(x: LatticeVector):
        rhs = [inner(a, x) for a in c.roots]
        sol = [sum(g * b for g, b in zip(row, rhs)) for row in Ginv]
        back = [sum(s * a[i] for s, a in zip(sol, c.roots)) for i in range(len(x))]
        if any(b != xi for b, xi in zip(back, x.coords)):
            return None
        return sol

    return coords


def generated_subsystem(c: RootConfig) -> RootSet:
    """All roots of Lambda_r in the integer span of the configuration."""
    c = validate_config(c)
    if not c.roots:
        return RootSet(c.rank_r, ())
    coords = _span_coordinates(c)
    found = []
    for a in enumerate_roots(c.rank_r):
        x = coords(a)
        if x is not None and all(v.denominator == 1 for v in x):
            found.append(a)
    return RootSet(c.rank_r, tuple(found))


def positive_subsystem(c: RootConfig) -> tuple[LatticeVector, ...]:
    """Roots of the generated subsystem with nonnegative coordinates in the basis c."""
    c = validate_config(c)
    if not c.roots:
        return ()
    coords = _span_coordinates(c)
    return tuple(a for a in generated_subsystem(c) if all(v >= 0 for v in coords(a)))


def reflection_closure(c: RootConfig) -> RootSet:
    """Orbit of the configuration under its own reflections (cross-check for span membership)."""
    c = validate_config(c)
    gens = [reflection(a) for a in c.roots]
    found: set[LatticeVector] = set()
    for a in c.roots:
        found.update(orbit(a, gens).elements)
    return RootSet(c.rank_r, tuple(sorted(found)))


def simple_subsystem(roots: Iterable[LatticeVector], r: int) -> RootConfig:
    """Simple roots of a closed subsystem, positivity taken from the standard simple system.

    A positive root is simple iff it is not the sum of two positive roots of
    the subsystem.
    """
    ss = standard_simple_system(r)
    pos = [a for a in roots if ss.is_positive(a)]
    pos_set = set(pos)
    simple = [a for a in pos if not any((a - b) in pos_set for b in pos if b != a)]
    return RootConfig(r, tuple(sorted(simple)))


def kernel_sublattice(c: RootConfig) -> Sublattice:
    """{x : x . alpha = 0 for all alpha in c}."""
    c = validate_config(c)
    return kernel_of_pairings(c.roots, c.rank_r)


@dataclass(frozen=True)
class TorusCertificate:
    connected: bool
    invariant_factors: tuple[int, ...]


def pairing_image_saturated(rows: IntegerMatrix) -> TorusCertificate:
    """Saturation of the image of Z^n under the functionals given by ``rows``.

    The subtorus {t : alpha(t) = 1} is connected exactly when the image of
    the cocharacter lattice under the characters is saturated.
    """
    if not rows.rows:
        return TorusCertificate(True, ())
    f = invariant_factors(rows)
    return TorusCertificate(len(f) == rows.rows and all(d == 1 for d in f), tuple(f))


def torus_connected(c: RootConfig) -> TorusCertificate:
    c = validate_config(c)
    return pairing_image_saturated(IntegerMatrix.of(pairing_row(a) for a in c.roots))


def weyl_subgroup_generators(c: RootConfig) -> list[Isometry]:
    c = validate_config(c)
    return [reflection(a) for a in c.roots]


def weyl_subgroup_order(c: RootConfig, cap: int | None = None) -> int:
    c = validate_config(c)
    if len(c.roots) > MAX_SUBGROUP_BFS:
        raise ResourceError(f"subgroup enumeration is limited to {MAX_SUBGROUP_BFS} generators")
    return len(orbit(Isometry.identity(c.rank_r), weyl_subgroup_generators(c), cap=cap))


# -- semisimple centralizers -------------------------------------------------------


def _rational_inner(alpha: LatticeVector, v: Sequence[Fraction]) -> Fraction:
    return alpha[0] * v[0] - sum(a * x for a, x in zip(alpha.coords[1:], v[1:]))


def centralizer_roots(v: Sequence) -> RootSet:
    """Roots alpha with alpha . v integral, i.e. alpha(exp v) = 1; v lives in Q^{1+r}."""
    v = [Fraction(x) for x in v]
    r = len(v) - 1
    return RootSet(r, tuple(a for a in enumerate_roots(r) if _rational_inner(a, v).denominator == 1))


def semisimple_centralizer_type(v: Sequence) -> tuple[RootSet, ADEType]:
    roots = centralizer_roots(v)
    simple = simple_subsystem(roots, roots.rank_r)
    return roots, classify_graph(dual_graph(simple))
