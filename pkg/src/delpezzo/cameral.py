"""Monodromy model of W-cameral covers of a punctured sphere.

A cover is given by a finite group W and branch monodromies m_1, ..., m_k
with m_1 ... m_k = 1. Sheets are the elements of W and a loop around the
i-th branch point acts by right multiplication by m_i. Quotients by a
subgroup H act on the right cosets H\\W; for W = S_n and H the stabiliser
of a point this is the spectral cover of a rank n Higgs field.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Sequence

from .linalg import rank
from .weyl import Isometry, simple_reflections, weyl_group_elements

Element = Hashable


class RelationError(ValueError):
    """Branch monodromies do not multiply to the identity."""


class NotInGroupError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroupModel:
    """A finite group given by generators and a multiplication.

    ``representation`` maps an element to an integer matrix; reflections are
    detected as involutions whose fixed space has corank one there.
    """

    name: str
    generators: tuple
    identity: Element
    mul: Callable[[Any, Any], Any] = field(compare=False)
    representation: Callable[[Any], Sequence[Sequence[int]]] | None = field(default=None, compare=False)
    member: Callable[[Any], bool] | None = field(default=None, compare=False)

    @property
    def elements(self) -> tuple:
        cached = self.__dict__.get("_elements")
        if cached is None:
            cached = tuple(closure(self.generators, self.identity, self.mul))
            object.__setattr__(self, "_elements", cached)
        return cached

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, g) -> bool:
        if self.member is not None:
            return self.member(g)
        if "_element_set" not in self.__dict__:
            object.__setattr__(self, "_element_set", frozenset(self.elements))
        return g in self.__dict__["_element_set"]

    def product(self, items: Sequence) -> Element:
        out = self.identity
        for g in items:
            out = self.mul(out, g)
        return out

    def inverse(self, g) -> Element:
        # order is finite, so g^{k-1} = g^{-1} for the order k of g
        prev, cur = self.identity, g
        while cur != self.identity:
            prev, cur = cur, self.mul(cur, g)
        return prev

    def conjugate(self, g, x) -> Element:
        """g x g^{-1}."""
        return self.mul(self.mul(g, x), self.inverse(g))

    def is_reflection(self, g) -> bool:
        if g == self.identity or self.mul(g, g) != self.identity:
            return False
        if self.representation is None:
            return True
        M = self.representation(g)
        n = len(M)
        return rank([[M[i][j] - (i == j) for j in range(n)] for i in range(n)]) == 1

    def fixed_corank(self, g) -> int:
        M = self.representation(g)
        n = len(M)
        return rank([[M[i][j] - (i == j) for j in range(n)] for i in range(n)])


def closure(gens: Sequence, identity, mul) -> list:
    """Subgroup generated by ``gens`` (BFS by right multiplication)."""
    seen = {identity}
    order = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


# -- concrete groups ------------------------------------------------------------


def perm_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """(a b)(i) = a(b(i)); b acts first."""
    return tuple(a[i] for i in b)


def perm_matrix(p: tuple[int, ...]) -> list[list[int]]:
    n = len(p)
    return [[int(p[j] == i) for j in range(n)] for i in range(n)]


def symmetric_group(n: int) -> FiniteGroupModel:
    ident = tuple(range(n))
    gens = tuple(tuple(range(i)) + (i + 1, i) + tuple(range(i + 2, n)) for i in range(n - 1))
    return FiniteGroupModel(
        f"S{n}", gens, ident, perm_mul, perm_matrix,
        member=lambda p: isinstance(p, tuple) and sorted(p) == list(range(n)),
    )


def cyclic_group(n: int) -> FiniteGroupModel:
    """Z/n acting on C by n-th roots of unity; only Z/2 gets an integer representation."""
    rep = (lambda k: [[1 if k == 0 else -1]]) if n == 2 else None
    return FiniteGroupModel(f"Z{n}", (1 % n,), 0, lambda a, b: (a + b) % n, rep,
                            member=lambda k: isinstance(k, int) and 0 <= k < n)


def weyl_group(r: int) -> FiniteGroupModel:
    """W(E_r) acting on Lambda_r; membership is 'isometry fixing kappa_r'."""
    return FiniteGroupModel(
        f"W{r}", tuple(simple_reflections(r)), Isometry.identity(r),
        lambda a, b: a @ b, lambda g: g.matrix,
        member=lambda g: isinstance(g, Isometry) and g.rank_r == r and g.is_valid(),
    )


def weyl_group_enumerated(r: int) -> FiniteGroupModel:
    """Same group with its element list precomputed from the marking orbit."""
    W = weyl_group(r)
    object.__setattr__(W, "_elements", weyl_group_elements(r).elements)
    return W


# -- covers ----------------------------------------------------------------------


@dataclass(frozen=True)
class CameralMonodromy:
    group: FiniteGroupModel
    branch_monodromies: tuple

    @property
    def degree(self) -> int:
        return self.group.order


def build_cover(group: FiniteGroupModel, ms: Sequence) -> CameralMonodromy:
    for m in ms:
        if not group.contains(m):
            raise NotInGroupError(f"{m!r} is not an element of {group.name}")
    if group.product(ms) != group.identity:
        raise RelationError("branch monodromies must multiply to the identity")
    return CameralMonodromy(group, tuple(ms))


def is_connected(c: CameralMonodromy) -> bool:
    """Sheets form one orbit iff the monodromies generate the whole group."""
    G = c.group
    return len(closure(c.branch_monodromies, G.identity, G.mul)) == G.order


def smooth_validity(c: CameralMonodromy) -> bool:
    """Every local monodromy is trivial or a reflection (simple branching)."""
    G = c.group
    return all(m == G.identity or G.is_reflection(m) for m in c.branch_monodromies)


@dataclass(frozen=True)
class PermutationCover:
    degree: int
    monodromies: tuple[tuple[int, ...], ...]

    def is_connected(self) -> bool:
        if self.degree == 0:
            return False
        reached, stack = {0}, [0]
        while stack:
            x = stack.pop()
            for p in self.monodromies:
                y = p[x]
                if y not in reached:
                    reached.add(y)
                    stack.append(y)
        return len(reached) == self.degree


def quotient_cover(c: CameralMonodromy, subgroup_generators: Sequence) -> PermutationCover:
    """The associated cover with sheets H\\W and monodromy Hg -> Hgm."""
    G = c.group
    for h in subgroup_generators:
        if not G.contains(h):
            raise NotInGroupError(f"{h!r} is not an element of {G.name}")
    H = closure(tuple(subgroup_generators), G.identity, G.mul)
    label: dict = {}
    reps = []
    for g in G.elements:
        if g in label:
            continue
        k = len(reps)
        reps.append(g)
        for h in H:
            label[G.mul(h, g)] = k
    monos = tuple(tuple(label[G.mul(rep, m)] for rep in reps) for m in c.branch_monodromies)
    return PermutationCover(len(reps), monos)


def regular_cover(c: CameralMonodromy) -> PermutationCover:
    """The cameral cover itself as a permutation cover on |W| sheets."""
    return quotient_cover(c, ())


# -- notation ------------------------------------------------------------------


def parse_permutation(expr: str, n: int) -> tuple[int, ...]:
    """Cycle notation, 1-based: "(12)(34)", "(1 2 10)", "()" or "1" for the identity."""
    expr = expr.strip()
    out = list(range(n))
    if expr in ("", "1", "()", "e"):
        return tuple(out)
    if not re.fullmatch(r"(\([^()]*\)\s*)+", expr):
        raise ValueError(f"malformed cycle notation {expr!r}")
    cycles = re.findall(r"\(([^()]*)\)", expr)
    perm = tuple(range(n))
    for body in cycles:
        pts = [int(x) for x in (body.replace(",", " ").split() if (" " in body or "," in body) else body)]
        if any(not 1 <= p <= n for p in pts) or len(set(pts)) != len(pts):
            raise ValueError(f"bad cycle ({body}) for S{n}")
        cyc = list(range(n))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            cyc[a - 1] = b - 1
        perm = perm_mul(perm, tuple(cyc))
    return perm


def format_permutation(p: tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = p[j]
        sep = " " if max(cyc) > 9 else ""
        cycles.append("(" + sep.join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def split_top_level(expr: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    parts, depth, cur = [], 0, ""
    for ch in expr:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        parts.append(cur)
    return [p.strip() for p in parts]


def parse_weyl_word(expr: str, r: int) -> Isometry:
    """Products of simple reflections such as "s1 s2", "s1*s3" or "1"."""
    expr = expr.strip()
    if expr in ("1", "e", ""):
        return Isometry.identity(r)
    idx = [int(x) for x in re.findall(r"s(\d+)", expr)]
    if re.sub(r"s\d+|[\s*]", "", expr):
        raise ValueError(f"malformed Weyl word {expr!r}")
    gens = simple_reflections(r)
    out = Isometry.identity(r)
    for i in idx:
        if not 1 <= i <= r:
            raise ValueError(f"s{i} is not a simple reflection of W(E_{r})")
        out = out @ gens[i - 1]
    return out


def group_by_name(name: str) -> tuple[FiniteGroupModel, Callable[[str], Any]]:
    """Resolve "S3", "S_4", "Z2", "W(4)" / "W4" to a group and an element parser."""
    key = name.replace("_", "").replace(" ", "")
    m = re.fullmatch(r"S(\d+)", key)
    if m:
        n = int(m.group(1))
        return symmetric_group(n), lambda e: parse_permutation(e, n)
    m = re.fullmatch(r"Z(\d+)", key)
    if m:
        n = int(m.group(1))
        return cyclic_group(n), lambda e: int(e) % n
    m = re.fullmatch(r"W\(?(\d)\)?", key)
    if m:
        r = int(m.group(1))
        if not 3 <= r <= 5:
            raise ValueError("Weyl groups are available for 3 <= r <= 5")
        return weyl_group_enumerated(r), lambda e: parse_weyl_word(e, r)
    raise ValueError(f"unknown group {name!r}")


def coxeter_element(r: int) -> Isometry:
    """Product of the simple reflections s_1 s_2 ... s_r."""
    out = Isometry.identity(r)
    for g in simple_reflections(r):
        out = out @ g
    return out

