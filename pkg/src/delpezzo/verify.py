"""Self-verification: the numbered acceptance criteria grouped into suites.

Each criterion returns a ``Check``; it passes only if every assertion holds
and the run finished inside its time budget.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable

from . import cameral as cam
from .lattice import (
    IntegerMatrix,
    determinant,
    form_matrix,
    inner,
    invariant_factors,
    smith_normal_form,
)
from .polynomials import Poly
from .regularity import (
    centralizer_dim,
    centralizer_reduction_check,
    check_jordan_chevalley,
    is_regular,
    jordan_block,
    jordan_chevalley,
    nilpotent_of_partition,
)
from .roots import enumerate_lines, enumerate_roots, standard_simple_system
from .sampling import (
    random_config,
    random_matrix,
    random_monic,
    random_triangular_field,
    sample_points,
)
from .singularities import (
    ADEType,
    RootConfig,
    cartan_matrix,
    classify_ADE,
    is_valid_config,
    torus_connected,
)
from .spectral import (
    PolyMatrix,
    companion_from_spectral,
    eigenline,
    regularity_divisor,
    spectral_curve,
)
from .weyl import Isometry, act_on_marking, orbit, simple_reflections, weyl_group_elements

SEED = 20240917

ROOT_COUNTS = {3: 8, 4: 20, 5: 40, 6: 72, 7: 126, 8: 240}
WEYL_ORDERS = {3: 12, 4: 120, 5: 1920, 6: 51840}
SIMPLE_TYPES = {3: "A1+A2", 4: "A4", 5: "D5", 6: "E6", 7: "E7", 8: "E8"}


@dataclass
class Check:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        tag = f"C{self.number}" if self.number else "aux"
        return f"[{mark}] {tag} {self.name} ({self.seconds:.2f}s / {self.budget:g}s): {self.detail}"


class _Failure(Exception):
    pass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise _Failure(msg)


def _timed(number: int, name: str, budget: float, body: Callable[[], str]) -> Check:
    start = time.perf_counter()
    try:
        detail, ok = body(), True
    except _Failure as exc:
        detail, ok = str(exc), False
    elapsed = time.perf_counter() - start
    if ok and elapsed > budget:
        ok, detail = False, f"{detail}; exceeded time budget"
    return Check(number, name, ok, detail, elapsed, budget)


# -- 1..4: lattice and roots ---------------------------------------------------------


def line_count() -> Check:
    def body():
        n = len(enumerate_lines(6))
        _require(n == 27, f"found {n} lines in Lambda_6")
        return "27 lines"

    return _timed(1, "line count r=6", 1.0, body)


def root_counts() -> Check:
    def body():
        for r, expected in ROOT_COUNTS.items():
            roots = enumerate_roots(r)
            _require(len(roots) == expected, f"r={r}: {len(roots)} roots, expected {expected}")
            if r >= 4:
                # irreducible: one root's Weyl orbit is every root
                seed = roots.roots[0]
                orb = orbit(seed, simple_reflections(r))
                _require(set(orb) == set(roots), f"r={r}: orbit closure has {len(orb)} roots")
        return "8, 20, 40, 72, 126, 240; orbit closure agrees for r=4..8"

    return _timed(2, "root counts r=3..8", 5.0, body)


def duality() -> Check:
    def body():
        for r in range(3, 9):
            ss = standard_simple_system(r)
            for i, a in enumerate(ss.alphas):
                for j, w in enumerate(ss.omegas):
                    p = inner(a, w)
                    _require(abs(p) == (i == j), f"r={r}: alpha_{i + 1} . omega_{j + 1} = {p}")
            last = inner(ss.alphas[r], ss.omegas[r])
            _require(last == -1, f"r={r}: extended pairing sign is {last}")
        return "|alpha_i . omega_j| = delta_ij for r=3..8; alpha_{r+1} . kappa = -1"

    return _timed(3, "simple roots / weights duality", 1.0, body)


def unimodularity() -> Check:
    def body():
        for r in range(1, 9):
            d = determinant(IntegerMatrix.of(form_matrix(r)))
            _require(abs(d) == 1, f"r={r}: det = {d}")
        return "|det| = 1 for r=1..8"

    return _timed(4, "unimodularity r=1..8", 1.0, body)


def smith_form_sanity() -> Check:
    def body():
        rng = random.Random(SEED)
        for _ in range(200):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            M = IntegerMatrix.of([[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)])
            U, D, V = smith_normal_form(M)
            _require(U @ M @ V == D, f"U M V != D for {M.tolist()}")
            _require(abs(determinant(U)) == 1 and abs(determinant(V)) == 1, "transforms not unimodular")
            f = invariant_factors(M)
            _require(all(b % a == 0 for a, b in zip(f, f[1:])), f"divisibility fails: {f}")
        return "200 random matrices: U M V = D, unimodular transforms, divisibility chain"

    return _timed(0, "Smith normal form sanity", 10.0, body)


# -- 5: Weyl group ----------------------------------------------------------------------


def weyl_orders() -> Check:
    def body():
        parts = []
        rng = random.Random(SEED)
        for r, expected in WEYL_ORDERS.items():
            t0 = time.perf_counter()
            elems = weyl_group_elements(r).elements
            dt = time.perf_counter() - t0
            _require(len(elems) == expected, f"r={r}: |W| = {len(elems)}, expected {expected}")
            if r <= 5:
                _require(dt < 10, f"r={r}: orbit took {dt:.1f}s")
            ident = Isometry.identity(r)
            for m in rng.sample(elems, 3):
                ws = elems if r <= 4 else [w for w in rng.sample(elems, 300) if w != ident] + [ident]
                fixed = [w for w in ws if act_on_marking(w, m) == m]
                _require(len(fixed) == 1 and fixed[0].is_identity(), f"r={r}: nontrivial stabilizer")
            parts.append(f"{expected} ({dt:.1f}s)")
        return "orders " + ", ".join(parts) + "; stabilizer spot checks trivial"

    return _timed(5, "Weyl orders r=3..6", 300.0, body)


# -- 6, 7: singularities ------------------------------------------------------------------


def _small_configs(r: int, max_size: int = 3):
    roots = list(enumerate_roots(r))
    for k in range(1, max_size + 1):
        for combo in combinations(roots, k):
            c = RootConfig(r, combo)
            if is_valid_config(c):
                yield c


def torus_suite(random_samples: int = 1000) -> Check:
    def body():
        exhaustive = 0
        bad: list[str] = []
        for r in (3, 4, 5):
            for c in _small_configs(r):
                exhaustive += 1
                cert = torus_connected(c)
                if not cert.connected:
                    bad.append(f"r={r} {[str(a) for a in c.roots]} factors {cert.invariant_factors}")
        rng = random.Random(SEED)
        sampled_bad = 0
        first = None
        for i in range(random_samples):
            r = 6 + i % 3
            c = random_config(rng, r)
            cert = torus_connected(c)
            if not cert.connected:
                sampled_bad += 1
                if first is None:
                    first = (
                        f"r={r} {classify_ADE(c)} [{'; '.join(str(a) for a in c.roots)}] "
                        f"factors {list(cert.invariant_factors)}"
                    )
        _require(not bad, f"{len(bad)} small configs disconnected, e.g. {bad[:1]}")
        _require(
            sampled_bad == 0,
            f"{exhaustive} small configs connected, but {sampled_bad}/{random_samples} random configs "
            f"have a non-saturated pairing image; first: {first}",
        )
        return f"{exhaustive} small configs and {random_samples} random configs connected"

    return _timed(6, "torus connectedness for all configurations", 120.0, body)


def _template_cartan(t: ADEType) -> list[list[int]]:
    """Block-diagonal Cartan matrix of a type, built from explicit Dynkin edges."""
    blocks = []
    for letter, n in t.components:
        edges = [(i, i + 1) for i in range(n - 1)]
        if letter == "D":
            edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        elif letter == "E":
            edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
        blocks.append((n, edges))
    size = sum(n for n, _ in blocks)
    C = [[2 * (i == j) for j in range(size)] for i in range(size)]
    off = 0
    for n, edges in blocks:
        for i, j in edges:
            C[off + i][off + j] = C[off + j][off + i] = -1
        off += n
    return C


def _same_up_to_relabelling(A: list[list[int]], B: list[list[int]]) -> bool:
    n = len(A)
    if len(B) != n:
        return False
    return any(all(A[p[i]][p[j]] == B[i][j] for i in range(n) for j in range(n)) for p in permutations(range(n)))


def ade_classifier() -> Check:
    def body():
        checked = 0
        for r, label in SIMPLE_TYPES.items():
            simple = standard_simple_system(r).simple_roots
            c = RootConfig(r, simple)
            t = classify_ADE(c)
            _require(t.label == label, f"r={r}: classified as {t.label}, expected {label}")
            for k in (1, 2, 3):
                for sub in combinations(simple, k):
                    sc = RootConfig(r, sub)
                    st = classify_ADE(sc)
                    _require(
                        _same_up_to_relabelling(cartan_matrix(sc), _template_cartan(st)),
                        f"r={r}: {[str(a) for a in sub]} classified {st} inconsistently",
                    )
                    checked += 1
        for c in _small_configs(5):
            st = classify_ADE(c)
            _require(_same_up_to_relabelling(cartan_matrix(c), _template_cartan(st)), f"{c} inconsistent")
            checked += 1
        return f"A1+A2, A4, D5, E6, E7, E8; {checked} sub-diagrams consistent with their Cartan matrices"

    return _timed(7, "ADE classifier", 10.0, body)


# -- 8, 9: regularity -------------------------------------------------------------------


def partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def regularity_suite(samples: int = 100) -> Check:
    def body():
        for n in range(1, 7):
            for lam in (0, 1, Fraction(-2, 3)):
                _require(is_regular(jordan_block(n, lam)), f"J_{n}({lam}) not regular")
        shapes = 0
        for n in range(1, 7):
            for lam in partitions(n):
                expected = sum((2 * i - 1) * p for i, p in enumerate(lam, start=1))
                got = centralizer_dim(nilpotent_of_partition(lam))
                _require(got == expected, f"shape {lam}: centralizer dim {got}, expected {expected}")
                shapes += 1
        rng = random.Random(SEED)
        for _ in range(samples):
            A = random_matrix(rng, 4)
            _require(centralizer_reduction_check(A), f"centralizer reduction fails for {A.to_json()}")
        return f"Jordan blocks n<=6 regular; {shapes} nilpotent shapes; {samples} random 4x4 reductions"

    return _timed(8, "regularity suite", 120.0, body)


def jordan_chevalley_suite(samples: int = 200) -> Check:
    def body():
        rng = random.Random(SEED + 1)
        nontrivial = 0
        for _ in range(samples):
            A = random_matrix(rng, rng.randint(1, 5))
            jc = jordan_chevalley(A)
            inv = check_jordan_chevalley(A, jc)
            _require(all(inv.values()), f"{[k for k, v in inv.items() if not v]} fail for {A.to_json()}")
            nontrivial += not jc.nilpotent_part.is_zero()
        return f"{samples} matrices, {nontrivial} with nonzero nilpotent part"

    return _timed(9, "Jordan-Chevalley invariants", 120.0, body)


# -- 10: spectral -----------------------------------------------------------------------


def spectral_suite(samples: int = 200) -> Check:
    def body():
        rng = random.Random(SEED + 2)
        for _ in range(samples):
            P = random_monic(rng)
            back = spectral_curve(companion_from_spectral(P))
            _require(back == P, f"roundtrip fails for {P}")
        points = 0
        for _ in range(40):
            n = rng.randint(1, 4)
            phi, diag = random_triangular_field(rng, n)
            D = regularity_divisor(phi)
            for s0 in sample_points(rng, 3):
                if D(s0) == 0:
                    continue
                for d in diag:
                    dim = len(eigenline(phi, s0, d(s0)))
                    _require(dim == 1, f"eigenline of dim {dim} at regular point ({s0}, {d(s0)})")
                    points += 1
        s = Poly.x()
        scalar = PolyMatrix.of([[s, 0], [0, s]])
        _require(len(eigenline(scalar, 1, 1)) == 2, "scalar field should have a plane of eigenvectors")
        split = PolyMatrix.of([[s, 0], [0, -s]])
        _require(regularity_divisor(split)(0) == 0, "diag(s, -s) should be irregular at s = 0")
        _require(len(eigenline(split, 0, 0)) == 2, "diag(s, -s) at s = 0 should have a 2-dim kernel")
        return f"{samples} roundtrips; {points} regular curve points with 1-dim eigenline; 2 irregular points"

    return _timed(10, "spectral roundtrip and eigenlines", 60.0, body)


# -- 11: cameral ------------------------------------------------------------------------


def _random_cover(rng: random.Random, G: cam.FiniteGroupModel, pool: list, k: int) -> cam.CameralMonodromy:
    ms = [rng.choice(pool) for _ in range(k)]
    ms.append(G.inverse(G.product(ms)))
    return cam.build_cover(G, ms)


def _subgroups(G: cam.FiniteGroupModel, rng: random.Random, count: int) -> list[tuple]:
    elems = list(G.elements)
    gens_list = [(), tuple(G.generators)]
    for _ in range(count):
        gens_list.append(tuple(rng.sample(elems, rng.randint(1, 2))))
    return gens_list


def cameral_suite() -> Check:
    def body():
        Z2 = cam.cyclic_group(2)
        for k in range(0, 7):
            for ms in range(2 ** k):
                seq = [(ms >> i) & 1 for i in range(k)]
                if sum(seq) % 2:
                    continue
                c = cam.build_cover(Z2, seq)
                _require(cam.smooth_validity(c), f"double cover {seq} not valid")
                _require(cam.is_connected(c) == any(seq), f"double cover {seq} connectivity wrong")
        rng = random.Random(SEED + 3)
        groups = [cam.symmetric_group(3), cam.symmetric_group(4), cam.weyl_group_enumerated(3)]
        covers = 0
        for G in groups:
            elems = list(G.elements)
            refl = [g for g in elems if G.is_reflection(g)]
            for gens in _subgroups(G, rng, 6):
                H = cam.closure(gens, G.identity, G.mul)
                q = cam.quotient_cover(cam.build_cover(G, []), gens)
                _require(q.degree * len(H) == G.order, f"{G.name}: [W:H] * |H| != |W|")
            for _ in range(30):
                pool = refl if rng.random() < 0.6 else elems
                c = _random_cover(rng, G, pool, rng.randint(0, 5))
                conn, valid = cam.is_connected(c), cam.smooth_validity(c)
                g = rng.choice(elems)
                ms = [G.conjugate(g, m) for m in c.branch_monodromies]
                if ms:
                    shift = rng.randrange(len(ms))
                    ms = ms[shift:] + ms[:shift]
                c2 = cam.build_cover(G, ms)
                _require(cam.is_connected(c2) == conn, f"{G.name}: connectedness changed under conjugation")
                _require(cam.smooth_validity(c2) == valid, f"{G.name}: validity changed under conjugation")
                if conn:
                    for gens in _subgroups(G, rng, 2):
                        _require(cam.quotient_cover(c, gens).is_connected(), "quotient of connected cover")
                covers += 1
        return f"double covers valid; {covers} random covers of S3, S4, W(A1+A2) invariant"

    return _timed(11, "cameral suite", 10.0, body)


SUITES: dict[str, list[Callable[[], Check]]] = {
    "lattice": [unimodularity, smith_form_sanity],
    "roots": [line_count, root_counts, duality],
    "weyl": [weyl_orders],
    "singularities": [torus_suite, ade_classifier],
    "regularity": [regularity_suite, jordan_chevalley_suite],
    "spectral": [spectral_suite],
    "cameral": [cameral_suite],
}
SUITES["all"] = [f for name in ("roots", "lattice", "weyl", "singularities", "regularity", "spectral", "cameral")
                 for f in SUITES[name]]


def run_suite(name: str) -> list[Check]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return [f() for f in SUITES[name]]
