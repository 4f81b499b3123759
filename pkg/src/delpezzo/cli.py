"""Command-line entry point; every command prints one JSON document.

Exit status: 0 on success, 1 on a domain error, 2 on usage, parse or file errors.
Integers and rationals are always emitted as strings.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import cameral as cam
from . import verify
from .lattice import LatticeVector, canonical_class, check_rank, kernel_of_pairings
from .regularity import (
    RationalMatrix,
    centralizer_dim,
    characteristic_polynomial,
    is_regular,
    is_subregular,
    jordan_chevalley,
    minimal_polynomial,
)
from .roots import dynkin_diagram, enumerate_lines, enumerate_roots, standard_simple_system
from .singularities import (
    ConfigError,
    RootConfig,
    classify_ADE,
    torus_connected,
    validate_config,
    weyl_subgroup_order,
)
from .spectral import (
    ParseError,
    PolyMatrix,
    companion_from_spectral,
    parse_spectral,
    parse_univariate,
    regularity_divisor,
    spectral_curve,
)
from .weyl import ResourceError, group_order, orbit, simple_reflections


class UsageError(Exception):
    """Bad flags, malformed expressions or unreadable input files (exit 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- vector expressions --------------------------------------------------------------

_VEC_TERM = re.compile(r"([+-])?(\d*)\*?(e(\d+)|k)")


def parse_vector(expr: str, r: int) -> LatticeVector:
    """Parse sums like "2e0 - e1 - e2" or "k + e3" into a vector of Lambda_r."""
    text = re.sub(r"\s+", "", expr)
    if not text:
        raise UsageError("empty vector expression")
    coords = [0] * (r + 1)
    pos = 0
    while pos < len(text):
        m = _VEC_TERM.match(text, pos)
        if not m or (pos > 0 and not m.group(1)):
            raise UsageError(f"unknown token at {text[pos:]!r} in {expr!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = sign * (int(m.group(2)) if m.group(2) else 1)
        if m.group(3) == "k":
            coords = [a + coeff * b for a, b in zip(coords, canonical_class(r).coords)]
        else:
            i = int(m.group(4))
            if i > r:
                raise UsageError(f"e{i} exceeds rank {r}")
            coords[i] += coeff
        pos = m.end()
    return LatticeVector(tuple(coords))


def parse_vector_list(expr: str, r: int) -> list[LatticeVector]:
    return [parse_vector(part, r) for part in expr.split(";") if part.strip()]


# -- JSON helpers --------------------------------------------------------------------


def _s(x) -> str:
    return str(x)


def _poly_json(p) -> dict[str, str]:
    return {str(i): str(c) for i, c in enumerate(p.coeffs) if c}


def _load_json(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise UsageError(f"file not found: {path}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg})")


def _load_rational_matrix(path: str) -> RationalMatrix:
    data = _load_json(path)
    try:
        return RationalMatrix.of([[Fraction(str(x)) for x in row] for row in data])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{path}: not a square matrix of rationals ({exc})")


def _load_poly_matrix(path: str) -> PolyMatrix:
    data = _load_json(path)
    try:
        return PolyMatrix.of([[parse_univariate(str(x), "s") for x in row] for row in data])
    except (TypeError, ValueError) as exc:
        raise UsageError(f"{path}: not a square matrix of polynomials in s ({exc})")


def _rank(args) -> int:
    return check_rank(args.r, 3, 8)


def _config(args) -> RootConfig:
    r = _rank(args)
    return RootConfig(r, tuple(parse_vector_list(args.roots, r)))


# -- commands ------------------------------------------------------------------------


def cmd_roots(args):
    roots = enumerate_roots(_rank(args))
    if args.count_only:
        return {"count": _s(len(roots))}
    return {"count": _s(len(roots)), "roots": [a.to_json() for a in roots]}


def cmd_lines(args):
    lines = enumerate_lines(_rank(args))
    if args.count_only:
        return {"count": _s(len(lines))}
    return {"count": _s(len(lines)), "lines": [x.to_json() for x in lines]}


def cmd_simple_system(args):
    r = _rank(args)
    ss = standard_simple_system(r)
    adj = dynkin_diagram(r)
    return {
        "simple_roots": [a.to_json() for a in ss.alphas],
        "fundamental_weights": [w.to_json() for w in ss.omegas],
        "pairing_matrix": [[_s(x) for x in row] for row in ss.pairing_matrix()],
        "dynkin_edges": [[_s(i), _s(j)] for i in adj for j in sorted(adj[i]) if i < j],
    }


def cmd_weyl_order(args):
    return {"order": _s(group_order(_rank(args)))}


def cmd_weyl_orbit(args):
    r = _rank(args)
    seed = parse_vector(args.seed, r)
    orb = orbit(seed, simple_reflections(r))
    out = {"size": _s(len(orb))}
    if not args.count_only:
        out["orbit"] = [v.to_json() for v in orb]
    return out


def cmd_classify(args):
    c = validate_config(_config(args))
    out = {
        "type": classify_ADE(c).label,
        "torus_connected": torus_connected(c).connected,
        "kernel_rank": _s(kernel_of_pairings(c.roots, c.rank_r).rank),
    }
    try:
        out["weyl_order"] = _s(weyl_subgroup_order(c))
    except ResourceError:
        out["weyl_order"] = None
    return out


def cmd_torus(args):
    c = validate_config(_config(args))
    cert = torus_connected(c)
    return {"connected": cert.connected, "invariant_factors": [_s(d) for d in cert.invariant_factors]}


def cmd_regular(args):
    A = _load_rational_matrix(args.matrix)
    return {
        "centralizer_dim": _s(centralizer_dim(A)),
        "regular": is_regular(A),
        "subregular": is_subregular(A),
    }


def cmd_jordan(args):
    A = _load_rational_matrix(args.matrix)
    jc = jordan_chevalley(A)
    return {
        "semisimple": jc.semisimple_part.to_json(),
        "nilpotent": jc.nilpotent_part.to_json(),
        "characteristic_polynomial": _poly_json(characteristic_polynomial(A)),
        "minimal_polynomial": _poly_json(minimal_polynomial(A)),
    }


def cmd_spectral_to(args):
    P = spectral_curve(_load_poly_matrix(args.phi))
    return {"polynomial": P.to_json(), "text": str(P)}


def cmd_spectral_from(args):
    try:
        P = parse_spectral(args.poly)
    except ParseError as exc:
        raise UsageError(str(exc))
    phi = companion_from_spectral(P)
    return {"phi": phi.to_json()}


def cmd_spectral_regular_locus(args):
    D = regularity_divisor(_load_poly_matrix(args.phi))
    return {
        "divisor": _poly_json(D),
        "text": D.format("s"),
        "everywhere_regular": D.is_constant() and not D.is_zero(),
        "nowhere_regular": D.is_zero(),
    }


def cmd_cameral_check(args):
    try:
        G, parse_elem = cam.group_by_name(args.group)
        ms = [parse_elem(e) for e in cam.split_top_level(args.monodromy)] if args.monodromy.strip() else []
        hs = [parse_elem(e) for e in cam.split_top_level(args.subgroup)] if args.subgroup else None
    except ValueError as exc:
        raise UsageError(str(exc))
    c = cam.build_cover(G, ms)
    out = {
        "group": G.name,
        "degree": _s(c.degree),
        "connected": cam.is_connected(c),
        "smooth_valid": cam.smooth_validity(c),
    }
    if hs is not None:
        q = cam.quotient_cover(c, hs)
        out["quotient"] = {"degree": _s(q.degree), "connected": q.is_connected()}
    return out


def cmd_verify(args):
    try:
        checks = verify.run_suite(args.suite)
    except KeyError as exc:
        raise UsageError(exc.args[0])
    for chk in checks:
        print(chk.line(), file=sys.stderr)
    out = {
        "suite": args.suite,
        "passed": all(c.passed for c in checks),
        "checks": [
            {"name": c.name, "criterion": _s(c.number), "passed": c.passed, "detail": c.detail,
             "seconds": f"{c.seconds:.3f}"}
            for c in checks
        ],
    }
    return out, 0 if out["passed"] else 1


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="delpezzo", description="Del Pezzo lattices, Weyl groups and Higgs-field checks.")
    p.add_argument("--json-pretty", action="store_true", help="indent JSON output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_r(q, count=False):
        q.add_argument("--r", type=int, required=True)
        if count:
            q.add_argument("--count-only", action="store_true")
        return q

    with_r(sub.add_parser("roots"), True).set_defaults(fn=cmd_roots)
    with_r(sub.add_parser("lines"), True).set_defaults(fn=cmd_lines)
    with_r(sub.add_parser("simple-system")).set_defaults(fn=cmd_simple_system)

    weyl = sub.add_parser("weyl").add_subparsers(dest="weyl_command", required=True, parser_class=_Parser)
    with_r(weyl.add_parser("order")).set_defaults(fn=cmd_weyl_order)
    q = with_r(weyl.add_parser("orbit"), True)
    q.add_argument("--seed", required=True)
    q.set_defaults(fn=cmd_weyl_orbit)

    for name, fn in (("classify", cmd_classify), ("torus", cmd_torus)):
        q = with_r(sub.add_parser(name))
        q.add_argument("--roots", required=True, help='semicolon separated, e.g. "e1-e2; e2-e3"')
        q.set_defaults(fn=fn)

    for name, fn in (("regular", cmd_regular), ("jordan", cmd_jordan)):
        q = sub.add_parser(name)
        q.add_argument("--matrix", required=True, help="JSON file with rows of rationals")
        q.set_defaults(fn=fn)

    spectral_cmds = sub.add_parser("spectral").add_subparsers(dest="spectral_command", required=True, parser_class=_Parser)
    q = spectral_cmds.add_parser("to")
    q.add_argument("--phi", required=True)
    q.set_defaults(fn=cmd_spectral_to)
    q = spectral_cmds.add_parser("from")
    q.add_argument("--poly", required=True)
    q.set_defaults(fn=cmd_spectral_from)
    q = spectral_cmds.add_parser("regular-locus")
    q.add_argument("--phi", required=True)
    q.set_defaults(fn=cmd_spectral_regular_locus)

    c = sub.add_parser("cameral").add_subparsers(dest="cameral_command", required=True, parser_class=_Parser)
    q = c.add_parser("check")
    q.add_argument("--group", required=True, help="S3, Z2, W(4), ...")
    q.add_argument("--monodromy", required=True, help='comma separated, e.g. "(12),(23),(23),(12)"')
    q.add_argument("--subgroup", help="generators of H for the quotient cover")
    q.set_defaults(fn=cmd_cameral_check)

    q = sub.add_parser("verify")
    q.add_argument("--suite", default="all", help=", ".join(verify.SUITES))
    q.set_defaults(fn=cmd_verify)
    return p


def run(argv: Sequence[str], out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(list(argv))
        result = args.fn(args)
        code = 0
        if isinstance(result, tuple):
            result, code = result
    except UsageError as exc:
        print(f"delpezzo: error: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, ValueError, ResourceError) as exc:
        print(f"delpezzo: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    json.dump(result, out, indent=2 if args.json_pretty else None, sort_keys=args.json_pretty)
    out.write("\n")
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
