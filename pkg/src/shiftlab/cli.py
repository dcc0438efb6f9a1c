"""Command line interface: ``shiftlab <command> [options] input``.

Every command prints UTF-8 text with LF line endings.  Exit codes: 0 on
success, 2 for unreadable input, 3 when a generic initial ideal could not be
certified, 4 when an internal consistency check (or a verify suite) fails and
1 for any other rejected input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import format_monomial
from .config import config_context, get_config
from .errors import ConsistencyError, ContractError, ParseError, UncertifiedGinError
from .exterior import exterior_b_triangle, exterior_shift
from .formats import IdealInput, complex_names, read_input
from .groebner import gin
from .monomial_ideals import (
    MonomialIdeal,
    betti_squarefree_strongly_stable,
    hochster_betti,
    phi,
    phi_support,
    standard_pairs,
)
from .shifting import (
    b_triangle,
    conjecture_scan,
    degrees_vs_btriangle,
    extremal_betti,
    iterated_betti_ideal,
    kalai_b_triangle,
    symmetric_shift,
)
from .simplicial import SimplicialComplex

EXIT_OK, EXIT_OTHER, EXIT_PARSE, EXIT_UNCERTIFIED, EXIT_CONSISTENCY = 0, 1, 2, 3, 4


def _fmt_set(face) -> str:
    return "{" + ",".join(map(str, face)) + "}"


def _require_complex(obj, command: str) -> SimplicialComplex:
    if not isinstance(obj, SimplicialComplex):
        raise ContractError(f"{command} needs a simplicial complex (JSON) input")
    return obj


def _names(obj):
    return obj.names if isinstance(obj, IdealInput) else complex_names(obj)


def _gin_source(obj):
    return obj.generators if isinstance(obj, IdealInput) else obj.stanley_reisner_ideal()


# -- renderers ------------------------------------------------------------------

def render_shift(K: SimplicialComplex, exterior: bool = False) -> str:
    D = exterior_shift(K) if exterior else symmetric_shift(K)
    lines = [json.dumps({"n": D.n, "facets": [list(F) for F in D.facets]})]
    kind = "exterior" if exterior else "symmetric"
    lines.append(f"{kind} shift: {len(D.facets)} facets, f-vector {list(D.f_vector)}")
    for size in sorted({len(F) for F in D.facets}, reverse=True):
        faces = [_fmt_set(F) for F in D.facets if len(F) == size]
        lines.append(f"  size {size} ({len(faces)}): " + " ".join(faces))
    return "\n".join(lines) + "\n"


def render_gin(obj, method: str = "auto"):
    """Text and certification flag of Gin for a complex or an ideal."""
    src = _gin_source(obj)
    res = gin(src, method=method, n=obj.n)
    names = _names(obj)
    G = res.gin
    lines = [f"generators ({len(G.gens)}):"]
    lines += [f"  {format_monomial(g, names)}" for g in G.gens]
    lines.append(f"strongly stable: {'yes' if res.strongly_stable else 'no'}")
    lines.append(f"certified: {'yes' if res.certified else 'NO'} "
                 f"({len(res.seeds_used)} attempts, seeds {', '.join(hex(s) for s in res.seeds_used)})")
    if not res.certified:
        distinct = len({c for c in res.candidates})
        lines.append(f"UNCERTIFIED: {distinct} distinct candidates across attempts")
    return "\n".join(lines) + "\n", res.certified


def render_btriangle(obj, flavor: str = "symmetric") -> str:
    if isinstance(obj, IdealInput):
        if flavor != "symmetric":
            raise ContractError(f"flavor {flavor!r} is only defined for complexes")
        b = iterated_betti_ideal(obj.generators)
        # drop all-zero trailing rows of the square array
        top = max((i for i in range(b.values.shape[0]) if b.row_sum(i)), default=0)
        return b.format(upto=top)
    if flavor == "symmetric":
        b = b_triangle(obj)
    elif flavor == "exterior":
        b = exterior_b_triangle(obj)
    elif flavor == "kalai":
        b = kalai_b_triangle(obj)
    else:
        raise ContractError(f"unknown flavor {flavor!r}")
    return b.format()


def _pair_rows(pairs, names, with_phi: bool) -> list:
    rows = []
    for p in pairs:
        left = p.format(names)
        if any(p.coset):
            left = left.replace("N^", " N^", 1)
        if not with_phi:
            rows.append(f"{left} | degree {p.degree}")
            continue
        i, r = len(p.sigma), p.degree
        supp = sorted(phi_support(p.coset))
        facet = sorted(set(range(1, i - r + 1)) | set(supp))
        image = format_monomial(phi(p.coset, len(p.coset)), names)
        rows.append(f"{left} | {image} -> {_fmt_set(supp)} | N^{_fmt_set(facet)}")
    return rows


def render_stdpairs(obj, of: str = "gin") -> str:
    """Standard pairs, with the squarefree image and facet columns for complexes."""
    names = _names(obj)
    is_complex = isinstance(obj, SimplicialComplex)
    if of == "gin":
        G = gin(_gin_source(obj), n=obj.n)
        if not G.certified:
            raise UncertifiedGinError("Gin could not be certified", G)
        pairs = standard_pairs(G.gin)
        header = "pair | Phi(coset) -> support | facet" if is_complex else "pair | degree"
        rows = _pair_rows(pairs, names, is_complex)
    elif of == "ideal":
        if is_complex:
            M = obj.stanley_reisner_ideal()
        else:
            if not all(g.is_monomial() for g in obj.generators):
                raise ContractError("--of ideal needs monomial generators")
            M = MonomialIdeal(obj.n, [next(iter(g.terms)) for g in obj.generators])
        pairs = standard_pairs(M)
        header = "pair | degree"
        rows = _pair_rows(pairs, names, False)
    elif of == "shifted":
        K = _require_complex(obj, "stdpairs --of shifted")
        pairs = standard_pairs(symmetric_shift(K).stanley_reisner_ideal())
        header = "pair | degree"
        rows = _pair_rows(pairs, names, False)
    else:
        raise ContractError(f"unknown --of value {of!r}")
    return "\n".join([f"{len(pairs)} standard pairs", header] + rows) + "\n"


def render_betti(K: SimplicialComplex, method: str = "hochster") -> str:
    if method == "hochster":
        B = hochster_betti(K)
    elif method == "sss-formula":
        if not K.is_shifted():
            raise ContractError("the squarefree strongly stable formula needs a shifted complex; "
                                "use --method hochster")
        B = betti_squarefree_strongly_stable(K.stanley_reisner_ideal())
    else:
        raise ContractError(f"unknown method {method!r}")
    return B.quotient_diagram()


def render_extremal(K: SimplicialComplex) -> str:
    ext = extremal_betti(K, check=True)
    if not len(ext):
        return "no extremal Betti numbers (the ideal is zero)\n"
    lines = []
    for i, j, v in ext.records:
        lines.append(f"beta_{{{j - 1},{i + j}}}(I) = {v}    b[{K.n - j},{i}] = {v}")
    lines.append("cross-check: Hochster diagram ok, exterior triangle ok")
    return "\n".join(lines) + "\n"


def render_degrees(obj) -> str:
    src = obj if isinstance(obj, SimplicialComplex) else obj.generators
    rep = degrees_vs_btriangle(src)
    return json.dumps(rep.to_dict(), indent=2) + "\n"


def render_scan(n: int, exhaustive: bool, samples: int, seed: int):
    family = {"n": n, "exhaustive": True} if exhaustive else {"n": n, "samples": samples, "seed": seed}
    rep = conjecture_scan(family)
    lines = [
        f"complexes scanned: {len(rep.records)}",
        f"violations of b <= b^e: {rep.violations}",
        f"shifted complexes checked for b = b^e = h: {rep.shifted_checked} "
        f"({rep.shifted_failures} failures)",
        f"uncertified: {rep.uncertified}",
    ]
    return "\n".join(lines) + "\n", rep


# -- argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shiftlab", description="Algebraic shifting and iterated Betti numbers.")
    p.add_argument("--prime", type=int, help="characteristic of the coefficient field (default 32003)")
    p.add_argument("--rational", action="store_true", help="compute over Q instead of a prime field")
    p.add_argument("--seed", type=lambda s: int(s, 0), help="base seed of the coordinate changes")
    p.add_argument("--attempts", type=int, help="number of independent coordinate changes")
    p.add_argument("--degree-bound", type=int, help="override the degree truncation")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("shift", help="shifted complex")
    s.add_argument("input")
    s.add_argument("--exterior", action="store_true", help="exterior instead of symmetric shifting")

    s = sub.add_parser("gin", help="generic initial ideal")
    s.add_argument("input")
    s.add_argument("--method", choices=["auto", "linear", "buchberger"], default="auto")

    s = sub.add_parser("btriangle", help="iterated Betti numbers")
    s.add_argument("input")
    s.add_argument("--flavor", choices=["symmetric", "exterior", "kalai"], default="symmetric")

    s = sub.add_parser("stdpairs", help="standard pairs")
    s.add_argument("input")
    s.add_argument("--of", choices=["gin", "ideal", "shifted"], default="gin")

    s = sub.add_parser("betti", help="graded Betti diagram of the Stanley-Reisner ring")
    s.add_argument("input")
    s.add_argument("--method", choices=["hochster", "sss-formula"], default="hochster")

    s = sub.add_parser("extremal", help="extremal Betti numbers from the b-triangle")
    s.add_argument("input")

    s = sub.add_parser("degrees", help="multiplicities and degrees against the b-triangle")
    s.add_argument("input")

    s = sub.add_parser("verify", help="run a named invariant suite")
    s.add_argument("--suite", choices=["p-properties", "bijections", "theorems", "examples"], required=True)
    s.add_argument("--n", type=int, default=4, help="exhaustive up to this many vertices")
    s.add_argument("--samples", type=int, default=0, help="extra random complexes on 6-7 vertices")

    s = sub.add_parser("scan", help="compare symmetric and exterior b-triangles")
    s.add_argument("--n", type=int, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--exhaustive", action="store_true")
    g.add_argument("--samples", type=int)
    s.add_argument("--json", metavar="PATH", help="write every record to this file")
    return p


def _config_changes(args) -> dict:
    changes = {}
    if args.prime is not None:
        changes["prime"] = args.prime
    if args.rational:
        changes["rational"] = True
    if args.seed is not None:
        changes["base_seed"] = args.seed
    if args.attempts is not None:
        changes["attempts"] = args.attempts
    if args.degree_bound is not None:
        changes["degree_bound"] = args.degree_bound
    return changes


def run(args, out) -> int:
    cmd = args.command
    if cmd == "verify":
        from .verify import run_suite

        tally = run_suite(args.suite, n_max=args.n, samples=args.samples, seed=get_config().base_seed)
        out.write("\n".join(tally.lines()) + "\n")
        return EXIT_OK if tally.ok else EXIT_CONSISTENCY
    if cmd == "scan":
        text, rep = render_scan(args.n, args.exhaustive, args.samples or 0, get_config().base_seed)
        out.write(text)
        if args.json:
            with open(args.json, "w", encoding="utf-8", newline="\n") as fh:
                json.dump(rep.to_dict(), fh, indent=1, sort_keys=True)
                fh.write("\n")
        if rep.uncertified:
            return EXIT_UNCERTIFIED
        return EXIT_CONSISTENCY if rep.violations or rep.shifted_failures else EXIT_OK

    obj = read_input(args.input)
    if cmd == "shift":
        out.write(render_shift(_require_complex(obj, "shift"), args.exterior))
    elif cmd == "gin":
        text, certified = render_gin(obj, args.method)
        out.write(text)
        if not certified:
            return EXIT_UNCERTIFIED
    elif cmd == "btriangle":
        out.write(render_btriangle(obj, args.flavor))
    elif cmd == "stdpairs":
        out.write(render_stdpairs(obj, args.of))
    elif cmd == "betti":
        out.write(render_betti(_require_complex(obj, "betti"), args.method))
    elif cmd == "extremal":
        out.write(render_extremal(_require_complex(obj, "extremal")))
    elif cmd == "degrees":
        out.write(render_degrees(obj))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    if hasattr(out, "reconfigure"):
        out.reconfigure(encoding="utf-8", newline="\n")
    try:
        with config_context(**_config_changes(args)):
            return run(args, out)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except UncertifiedGinError as e:
        print(f"uncertified: {e}", file=sys.stderr)
        return EXIT_UNCERTIFIED
    except ConsistencyError as e:
        print(f"consistency check failed: {e}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (ContractError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_OTHER


if __name__ == "__main__":
    sys.exit(main())
