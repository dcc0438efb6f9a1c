"""Named invariants over families of complexes and ideals.

Each ``check_*`` function takes one complex (and a :class:`ShiftCache`) and
returns a dict ``{invariant name: passed}``; entries that do not apply to the
complex are omitted.  :func:`run_suite` aggregates them for the command line.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from .algebra import Polynomial
from .monomial_ideals import (
    MonomialIdeal,
    StandardPair,
    betti_squarefree_strongly_stable,
    degree_report,
    hochster_betti,
    phi_support,
    standard_pairs,
)
from .shifting import (
    ShiftCache,
    a_sets,
    chain_property,
    check_c_decomposition,
    dual_shift_betti_prediction,
    extremal_cells,
    kalai_b_triangle,
)
from .simplicial import (
    SimplicialComplex,
    alexander_dual,
    all_complexes,
    facet_b_triangle,
    h_triangle,
    is_buchsbaum,
    random_complex,
    reduced_homology_dims,
)


def _is_simplex(K) -> bool:
    return len(K.facets) == 1 and len(K.facets[0]) == K.n


def check_shift_properties(K: SimplicialComplex, cache: ShiftCache) -> dict:
    """Shiftedness, idempotence, fixed shifted complexes, f-vector, monotonicity."""
    out = {}
    for kind, shift in (("symmetric", cache.symmetric), ("exterior", cache.exterior)):
        D = shift(K)
        out[f"{kind} P1 shifted"] = D.is_shifted()
        out[f"{kind} idempotent"] = shift(D) == D
        if K.is_shifted():
            out[f"{kind} P2 fixes shifted"] = D == K
        out[f"{kind} P3 f-vector"] = D.f_vector == K.f_vector
        mono = True
        for F in K.facets:
            sub = K.remove_facet(F)
            if not sub.is_void and not shift(sub) <= D:
                mono = False
                break
        out[f"{kind} P4 monotone"] = mono
    S, E = cache.symmetric(K), cache.exterior(K)
    out["exterior shift of symmetric shift"] = cache.exterior(S) == S
    out["symmetric shift of exterior shift"] = cache.symmetric(E) == E
    return out


def check_diagonals(K: SimplicialComplex, cache: ShiftCache) -> dict:
    """Diagonals of the three triangles equal reduced homology over Q."""
    h = reduced_homology_dims(K)
    S = cache.symmetric(K)
    b = facet_b_triangle(S)
    be = facet_b_triangle(cache.exterior(K), "exterior")
    kb = kalai_b_triangle(K, S)
    d = K.dim + 1
    diag = lambda t: [t[i, i] for i in range(d + 1)]
    return {
        "symmetric diagonal is homology": diag(b) == h,
        "exterior diagonal is homology": diag(be) == h,
        "kalai diagonal is homology": diag(kb) == h,
        "kalai diagonal equals symmetric diagonal": diag(kb) == diag(b),
    }


def check_btriangle_sources(K: SimplicialComplex, cache: ShiftCache) -> dict:
    """Facet counts of the shift against A-set sizes of Gin."""
    b = facet_b_triangle(cache.symmetric(K))
    A = a_sets(cache.gin(K), stanley_reisner=True)
    cells = {(int(i), int(r)): int(b.values[i, r]) for i, r in zip(*np.nonzero(b.values))}
    return {"facets count A-sets": cells == {k: len(v) for k, v in A.sets.items()}}


def check_bijections(K: SimplicialComplex, cache: ShiftCache) -> dict:
    """Standard pairs of Gin, facets of the shift and pairs of its ideal."""
    out = {}
    G, D = cache.gin(K), cache.symmetric(K)
    pairs = standard_pairs(G)
    images = []
    for p in pairs:
        i, r = len(p.sigma), p.degree
        F = tuple(sorted(set(range(1, i - r + 1)) | phi_support(p.coset)))
        images.append(F if len(F) == i else None)
    out["Gin pairs to facets"] = None not in images and len(set(images)) == len(images) \
        and set(images) == set(D.facets)
    shifted_pairs = standard_pairs(D.stanley_reisner_ideal())
    expected = sorted((StandardPair((0,) * K.n, F) for F in images if F is not None),
                      key=lambda q: (-len(q.sigma), q.sigma))
    out["Gin pairs to pairs of shifted ideal"] = sorted(
        shifted_pairs, key=lambda q: (-len(q.sigma), q.sigma)) == expected
    own = standard_pairs(K.stanley_reisner_ideal())
    out["squarefree pairs are facets"] = sorted(p.sigma for p in own) == sorted(K.facets) and \
        all(not any(p.coset) for p in own)
    return out


def check_dual_identities(K: SimplicialComplex, cache: ShiftCache) -> dict:
    """Betti numbers of shifted duals from triangles, and dual extremal values."""
    if _is_simplex(K):
        return {}
    n = K.n
    Kd = alexander_dual(K)
    b = facet_b_triangle(cache.symmetric(K))
    be = facet_b_triangle(cache.exterior(K), "exterior")
    out = {
        "betti of shifted dual from b": betti_squarefree_strongly_stable(
            cache.symmetric(Kd).stanley_reisner_ideal()) == dual_shift_betti_prediction(b, n),
        "betti of exterior shifted dual from b^e": betti_squarefree_strongly_stable(
            cache.exterior(Kd).stanley_reisner_ideal()) == dual_shift_betti_prediction(be, n),
    }
    E = hochster_betti(K).extremal()
    Ed = hochster_betti(Kd).extremal()
    # beta_{i,i+j}(dual) extremal <-> beta_{j-1,i+j}(K) extremal; keys are (column, row)
    out["dual extremal values"] = {(j - 1, i + 1): v for (i, j), v in Ed.items()} == E
    return out


def _hochster_cells(K) -> dict:
    return {(k, k + row): v for (k, row), v in hochster_betti(K).extremal().items()}


def check_extremal(K: SimplicialComplex, cache: ShiftCache) -> dict:
    """Corners of both triangles against Hochster's extremal entries."""
    if _is_simplex(K):
        return {}
    n = K.n
    b = facet_b_triangle(cache.symmetric(K))
    be = facet_b_triangle(cache.exterior(K), "exterior")
    hoch = _hochster_cells(K)
    return {
        "b corners are extremal Betti numbers": extremal_cells(b, n).as_betti() == hoch,
        "b^e corners are extremal Betti numbers": extremal_cells(be, n).as_betti() == hoch,
        "shift keeps extremal Betti numbers": _hochster_cells(cache.symmetric(K)) == hoch,
    }


def check_degrees_and_chain(K: SimplicialComplex, cache: ShiftCache) -> dict:
    G, D = cache.gin(K), cache.symmetric(K)
    rep = degree_report(G)
    b = facet_b_triangle(D)
    top = K.dim + 1
    sizes = {len(s) for s in rep.multiplicities}
    ass_chain = all(k + 1 in sizes for k in sizes if k < max(sizes))
    facet_counts = {}
    for F in D.facets:
        facet_counts[len(F)] = facet_counts.get(len(F), 0) + 1
    out = {
        "mult is row sum": {len(s): v for s, v in rep.multiplicities.items()} ==
        {i: b.row_sum(i) for i in range(top + 1) if b.row_sum(i)},
        "mult is facet count": {len(s): v for s, v in rep.multiplicities.items()} == facet_counts,
        "degree and geomdeg are top row sum": rep.degree == rep.geomdeg == b.row_sum(top),
        "arithdeg is number of facets": rep.arithdeg == b.total() == len(D.facets),
        "chain property matches facet sizes": chain_property(K, D) == ass_chain,
    }
    if is_buchsbaum(K):
        out["Buchsbaum chain property"] = chain_property(K, D)
        beta = reduced_homology_dims(K)
        ok = True
        for i in range(top):
            for r in range(i + 1):
                want = comb(i - 1, r - 1) * beta[r] if i >= 1 and r >= 1 else 0
                if b[i, r] != want:
                    ok = False
        out["Buchsbaum binomial rows"] = ok
    return out


def check_sequentially_cm(K: SimplicialComplex, cache: ShiftCache) -> dict:
    if not K.is_shifted():
        return {}
    b = facet_b_triangle(cache.symmetric(K))
    be = facet_b_triangle(cache.exterior(K), "exterior")
    h = h_triangle(K)
    return {
        "shifted: b = b^e": b == be,
        "shifted: b = h": b.values.shape == h.values.shape and bool((b.values == h.values).all()),
        "shifted: h preserved": h_triangle(cache.symmetric(K)) == h == h_triangle(cache.exterior(K)),
    }


def check_conjecture(K: SimplicialComplex, cache: ShiftCache) -> dict:
    b = facet_b_triangle(cache.symmetric(K))
    be = facet_b_triangle(cache.exterior(K), "exterior")
    return {"b <= b^e": bool((b.values <= be.values).all()) if b.values.shape == be.values.shape else False}


COMPLEX_CHECKS = {
    "p-properties": [check_shift_properties],
    "bijections": [check_btriangle_sources, check_bijections],
    "theorems": [check_diagonals, check_dual_identities, check_extremal, check_degrees_and_chain,
                 check_sequentially_cm, check_conjecture],
}


@dataclass
class Tally:
    passed: dict = dc_field(default_factory=dict)
    failures: dict = dc_field(default_factory=dict)

    def add(self, label, results: dict):
        """Record results; ``label`` is a complex or any JSON-able description."""
        if isinstance(label, SimplicialComplex):
            label = label.to_dict()
        for name, ok in results.items():
            self.passed.setdefault(name, 0)
            self.failures.setdefault(name, [])
            if ok:
                self.passed[name] += 1
            else:
                self.failures[name].append(label)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def lines(self) -> list:
        out = []
        for name in sorted(self.passed):
            bad = len(self.failures[name])
            status = "PASS" if not bad else "FAIL"
            out.append(f"{status} {name}: {self.passed[name]} passed, {bad} failed")
        return out


def complex_family(n_max: int, samples: int = 0, sample_sizes=(6, 7), seed: int = 0, max_size: int = 3):
    """Every complex on at most ``n_max`` vertices, then random samples."""
    for n in range(1, n_max + 1):
        yield from all_complexes(n)
    rng = np.random.default_rng(seed)
    for k in range(samples):
        n = sample_sizes[k % len(sample_sizes)]
        yield random_complex(n, rng, max_facets=7, max_size=max_size)


def run_checks(complexes, checks, cache: ShiftCache | None = None, tally: Tally | None = None) -> Tally:
    cache = ShiftCache() if cache is None else cache
    tally = Tally() if tally is None else tally
    for K in complexes:
        for fn in checks:
            tally.add(K, fn(K, cache))
    return tally


def random_monomial_ideal(n: int, rng, k: int = 4, max_deg: int = 4) -> MonomialIdeal:
    gens = []
    for _ in range(k):
        d = int(rng.integers(1, max_deg + 1))
        e = [0] * n
        for v in rng.integers(0, n, size=d):
            e[int(v)] += 1
        gens.append(tuple(e))
    return MonomialIdeal(n, gens)


def strongly_stable_closure(M: MonomialIdeal) -> MonomialIdeal:
    """Smallest strongly stable ideal containing ``M``."""
    todo = list(M.gens)
    seen = set(todo)
    while todo:
        g = todo.pop()
        for i in range(M.n):
            if not g[i]:
                continue
            for j in range(i + 1, M.n):
                h = list(g)
                h[i] -= 1
                h[j] += 1
                h = tuple(h)
                if h not in seen:
                    seen.add(h)
                    todo.append(h)
    return MonomialIdeal(M.n, seen)


def check_ideal_invariants(I: MonomialIdeal, cache_gin=None) -> dict:
    """Ideal-level identities on strongly stable ideals (their own Gin)."""
    from .groebner import gin

    res = gin(I) if cache_gin is None else cache_gin
    G = res.gin
    out = {"gin certified": res.certified}
    if G.is_unit():
        return out
    D = G.max_degree() + G.n
    out["C decomposition"] = check_c_decomposition(G, D) == []
    rep = degree_report(G)
    A = a_sets(G)
    rows = {}
    for (i, _), ms in A.sets.items():
        rows[i] = rows.get(i, 0) + len(ms)
    out["mult is A-set size"] = {len(s): v for s, v in rep.multiplicities.items()} == rows
    out["degree equals geomdeg"] = rep.degree == rep.geomdeg
    return out


def run_suite(name: str, n_max: int = 4, samples: int = 0, seed: int = 0) -> Tally:
    """Run one named suite; ``examples`` compares the golden files."""
    if name == "examples":
        from .golden import compare_goldens

        tally = Tally()
        for gname, ok in compare_goldens().items():
            tally.add({"golden": gname}, {f"golden {gname}": ok})
        return tally
    if name not in COMPLEX_CHECKS:
        raise KeyError(name)
    tally = run_checks(complex_family(n_max, samples, seed=seed), COMPLEX_CHECKS[name])
    if name == "theorems":
        rng = np.random.default_rng(seed)
        for _ in range(max(5, samples // 10)):
            n = int(rng.integers(2, 5))
            I = strongly_stable_closure(random_monomial_ideal(n, rng, k=2, max_deg=3))
            tally.add({"ideal": [list(g) for g in I.gens]}, check_ideal_invariants(I))
    return tally


def polynomial_battery(rng, count: int = 5, n: int = 3) -> list:
    """Small homogeneous non-monomial ideals with two generators each."""
    from .algebra import monomials_of_degree

    out = []
    for _ in range(count):
        gens = []
        for _ in range(2):
            d = int(rng.integers(1, 3))
            mons = monomials_of_degree(n, d)
            pick = rng.choice(len(mons), size=min(2, len(mons)), replace=False)
            terms = {mons[int(k)]: int(rng.integers(1, 5)) for k in pick}
            gens.append(Polynomial(terms, n))
        out.append(gens)
    return out
