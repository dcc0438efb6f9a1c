"""Buchberger's algorithm, initial ideals and generic initial ideals.

Everything uses degree reverse lexicographic order with ``y_n`` largest.
Two routes compute ``In(u I)`` for a random coordinate change ``u``:

* ``"buchberger"`` transforms the generators and runs Buchberger;
* ``"linear"`` works one degree at a time: the degree ``d`` part of ``u I``
  is the row space of an explicit matrix, and its pivot columns (monomials
  ordered from largest to smallest) are the degree ``d`` part of the initial
  ideal.  The loop stops once the candidate has the Hilbert series of ``I``,
  which certifies that no generators are missing.

``method="auto"`` picks the linear route for monomial input.
"""

from __future__ import annotations

import heapq
from itertools import product
from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import (
    Polynomial,
    apply_linear_map,
    count_monomials,
    divides,
    mono_div,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
    random_generic_matrix,
    revlex_key,
    unit,
)
from .config import get_config
from .errors import ConsistencyError, ContractError, DimensionError
from .linalg import _generic_echelon, pivot_columns
from .monomial_ideals import MonomialIdeal

ORDER = "degrevlex"


# -- reduction kernel ----------------------------------------------------------
#
# Polynomials inside the engine are plain dicts {exponent tuple: coefficient}.
# A heap keyed by (-degree, exponents) pops the revlex-largest monomial first.

def _heap_key(m):
    return (-sum(m), m)


def _reduce(terms: dict, basis, F) -> dict:
    """Remainder of ``terms`` modulo ``basis`` (list of ``(lm, monic dict)``)."""
    p = dict(terms)
    heap = [_heap_key(m) for m in p]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        hit = next((b for b in basis if divides(b[0], m)), None)
        if hit is None:
            rem[m] = c
            continue
        q = mono_div(m, hit[0])
        for t, ct in hit[1].items():
            s = mono_mul(t, q)
            if s == m:
                continue
            old = p.get(s)
            v = F.sub(F.zero if old is None else old, F.mul(c, ct))
            if F.is_zero(v):
                p.pop(s, None)
            else:
                if old is None:
                    heapq.heappush(heap, _heap_key(s))
                p[s] = v
    return rem


def _lead(terms: dict):
    return max(terms, key=revlex_key)


def _monic(terms: dict, F) -> dict:
    inv = F.inv(terms[_lead(terms)])
    return {m: F.mul(inv, c) for m, c in terms.items()}


class GroebnerBasis:
    """Reduced, monic Gröbner basis under degrevlex (``y_n`` largest)."""

    order = ORDER

    def __init__(self, generators, n: int, field):
        self.n = n
        self.field = field
        self.generators = tuple(sorted(generators, key=lambda g: revlex_key(g.leading_monomial())))
        self._basis = [(g.leading_monomial(), g.terms) for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.generators]})"

    def leading_monomials(self) -> list:
        return [lm for lm, _ in self._basis]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def initial_ideal(self) -> MonomialIdeal:
        return initial_ideal(self)

    def is_groebner(self) -> bool:
        """All S-polynomials reduce to zero (a direct, slow check)."""
        F = self.field
        for a in range(len(self._basis)):
            for b in range(a + 1, len(self._basis)):
                if _reduce(_spoly(self._basis[a], self._basis[b], F), self._basis, F):
                    return False
        return True


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo ``G``."""
    if f.n != G.n:
        raise DimensionError(f"polynomial in {f.n} variables, basis in {G.n}")
    return Polynomial._raw(_reduce(f.terms, G._basis, G.field), f.n, G.field)


def initial_ideal(G: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(G.n, G.leading_monomials())


def _spoly(a, b, F):
    (la, fa), (lb, fb) = a, b
    L = mono_lcm(la, lb)
    qa, qb = mono_div(L, la), mono_div(L, lb)
    out = {}
    for t, c in fa.items():
        out[mono_mul(t, qa)] = c
    for t, c in fb.items():
        s = mono_mul(t, qb)
        v = F.sub(out.get(s, F.zero), c)
        if F.is_zero(v):
            out.pop(s, None)
        else:
            out[s] = v
    return out


def _coprime(a, b) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _check_generators(gens):
    gens = list(gens)
    if not gens:
        return gens, None, None
    n, F = gens[0].n, gens[0].field
    for g in gens:
        if g.n != n:
            raise DimensionError("generators live in different rings")
        if g.field != F:
            raise ContractError("generators live over different fields")
        if g.is_zero():
            raise ContractError("zero generator")
        if not g.is_homogeneous():
            raise ContractError(f"generator {g} is not homogeneous")
    return gens, n, F


def buchberger(gens, n: int | None = None, field=None) -> GroebnerBasis:
    """Reduced Gröbner basis of a homogeneous ideal.

    Normal selection strategy (smallest lcm degree first), the coprime
    criterion and the Gebauer–Möller pair update.

    >>> from shiftlab.algebra import parse_polynomial
    >>> G = buchberger([parse_polynomial("y1*y2"), parse_polynomial("y2^2")])
    >>> sorted(str(g) for g in G)
    ['y2*y1', 'y2^2']
    """
    gens, n0, F0 = _check_generators(gens)
    if n0 is None:
        if n is None:
            raise ContractError("empty generator list needs n")
        field = field if field is not None else get_config().field
        return GroebnerBasis([], n, field)
    n, F = n0, F0
    polys = []      # every basis element ever added, as (lm, monic dict)
    active = []     # indices still in the basis
    pairs = []      # heap of (deg lcm, seq, i, j)
    seq = 0

    def update(h):
        nonlocal pairs, active, seq
        lh = polys[h][0]
        todo = [(g, mono_lcm(lh, polys[g][0])) for g in active]
        kept = []
        while todo:
            g, L = todo.pop()
            if _coprime(lh, polys[g][0]) or not any(divides(L2, L) for _, L2 in todo + kept):
                kept.append((g, L))
        survivors = []
        for item in pairs:
            _, _, i, j = item
            L = mono_lcm(polys[i][0], polys[j][0])
            if divides(lh, L) and mono_lcm(polys[i][0], lh) != L and mono_lcm(polys[j][0], lh) != L:
                continue
            survivors.append(item)
        for g, L in kept:
            if not _coprime(lh, polys[g][0]):
                seq += 1
                survivors.append((sum(L), seq, g, h))
        heapq.heapify(survivors)
        pairs = survivors
        active = [g for g in active if not divides(lh, polys[g][0])] + [h]

    for g in sorted(gens, key=lambda g: revlex_key(g.leading_monomial())):
        r = _reduce(g.terms, [polys[i] for i in active], F)
        if r:
            r = _monic(r, F)
            polys.append((_lead(r), r))
            update(len(polys) - 1)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        r = _reduce(_spoly(polys[i], polys[j], F), [polys[k] for k in active], F)
        if r:
            r = _monic(r, F)
            polys.append((_lead(r), r))
            update(len(polys) - 1)

    # active leading monomials are already pairwise non-dividing; inter-reduce tails
    basis = [polys[k] for k in active]
    reduced = []
    for idx, (lm, g) in enumerate(basis):
        others = basis[:idx] + basis[idx + 1:]
        tail = {m: c for m, c in g.items() if m != lm}
        r = _reduce(tail, others, F)
        r[lm] = F.one
        reduced.append(Polynomial._raw(r, n, F))
    G = GroebnerBasis(reduced, n, F)
    for g in gens:
        if not G.contains(g):
            raise ConsistencyError(f"generator {g} does not reduce to zero")
    return G


# -- generic initial ideals ---------------------------------------------------

@dataclass
class GinResult:
    """Outcome of a certified generic initial ideal computation."""

    gin: MonomialIdeal
    seeds_used: list
    certified: bool
    strongly_stable: bool
    candidates: list = dc_field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "gens": [list(g) for g in self.gin.gens],
            "seeds": [int(s) for s in self.seeds_used],
            "certified": self.certified,
            "strongly_stable": self.strongly_stable,
        }


def derive_seeds(base_seed: int, attempts: int) -> list:
    """Independent 64-bit seeds from one base seed."""
    ss = np.random.SeedSequence(int(base_seed) & 0xFFFFFFFFFFFFFFFF)
    return [int(s) for s in ss.generate_state(attempts, dtype=np.uint64)]


class _SymmetricPowers:
    """Matrices of ``u`` acting on degree ``d`` monomials, built incrementally.

    Row ``k`` of the degree ``d`` matrix holds the coefficients of ``u(m_k)``
    where ``m_k`` runs over degree ``d`` monomials from largest to smallest.
    """

    def __init__(self, u, n: int, field):
        self.n, self.field = n, field
        self.numeric = not field.rational
        self.a = [[u[i, j] for j in range(n)] for i in range(n)]
        self.basis = {0: [unit(n)]}
        self.index = {0: {unit(n): 0}}
        one = np.ones((1, 1), dtype=np.int64) if self.numeric else [[field.one]]
        self.mats = {0: one}

    def monomials(self, d):
        if d not in self.basis:
            self.basis[d] = monomials_of_degree(self.n, d)
            self.index[d] = {m: k for k, m in enumerate(self.basis[d])}
        return self.basis[d]

    def matrix(self, d):
        if d in self.mats:
            return self.mats[d]
        prev = self.matrix(d - 1)
        mons = self.monomials(d)
        pidx = self.index[d - 1]
        idx = self.index[d]
        n = self.n
        first = [next(k for k in range(n) if m[k]) for m in mons]
        parents = [pidx[m[:k] + (m[k] - 1,) + m[k + 1:]] for m, k in zip(mons, first)]
        ups = []
        for j in range(n):
            ups.append([idx[m[:j] + (m[j] + 1,) + m[j + 1:]] for m in self.basis[d - 1]])
        if self.numeric:
            p = self.field.p
            A = np.array(self.a, dtype=np.int64)
            P = prev[parents]
            out = np.zeros((len(mons), len(mons)), dtype=np.int64)
            ks = np.array(first)
            for j in range(n):
                out[:, ups[j]] += (A[ks, j][:, None] * P) % p
            out %= p
        else:
            F = self.field
            out = [[F.zero] * len(mons) for _ in mons]
            for r, (k, par) in enumerate(zip(first, parents)):
                row = prev[par]
                for j in range(n):
                    a = self.a[k][j]
                    up = ups[j]
                    for c, v in enumerate(row):
                        if v:
                            out[r][up[c]] = F.add(out[r][up[c]], F.mul(a, v))
        self.mats[d] = out
        return out


class _IdealImages(_SymmetricPowers):
    """Images ``u(m)`` only for monomials ``m`` of a monomial ideal (and the
    divisors of its generators), which is all the linear route needs.

    Each needed monomial is built from a needed parent ``m / y_k``: inside the
    ideal when ``m`` is not a minimal generator, otherwise a divisor of one.
    """

    def __init__(self, u, n: int, field, gens):
        super().__init__(u, n, field)
        self.ideal = MonomialIdeal(n, gens)
        divisors = set()
        for g in self.ideal.gens:
            for e in product(*[range(x + 1) for x in g]):
                divisors.add(tuple(e))
        self.divisors = divisors
        self.need = {0: [unit(n)]}
        self.pos = {0: {unit(n): 0}}
        self.rows = {0: np.ones((1, 1), dtype=np.int64)}

    def ideal_part(self, d) -> list:
        gens = self.ideal.gens
        return sorted({mono_mul(g, q) for g in gens if sum(g) <= d
                       for q in monomials_of_degree(self.n, d - sum(g))}, key=self.index_of(d).__getitem__)

    def index_of(self, d):
        self.monomials(d)
        return self.index[d]

    def images(self, d):
        """``(needed monomials, their image rows)`` in degree ``d``."""
        if d in self.rows:
            return self.need[d], self.rows[d]
        self.images(d - 1)
        self.monomials(d - 1)
        idx = self.index_of(d)
        M, n, p = self.ideal, self.n, self.field.p
        ppos = self.pos[d - 1]
        need = sorted(set(self.ideal_part(d)) | {m for m in self.divisors if sum(m) == d}, key=idx.__getitem__)
        ks, parents = [], []
        for m in need:
            down = [(k, m[:k] + (m[k] - 1,) + m[k + 1:]) for k in range(n) if m[k]]
            pick = next(((k, q) for k, q in down if q in ppos and q in M), None)
            if pick is None:
                pick = next((k, q) for k, q in down if q in ppos)
            ks.append(pick[0])
            parents.append(ppos[pick[1]])
        prev_mons = self.basis[d - 1]
        P = self.rows[d - 1][parents]
        A = np.array(self.a, dtype=np.int64)
        ks = np.array(ks)
        out = np.zeros((len(need), len(idx)), dtype=np.int64)
        for j in range(n):
            up = [idx[m[:j] + (m[j] + 1,) + m[j + 1:]] for m in prev_mons]
            out[:, up] += (A[ks, j][:, None] * P) % p
        out %= p
        self.need[d], self.pos[d], self.rows[d] = need, {m: k for k, m in enumerate(need)}, out
        return need, out


def _slice_rows(gens, d, sym):
    """Coefficient vectors (degree ``d`` basis) spanning ``I_d``."""
    idx = sym.index[d]
    F = sym.field
    rows = []
    seen = set()
    for g in gens:
        e = g.degree()
        if e > d:
            continue
        for q in monomials_of_degree(g.n, d - e):
            if g.is_monomial():
                m = mono_mul(next(iter(g.terms)), q)
                if m in seen:
                    continue
                seen.add(m)
            row = [F.zero] * len(idx)
            for t, c in g.terms.items():
                row[idx[mono_mul(t, q)]] = c
            rows.append(row)
    return rows


def _initial_linear(gens, n, F, u, reference: MonomialIdeal, degree_bound: int):
    """``In(u I)`` degree by degree; ``reference`` has the Hilbert series of ``I``."""
    target = reference.k_polynomial()
    lo = min(g.degree() for g in gens)
    top = max(g.degree() for g in gens)
    monomial = all(g.is_monomial() for g in gens)
    if monomial and not F.rational:
        sym = _IdealImages(u, n, F, [next(iter(g.terms)) for g in gens])
    else:
        sym = _SymmetricPowers(u, n, F)
    found = []
    cand = MonomialIdeal(n, [])
    d = lo
    while True:
        if d > degree_bound:
            raise ContractError(f"Gin not complete by degree {degree_bound}")
        if not F.rational and d >= F.p:
            raise ContractError(f"degree {d} reaches the characteristic {F.p}")
        mons = sym.monomials(d)
        dim_I = len(mons) - reference.hilbert_function(d)
        known = [m for m in mons if m in cand]
        if len(known) > dim_I:
            raise ConsistencyError(f"degree {d}: {len(known)} known leading monomials exceed dim I_d = {dim_I}")
        if len(known) < dim_I:
            if monomial and sym.numeric:
                need, rows = sym.images(d)
                pos = sym.pos[d]
                R = rows[[pos[m] for m in sym.ideal_part(d)]]
            elif sym.numeric:
                R = (np.array(_slice_rows(gens, d, sym), dtype=np.int64) @ sym.matrix(d)) % F.p
            else:
                U = sym.matrix(d)
                R = [[sum((F.mul(r[k], U[k][c]) for k in range(len(r)) if r[k]), F.zero)
                      for c in range(len(mons))] for r in _slice_rows(gens, d, sym)]
            piv = pivot_columns(R, len(mons), F)
            lead = [mons[c] for c in piv]
            if len(lead) != dim_I:
                raise ConsistencyError(f"degree {d}: rank {len(lead)} but dim I_d = {dim_I}")
            lead_set = set(lead)
            if any(m not in lead_set for m in known):
                raise ConsistencyError(f"degree {d}: initial ideal not closed under multiplication")
            new = [m for m in lead if m not in cand]
            found.extend(new)
            cand = MonomialIdeal(n, found)
        if d >= top and cand.k_polynomial() == target:
            return cand
        d += 1


def _as_polynomials(gens, field):
    if isinstance(gens, MonomialIdeal):
        return [Polynomial.monomial(g, 1, field) for g in gens.gens], gens.n
    gens = list(gens)
    return gens, (gens[0].n if gens else None)


def gin(gens, attempts: int | None = None, base_seed: int | None = None, method: str = "auto",
        n: int | None = None) -> GinResult:
    """Generic initial ideal of a homogeneous ideal, certified across seeds.

    ``gens`` is a sequence of Polynomials or a MonomialIdeal.  The result is
    certified only when every attempt gives the same ideal and that ideal is
    strongly stable.
    """
    cfg = get_config()
    F = cfg.field
    attempts = cfg.attempts if attempts is None else attempts
    base_seed = cfg.base_seed if base_seed is None else base_seed
    if attempts < 1:
        raise ContractError("attempts must be positive")
    if method not in ("auto", "linear", "buchberger"):
        raise ContractError(f"unknown method {method!r}")
    polys, n0 = _as_polynomials(gens, F)
    n = n0 if n0 is not None else n
    if n is None:
        raise ContractError("n is required for an empty generator list")
    polys, _, F0 = _check_generators(polys)
    if F0 is not None:
        F = F0
    seeds = derive_seeds(base_seed, attempts)
    if not polys:
        M = MonomialIdeal(n, [])
        return GinResult(M, seeds, True, True, [M] * attempts)
    if not F.rational and max(g.degree() for g in polys) >= F.p:
        raise ContractError(f"generator degree reaches the characteristic {F.p}")
    if any(g.degree() == 0 for g in polys):
        M = MonomialIdeal(n, [unit(n)])
        return GinResult(M, seeds, True, True, [M] * attempts)

    monomial = all(g.is_monomial() for g in polys)
    if method == "auto":
        method = "linear" if monomial else "buchberger"
    if method == "linear":
        if monomial:
            reference = MonomialIdeal(n, [next(iter(g.terms)) for g in polys])
        else:
            reference = initial_ideal(buchberger(polys))
        bound = cfg.degree_bound if cfg.degree_bound else 10 * max(g.degree() for g in polys) + 4 * n
    results = []
    for s in seeds:
        u = random_generic_matrix(n, s, F)
        if method == "linear":
            results.append(_initial_linear(polys, n, F, u, reference, bound))
        else:
            results.append(initial_ideal(buchberger([apply_linear_map(u, g) for g in polys])))
    first = results[0]
    agree = all(r == first for r in results)
    stable = first.is_strongly_stable()
    return GinResult(first, seeds, agree and stable, stable, results)


def gin_ideal(gens, **kw) -> MonomialIdeal:
    """Certified Gin or :class:`UncertifiedGinError`."""
    from .errors import UncertifiedGinError

    res = gin(gens, **kw)
    if not res.certified:
        raise UncertifiedGinError("generic initial ideal could not be certified", res)
    return res.gin


def hilbert_function_of(gens, d: int) -> int:
    """``dim (S/I)_d`` by linear algebra on the spanning set of ``I_d``."""
    gens = list(gens)
    n, F = gens[0].n, gens[0].field
    mons = monomials_of_degree(n, d)
    idx = {m: k for k, m in enumerate(mons)}
    rows = []
    for g in gens:
        e = g.degree()
        if e > d:
            continue
        for q in monomials_of_degree(n, d - e):
            row = [F.zero] * len(mons)
            for t, c in g.terms.items():
                row[idx[mono_mul(t, q)]] = c
            rows.append(row)
    r = len(_generic_echelon(rows, len(mons), F)[0]) if rows else 0
    return count_monomials(n, d) - r
