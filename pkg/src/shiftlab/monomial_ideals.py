"""Monomial ideals: minimal generators, the squarefree map, standard pairs,
associated primes and degrees, Hilbert series, and Betti tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .algebra import (
    divides,
    format_monomial,
    mono_div,
    mono_gcd,
    revlex_key,
    support,
    unit,
)
from .errors import ContractError, DimensionError, RangeError


def minimalize(gens) -> tuple:
    """Drop generators divisible by another; result sorted largest first."""
    gens = sorted(set(map(tuple, gens)), key=lambda m: (sum(m), m))
    keep = []
    for g in gens:
        if not any(divides(h, g) for h in keep):
            keep.append(g)
    return tuple(sorted(keep, key=revlex_key, reverse=True))


class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    >>> I = MonomialIdeal(2, [(1, 1), (2, 1)])
    >>> I.gens
    ((1, 1),)
    """

    __slots__ = ("n", "gens", "_hash")

    def __init__(self, n: int, gens=()):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != n:
                raise DimensionError(f"generator {g} does not have {n} exponents")
            if any(e < 0 for e in g):
                raise ContractError(f"negative exponent in {g}")
        self.n = n
        self.gens = minimalize(gens)
        self._hash = hash((n, self.gens))

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"MonomialIdeal(n={self.n}, gens=[{', '.join(format_monomial(g) for g in self.gens)}])"

    def __len__(self):
        return len(self.gens)

    def __contains__(self, m) -> bool:
        return any(divides(g, m) for g in self.gens)

    def is_unit(self) -> bool:
        return unit(self.n) in self.gens

    def is_zero(self) -> bool:
        return not self.gens

    def is_squarefree(self) -> bool:
        return all(max(g, default=0) <= 1 for g in self.gens)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def generators_of_degree(self, d: int) -> list:
        return [g for g in self.gens if sum(g) == d]

    def colon(self, m):
        return MonomialIdeal(self.n, [mono_div(g, mono_gcd(g, m)) for g in self.gens])

    def strongly_stable_violation(self):
        """First ``(g, i, j)`` with ``g*y_j/y_i`` outside the ideal, or None.

        Checking minimal generators suffices.
        """
        for g in self.gens:
            for i in range(1, self.n + 1):
                if not g[i - 1]:
                    continue
                for j in range(i + 1, self.n + 1):
                    h = list(g)
                    h[i - 1] -= 1
                    h[j - 1] += 1
                    if tuple(h) not in self:
                        return g, i, j
        return None

    def is_strongly_stable(self) -> bool:
        return self.strongly_stable_violation() is None

    def squarefree_strongly_stable_violation(self):
        for g in self.gens:
            for i in range(1, self.n + 1):
                if not g[i - 1]:
                    continue
                for j in range(i + 1, self.n + 1):
                    if g[j - 1]:
                        continue
                    h = list(g)
                    h[i - 1] = 0
                    h[j - 1] = 1
                    if tuple(h) not in self:
                        return g, i, j
        return None

    def k_polynomial(self) -> tuple:
        """Numerator of the Hilbert series of ``S/I`` over ``(1-t)^n``.

        Returned as a coefficient tuple, constant term first.
        """
        return _k_poly(self.gens)

    def hilbert_function(self, d: int) -> int:
        """``dim (S/I)_d``, read off the Hilbert series."""
        if d < 0:
            return 0
        k = self.k_polynomial()
        if self.n == 0:
            return k[d] if d < len(k) else 0
        # coefficient of t^d in K(t) / (1-t)^n
        return sum(c * comb(d - s + self.n - 1, self.n - 1) for s, c in enumerate(k) if s <= d)


def _poly_sub(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_shift(a, s):
    return (0,) * s + tuple(a)


@lru_cache(maxsize=200_000)
def _k_poly(gens: tuple) -> tuple:
    if not gens:
        return (1,)
    # pairwise coprime generators: K = prod (1 - t^deg)
    if all(not any(a and b for a, b in zip(g, h)) for g, h in combinations(gens, 2)):
        out = (1,)
        for g in gens:
            out = _poly_sub(out, _poly_shift(out, sum(g)))
        return out
    *rest, last = gens
    rest = minimalize(rest)
    col = minimalize([mono_div(g, mono_gcd(g, last)) for g in rest])
    return _poly_sub(_k_poly(rest), _poly_shift(_k_poly(col), sum(last)))


# -- the squarefree map ------------------------------------------------------

def phi_support(m) -> frozenset:
    """Support of the squarefree image of ``m``; may contain indices below 1.

    The variable indices of ``m`` are listed with multiplicity in weakly
    decreasing order ``i_1 >= i_2 >= ...`` and ``i_k`` is sent to ``i_k - (k-1)``.

    >>> sorted(phi_support((0, 0, 0, 1, 0, 3, 1)))
    [0, 3, 4, 5, 7]
    """
    idx = []
    for k in range(len(m) - 1, -1, -1):
        idx.extend([k + 1] * m[k])
    return phi_of_indices(idx)


def phi_of_indices(indices) -> frozenset:
    """Same map on a multiset of variable indices (index 0 or below allowed)."""
    idx = sorted(indices, reverse=True)
    return frozenset(i - k for k, i in enumerate(idx))


def phi(m, n: int | None = None):
    """Squarefree image of ``m`` as a monomial over ``[1, n]``.

    Raises :class:`RangeError` when the image leaves ``[1, n]``.
    """
    n = len(m) if n is None else n
    s = phi_support(m)
    if s and (min(s) < 1 or max(s) > n):
        raise RangeError(f"squarefree image of {format_monomial(m)} has support {sorted(s)} outside [1, {n}]")
    return tuple(1 if k + 1 in s else 0 for k in range(n))


def phi_inverse(face, n: int):
    """The monomial whose squarefree image has support ``face``."""
    f = sorted(face, reverse=True)
    e = [0] * n
    for k, i in enumerate(f):
        j = i + k
        if not 1 <= j <= n:
            raise RangeError(f"face {sorted(face)} has no preimage over [1, {n}]")
        e[j - 1] += 1
    return tuple(e)


# -- standard pairs ----------------------------------------------------------

@dataclass(frozen=True, order=True)
class StandardPair:
    """The set ``coset * N^sigma`` of standard monomials."""

    coset: tuple
    sigma: tuple

    def __post_init__(self):
        if support(self.coset) & set(self.sigma):
            raise ContractError("coset support meets sigma")

    @property
    def degree(self) -> int:
        return sum(self.coset)

    def contains(self, m) -> bool:
        s = set(self.sigma)
        return all(e == c for k, (e, c) in enumerate(zip(m, self.coset)) if k + 1 not in s) and \
            all(e >= c for e, c in zip(m, self.coset))

    def format(self, names=None) -> str:
        body = "" if not any(self.coset) else format_monomial(self.coset, names)
        return f"{body}N^{{{','.join(map(str, self.sigma))}}}"


def _admissible(gens_out, m) -> bool:
    return not any(divides(g, m) for g in gens_out)


def standard_pairs(M: MonomialIdeal) -> list:
    """All standard pairs of ``M``, sorted by ``(-|sigma|, sigma, coset)``.

    Cosets ``m`` for a fixed ``sigma`` are enumerated inside the box
    ``m_j < max exponent of y_j over the generators`` (``j`` outside
    ``sigma``): a larger exponent would let the pair grow by ``y_j``.
    """
    if M.is_unit():
        raise ContractError("the unit ideal has no standard monomials")
    n = M.n
    maxexp = [max((g[k] for g in M.gens), default=0) for k in range(n)]
    pairs = []
    for size in range(n, -1, -1):
        for sigma in combinations(range(1, n + 1), size):
            sig = set(sigma)
            outside = [k for k in range(n) if k + 1 not in sig]
            if any(maxexp[k] == 0 for k in outside):
                continue
            gens_out = [tuple(0 if k + 1 in sig else g[k] for k in range(n)) for g in M.gens]
            if any(not any(g) for g in gens_out):
                continue  # some generator lives on sigma: nothing admissible
            # generators restricted to each one-variable enlargement of sigma
            ext = {}
            for k in outside:
                ext[k] = [tuple(0 if (j + 1 in sig or j == k) else g[j] for j in range(n)) for g in M.gens]
            for cos in _box_order_ideal(gens_out, outside, maxexp, n):
                maximal = True
                for k in outside:
                    c2 = tuple(0 if j == k else cos[j] for j in range(n))
                    if _admissible(ext[k], c2):
                        maximal = False
                        break
                if maximal:
                    pairs.append(StandardPair(cos, sigma))
    pairs.sort(key=lambda p: (-len(p.sigma), p.sigma, revlex_key(p.coset)))
    return pairs


def _box_order_ideal(gens_out, coords, maxexp, n):
    """Monomials on ``coords`` inside the box that avoid ``gens_out``."""
    out = []
    m = [0] * n

    def rec(pos):
        if pos == len(coords):
            out.append(tuple(m))
            return
        k = coords[pos]
        for e in range(maxexp[k]):
            m[k] = e
            if not _admissible(gens_out, tuple(m)):
                break
            rec(pos + 1)
        m[k] = 0

    rec(0)
    return out


@dataclass(frozen=True)
class DegreeReport:
    dim: int
    multiplicities: dict
    minimal_primes: tuple
    degree: int
    geomdeg: int
    arithdeg: int

    @property
    def associated_primes(self) -> tuple:
        return tuple(sorted(self.multiplicities, key=lambda s: (-len(s), s)))

    @property
    def embedded_primes(self) -> tuple:
        return tuple(s for s in self.associated_primes if s not in self.minimal_primes)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "multiplicities": {",".join(map(str, s)) or "-": v for s, v in
                               sorted(self.multiplicities.items(), key=lambda kv: (-len(kv[0]), kv[0]))},
            "minimal_primes": [list(s) for s in self.minimal_primes],
            "degree": self.degree,
            "geomdeg": self.geomdeg,
            "arithdeg": self.arithdeg,
        }


def degree_report(M: MonomialIdeal, pairs=None) -> DegreeReport:
    """Associated primes ``P_sigma`` with multiplicities and the three degrees.

    ``sigma`` indexes the prime ``P_sigma = <y_j : j not in sigma>``.
    """
    pairs = standard_pairs(M) if pairs is None else pairs
    mult = {}
    minimal = set()
    for p in pairs:
        mult[p.sigma] = mult.get(p.sigma, 0) + 1
        if not any(p.coset):
            minimal.add(p.sigma)
    dim = max(len(s) for s in mult)
    deg = sum(v for s, v in mult.items() if len(s) == dim)
    geom = sum(v for s, v in mult.items() if s in minimal)
    arith = sum(mult.values())
    return DegreeReport(dim, mult, tuple(sorted(minimal, key=lambda s: (-len(s), s))), deg, geom, arith)


# -- Betti tables ------------------------------------------------------------

class BettiTable:
    """Graded Betti numbers ``beta_{i,j}`` of an ideal (``beta_{0,j}`` counts
    minimal generators of degree ``j``).
    """

    def __init__(self, entries=None):
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    def __getitem__(self, ij) -> int:
        return self.entries.get(ij, 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __repr__(self):
        return f"BettiTable({dict(sorted(self.entries.items()))})"

    def totals(self) -> list:
        if not self.entries:
            return []
        top = max(i for i, _ in self.entries)
        return [sum(v for (i, _), v in self.entries.items() if i == k) for k in range(top + 1)]

    def extremal(self) -> dict:
        """Extremal entries ``{(i, j): beta_{i,i+j}}`` keyed by column and row."""
        rows = {(i, j - i): v for (i, j), v in self.entries.items()}
        out = {}
        for (i, r), v in rows.items():
            if all(not (i2 >= i and r2 >= r and (i2, r2) != (i, r)) for (i2, r2) in rows):
                out[(i, r)] = v
        return out

    def quotient_diagram(self) -> str:
        """Macaulay2-style diagram of ``S/I`` (``beta_{i,i+j}(S/I) = beta_{i-1,i+j}(I)``)."""
        q = {(0, 0): 1}
        for (i, j), v in self.entries.items():
            q[(i + 1, j - i - 1)] = v
        ncols = max(i for i, _ in q) + 1
        nrows = max(r for _, r in q) + 1
        totals = [sum(v for (i, _), v in q.items() if i == c) for c in range(ncols)]
        cells = [[str(q[(c, r)]) if q.get((c, r)) else "." for c in range(ncols)] for r in range(nrows)]
        labels = ["total:"] + [f"{r}:" for r in range(nrows)]
        width = max(map(len, labels))
        colw = [max([len(str(totals[c])), len(str(c))] + [len(cells[r][c]) for r in range(nrows)])
                for c in range(ncols)]
        lines = [" " * width + "".join(" " + str(c).rjust(colw[c]) for c in range(ncols))]
        lines.append(labels[0].rjust(width) + "".join(" " + str(totals[c]).rjust(colw[c]) for c in range(ncols)))
        for r in range(nrows):
            lines.append(labels[r + 1].rjust(width) + "".join(" " + cells[r][c].rjust(colw[c]) for c in range(ncols)))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {f"{i},{j}": v for (i, j), v in sorted(self.entries.items())}


def betti_squarefree_strongly_stable(M: MonomialIdeal) -> BettiTable:
    """Betti numbers of a squarefree strongly stable ideal.

    ``beta_{i,i+j} = sum over degree-j generators g of C(n - min(g) + 1 - j, i)``.
    """
    if not M.is_squarefree():
        raise ContractError("ideal is not squarefree")
    bad = M.squarefree_strongly_stable_violation()
    if bad is not None:
        g, i, j = bad
        raise ContractError(
            f"not squarefree strongly stable: {format_monomial(g)} * y{j} / y{i} is not in the ideal")
    n = M.n
    out = {}
    for g in M.gens:
        jdeg = sum(g)
        low = min(support(g))
        for i in range(n + 1):
            c = comb(n - low + 1 - jdeg, i) if n - low + 1 - jdeg >= 0 else 0
            if c:
                out[(i, i + jdeg)] = out.get((i, i + jdeg), 0) + c
    return BettiTable(out)



def hochster_betti(K) -> BettiTable:
    """Betti numbers of the Stanley-Reisner ideal of ``K`` by Hochster's formula.

    ``beta_{i,j}(I_K) = sum over |W| = j of dim H~_{j-i-2}(K|_W; Q)``.
    """
    from .simplicial import _homology, _maximal_masks

    if K.is_void:
        raise ContractError("the void complex has the unit ideal")
    out = {}
    masks = K._masks
    for W in range(1, 1 << K.n):
        facets = _maximal_masks([f & W for f in masks])
        h = _homology(_relabel_masks(facets, W))
        size = bin(W).count("1")
        for s, dim_h in enumerate(h):
            i = size - s - 1
            if dim_h and i >= 0:
                out[(i, size)] = out.get((i, size), 0) + dim_h
    return BettiTable(out)


def _relabel_masks(facets, W) -> tuple:
    """Order-preserving relabelling of masks inside ``W`` onto ``0..|W|-1``."""
    bits = [k for k in range(W.bit_length()) if W >> k & 1]
    out = []
    for f in facets:
        m = 0
        for pos, k in enumerate(bits):
            if f >> k & 1:
                m |= 1 << pos
        out.append(m)
    return tuple(sorted(out))
