"""Exterior algebra over ``k^n`` and exterior algebraic shifting.

Exterior monomials are strictly increasing index tuples; internally they are
bitmasks.  Reordering ``y_{i_1} ^ ... ^ y_{i_k}`` by one transposition
negates the sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .algebra import random_generic_matrix, revlex_key
from .config import get_config
from .errors import ContractError, DimensionError, UncertifiedGinError
from .groebner import derive_seeds
from .linalg import pivot_columns
from .simplicial import (
    BTriangle,
    SimplicialComplex,
    face_of,
    facet_b_triangle,
    mask_of,
    popcount,
)


def _shuffle_sign(a: int, b: int) -> int:
    """Sign of ``e_A ^ e_B`` relative to ``e_{A u B}`` for disjoint masks."""
    inversions = 0
    while b:
        low = b & -b
        inversions += popcount(a & ~((low << 1) - 1))
        b ^= low
    return -1 if inversions & 1 else 1


class ExteriorElement:
    """Sparse element of the exterior algebra; ``terms`` maps masks to scalars.

    >>> x1, x2 = ExteriorElement.var(1, 2), ExteriorElement.var(2, 2)
    >>> (x2 ^ x1) == -(x1 ^ x2)
    True
    """

    __slots__ = ("n", "field", "terms")

    def __init__(self, terms, n: int, field=None):
        self.n = n
        self.field = field if field is not None else get_config().field
        clean = {}
        for s, c in dict(terms).items():
            if isinstance(s, int):
                if s < 0 or s >> n:
                    raise DimensionError(f"mask {s} uses a vertex outside [1, {n}]")
                m = s
            else:
                s = tuple(s)
                if any(x >= y for x, y in zip(s, s[1:])):
                    raise ContractError(f"support {s} is not strictly increasing")
                if s and not (1 <= s[0] and s[-1] <= n):
                    raise DimensionError(f"index outside [1, {n}] in {s}")
                m = mask_of(s)
            c = self.field(c)
            if not self.field.is_zero(c):
                clean[m] = c
        self.terms = clean

    @classmethod
    def var(cls, i: int, n: int, field=None):
        return cls({(i,): 1}, n, field)

    @classmethod
    def monomial(cls, support, n: int, coeff=1, field=None):
        return cls({tuple(support): coeff}, n, field)

    def _check(self, other):
        if other.n != self.n:
            raise DimensionError(f"exterior elements over {self.n} and {other.n} generators")
        if other.field != self.field:
            raise ContractError("exterior elements over different fields")

    def __add__(self, other):
        self._check(other)
        F = self.field
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = F.add(t.get(m, F.zero), c)
            if F.is_zero(v):
                t.pop(m, None)
            else:
                t[m] = v
        return ExteriorElement(t, self.n, F)

    def __neg__(self):
        return ExteriorElement({m: self.field.neg(c) for m, c in self.terms.items()}, self.n, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def support_terms(self) -> dict:
        """Terms keyed by increasing index tuples."""
        return {face_of(m): c for m, c in self.terms.items()}

    def __repr__(self):
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: revlex_key(_vec(t[0], self.n)), reverse=True):
            mono = "^".join(f"y{v}" for v in face_of(m)) or "1"
            parts.append(f"{self.field.format(c)}*{mono}")
        return "ExteriorElement(" + (" + ".join(parts) or "0") + ")"


def _vec(mask, n):
    return tuple((mask >> k) & 1 for k in range(n))


def wedge(a: ExteriorElement, b: ExteriorElement) -> ExteriorElement:
    """Bilinear, associative product; ``e_S ^ e_T = sign * e_{S u T}`` if disjoint."""
    a._check(b)
    F = a.field
    out = {}
    for s, cs in a.terms.items():
        for t, ct in b.terms.items():
            if s & t:
                continue
            c = F.mul(cs, ct)
            if _shuffle_sign(s, t) < 0:
                c = F.neg(c)
            out[s | t] = F.add(out.get(s | t, F.zero), c)
    return ExteriorElement({m: c for m, c in out.items() if not F.is_zero(c)}, a.n, F)


# -- exterior powers of a coordinate change -----------------------------------

def revlex_subsets(n: int, k: int) -> list:
    """``k``-subsets of ``[n]`` as masks, largest first in revlex."""
    masks = [mask_of(c) for c in combinations(range(1, n + 1), k)]
    return sorted(masks, key=lambda m: revlex_key(_vec(m, n)), reverse=True)


@lru_cache(maxsize=64)
def _exterior_powers(seed: int, n: int, field):
    """For each ``k``: column order and a map ``S -> row of u(e_S)``."""
    u = random_generic_matrix(n, seed, field)
    F = field
    forms = [{1 << j: u[i, j] for j in range(n) if not F.is_zero(u[i, j])} for i in range(n)]
    images = {0: {0: F.one}}
    for s in range(1, 1 << n):
        top = s.bit_length() - 1
        prev = images[s & ~(1 << top)]
        out = {}
        for t, c in prev.items():
            for v, a in forms[top].items():
                if t & v:
                    continue
                x = F.mul(c, a)
                if _shuffle_sign(t, v) < 0:
                    x = F.neg(x)
                out[t | v] = F.add(out.get(t | v, F.zero), x)
        images[s] = out
    columns = {k: revlex_subsets(n, k) for k in range(n + 1)}
    return images, columns


@dataclass
class ExteriorShiftResult:
    complex: SimplicialComplex
    seeds_used: list
    certified: bool
    shifted: bool
    candidates: list


def exterior_shift_result(K: SimplicialComplex, attempts: int | None = None,
                          base_seed: int | None = None) -> ExteriorShiftResult:
    """Degreewise computation of the exterior shift for several seeds."""
    cfg = get_config()
    attempts = cfg.attempts if attempts is None else attempts
    base_seed = cfg.base_seed if base_seed is None else base_seed
    seeds = derive_seeds(base_seed, attempts)
    if K.is_void:
        return ExteriorShiftResult(K, seeds, True, True, [K] * attempts)
    n, F = K.n, cfg.field
    faces = K.face_masks
    results = []
    for seed in seeds:
        images, columns = _exterior_powers(seed, n, F)
        new_faces = []
        for k in range(n + 1):
            cols = columns[k]
            nonfaces = [s for s in cols if s not in faces]
            if not nonfaces:
                new_faces.extend(cols)
                continue
            pos = {m: c for c, m in enumerate(cols)}
            rows = []
            for s in nonfaces:
                row = [F.zero] * len(cols)
                for t, c in images[s].items():
                    row[pos[t]] = c
                rows.append(row)
            lead = {cols[c] for c in pivot_columns(rows, len(cols), F)}
            new_faces.extend(m for m in cols if m not in lead)
        results.append(SimplicialComplex._from_masks(n, new_faces) if new_faces else SimplicialComplex.void(n))
    first = results[0]
    agree = all(r == first for r in results)
    shifted = first.is_shifted()
    return ExteriorShiftResult(first, seeds, agree and shifted and first.f_vector == K.f_vector,
                               shifted, results)


def exterior_shift(K: SimplicialComplex, attempts: int | None = None,
                   base_seed: int | None = None) -> SimplicialComplex:
    """The exterior shift of ``K``; raises when the seeds disagree.

    >>> exterior_shift(SimplicialComplex(4, [[1, 2], [3, 4]])).facets
    ((1, 2), (1, 3), (4,))
    """
    res = exterior_shift_result(K, attempts, base_seed)
    if not res.certified:
        raise UncertifiedGinError("exterior shift could not be certified", res)
    return res.complex


def exterior_b_triangle(K: SimplicialComplex, shifted: SimplicialComplex | None = None, **kw) -> BTriangle:
    """Exterior iterated Betti numbers read off the facets of the exterior shift."""
    E = exterior_shift(K, **kw) if shifted is None else shifted
    return facet_b_triangle(E, "exterior")

