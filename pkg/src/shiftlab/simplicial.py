"""Simplicial complexes on ``[n]``: faces, duality, f/h-triangles, homology.

Faces are handled internally as bitmasks (bit ``k`` is vertex ``k+1``) and
exposed as sorted tuples of 1-based vertices.
"""

from __future__ import annotations

import json
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from math import comb

import numpy as np

from .algebra import from_support
from .errors import ContractError, ParseError
from .linalg import integer_rank
from .monomial_ideals import MonomialIdeal


def mask_of(face) -> int:
    m = 0
    for v in face:
        m |= 1 << (v - 1)
    return m


def face_of(mask: int) -> tuple:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _maximal_masks(masks) -> list:
    masks = sorted(set(masks), key=popcount, reverse=True)
    keep = []
    for m in masks:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return keep


class SimplicialComplex:
    """A simplicial complex on the vertex set ``[n]`` given by its facets.

    The void complex (no faces at all) has ``facets == ()``; the empty complex
    ``{emptyset}`` has ``facets == ((),)``.

    >>> K = SimplicialComplex(3, [[1, 2], [3]])
    >>> K.f_vector
    [1, 3, 1]
    """

    def __init__(self, n: int, facets):
        if n < 0:
            raise ContractError("n must be non-negative")
        masks = []
        for f in facets:
            f = tuple(f)
            if len(set(f)) != len(f):
                raise ContractError(f"facet {list(f)} repeats a vertex")
            for v in f:
                if not isinstance(v, (int, np.integer)) or not 1 <= v <= n:
                    raise ContractError(f"vertex {v!r} outside [1, {n}]")
            masks.append(mask_of(f))
        if len(set(masks)) != len(masks):
            raise ContractError("repeated facet")
        for a in masks:
            for b in masks:
                if a != b and a & b == a:
                    raise ContractError(f"facet {list(face_of(a))} is contained in facet {list(face_of(b))}")
        self.n = n
        self._masks = tuple(sorted(masks, key=face_of))
        self.facets = tuple(face_of(m) for m in self._masks)

    # construction helpers

    @classmethod
    def from_faces(cls, n: int, faces):
        """Complex generated by arbitrary faces (keeps the maximal ones)."""
        return cls._from_masks(n, [mask_of(f) for f in faces])

    @classmethod
    def _from_masks(cls, n, masks):
        return cls(n, [face_of(m) for m in _maximal_masks(masks)])

    @classmethod
    def void(cls, n: int):
        return cls(n, [])

    @classmethod
    def empty(cls, n: int):
        return cls(n, [()])

    @classmethod
    def simplex(cls, n: int):
        return cls(n, [tuple(range(1, n + 1))])

    @classmethod
    def from_nonfaces(cls, n: int, nonfaces):
        """Largest complex avoiding every given set."""
        bad = [mask_of(f) for f in nonfaces]
        faces = [m for m in range(1 << n) if not any(m & b == b for b in bad)]
        return cls._from_masks(n, faces)

    # basic data

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.n == other.n and self._masks == other._masks

    def __hash__(self):
        return hash((self.n, self._masks))

    def __repr__(self):
        return f"SimplicialComplex({self.n}, {[list(f) for f in self.facets]})"

    def __contains__(self, face) -> bool:
        m = mask_of(face)
        return any(m & k == m for k in self._masks)

    def __le__(self, other) -> bool:
        """Subcomplex test."""
        return self.n == other.n and all(face_of(m) in other for m in self._masks)

    @property
    def is_void(self) -> bool:
        return not self._masks

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ContractError("the void complex has no dimension")
        return max(popcount(m) for m in self._masks) - 1

    @cached_property
    def face_masks(self) -> frozenset:
        out = set()
        for f in self._masks:
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return frozenset(out)

    def faces(self, size: int | None = None) -> list:
        ms = self.face_masks if size is None else [m for m in self.face_masks if popcount(m) == size]
        return sorted((face_of(m) for m in ms), key=lambda f: (len(f), f))

    @property
    def f_vector(self) -> list:
        """``[f_{-1}, f_0, ..., f_dim]`` (entry ``k`` counts faces of size ``k``)."""
        if self.is_void:
            return []
        out = [0] * (self.dim + 2)
        for m in self.face_masks:
            out[popcount(m)] += 1
        return out

    def minimal_nonfaces(self) -> list:
        faces = self.face_masks
        out = []
        for m in range(1 << self.n):
            if m in faces:
                continue
            if all((m & ~(1 << k)) in faces for k in range(self.n) if m >> k & 1):
                out.append(face_of(m))
        return sorted(out, key=lambda f: (len(f), f))

    def stanley_reisner_ideal(self) -> MonomialIdeal:
        if self.is_void:
            raise ContractError("the void complex has the unit ideal; not a valid input")
        return MonomialIdeal(self.n, [from_support(f, self.n) for f in self.minimal_nonfaces()])

    @property
    def vertices(self) -> tuple:
        return tuple(v for v in range(1, self.n + 1) if (v,) in self)

    def is_pure(self) -> bool:
        return len({popcount(m) for m in self._masks}) <= 1

    def is_shifted(self) -> bool:
        """Closed under replacing a vertex of a face by any smaller vertex."""
        faces = self.face_masks
        for f in self._masks:
            for i in face_of(f):
                for j in range(1, i):
                    if not f >> (j - 1) & 1:
                        g = (f & ~(1 << (i - 1))) | (1 << (j - 1))
                        if g not in faces:
                            return False
        return True

    def restrict(self, vertices):
        """Induced subcomplex on a vertex subset (same ambient ``n``)."""
        w = mask_of(vertices)
        if self.is_void:
            return self
        return SimplicialComplex._from_masks(self.n, [m & w for m in self._masks])

    def link(self, face):
        f = mask_of(face)
        if f not in self.face_masks:
            raise ContractError(f"{list(face)} is not a face")
        return SimplicialComplex._from_masks(self.n, [m & ~f for m in self._masks if m & f == f])

    def relabel(self, perm):
        """Apply ``v -> perm[v-1]``."""
        return SimplicialComplex(self.n, [sorted(perm[v - 1] for v in f) for f in self.facets])

    def remove_facet(self, facet):
        """Subcomplex obtained by deleting one facet (its proper faces stay)."""
        m = mask_of(facet)
        if m not in self._masks:
            raise ContractError(f"{list(facet)} is not a facet")
        subs = [m & ~(1 << k) for k in range(self.n) if m >> k & 1]
        rest = [k for k in self._masks if k != m]
        return SimplicialComplex._from_masks(self.n, rest + subs) if (rest or subs) else SimplicialComplex.void(self.n)

    # serialisation

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))


def complex_from_dict(data) -> SimplicialComplex:
    if not isinstance(data, dict) or "n" not in data or "facets" not in data:
        raise ContractError('complex must be an object with keys "n" and "facets"')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ContractError('"n" must be an integer')
    facets = data["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ContractError('"facets" must be a list of lists')
    return SimplicialComplex(n, facets)


def parse_complex(text: str) -> SimplicialComplex:
    """Parse the JSON complex format ``{"n": 7, "facets": [[1,2,4], ...]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return complex_from_dict(data)


def load_complex(path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())


# -- operations --------------------------------------------------------------

def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """``K* = {F : [n] - F is not a face of K}``."""
    full = (1 << K.n) - 1
    faces = K.face_masks
    return SimplicialComplex._from_masks(K.n, [m for m in range(1 << K.n) if (full & ~m) not in faces])


class Triangle:
    """Integer array ``t[i, j]`` for ``0 <= i, j <= size``, printed by rows.

    Lower-triangular for complexes; general ideals may fill the square.
    """

    flavor = "triangle"

    def __init__(self, values, flavor: str | None = None):
        self.values = np.asarray(values, dtype=np.int64)
        if flavor is not None:
            self.flavor = flavor

    def __getitem__(self, ij) -> int:
        i, j = ij
        if 0 <= i < self.values.shape[0] and 0 <= j < self.values.shape[1]:
            return int(self.values[i, j])
        return 0

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        a, b = self.values, other.values
        size = (max(a.shape[0], b.shape[0]), max(a.shape[1], b.shape[1]))
        pa, pb = np.zeros(size, np.int64), np.zeros(size, np.int64)
        pa[: a.shape[0], : a.shape[1]] = a
        pb[: b.shape[0], : b.shape[1]] = b
        return bool((pa == pb).all())

    def __repr__(self):
        return f"{type(self).__name__}({self.rows()}, flavor={self.flavor!r})"

    @property
    def top(self) -> int:
        """Largest row index carrying a nonzero entry (-1 if none)."""
        nz = np.flatnonzero(self.values.any(axis=1))
        return int(nz[-1]) if nz.size else -1

    def is_lower_triangular(self) -> bool:
        return not np.triu(self.values, 1).any()

    def rows(self, upto: int | None = None) -> list:
        upto = self.values.shape[0] - 1 if upto is None else upto
        if self.is_lower_triangular():
            return [tuple(int(x) for x in self.values[i, : i + 1]) for i in range(upto + 1)]
        width = int(np.flatnonzero(self.values.any(axis=0))[-1]) + 1 if self.values.any() else 1
        return [tuple(int(x) for x in self.values[i, :width]) for i in range(upto + 1)]

    def row_sum(self, i: int) -> int:
        return int(self.values[i].sum()) if 0 <= i < self.values.shape[0] else 0

    def total(self) -> int:
        return int(self.values.sum())

    def format(self, upto: int | None = None) -> str:
        rows = self.rows(upto)
        ncols = max((len(r) for r in rows), default=1)
        cells = [[str(x) for x in r] for r in rows]
        w = max([len(str(ncols - 1))] + [len(c) for r in cells for c in r])
        lw = len(str(len(rows) - 1))
        head = " " * lw + " |" + "".join(" " + str(j).rjust(w) for j in range(ncols))
        lines = [head, "-" * (lw + 1) + "+" + "-" * (len(head) - lw - 2)]
        for i, r in enumerate(cells):
            lines.append(str(i).rjust(lw) + " |" + "".join(" " + c.rjust(w) for c in r))
        return "\n".join(lines) + "\n"

    def to_list(self, upto: int | None = None) -> list:
        return [list(r) for r in self.rows(upto)]


class BTriangle(Triangle):
    """Iterated Betti numbers ``b[i, r]``; ``flavor`` is symmetric, exterior or kalai."""

    FLAVORS = ("symmetric", "exterior", "kalai")

    def __init__(self, values, flavor: str = "symmetric"):
        if flavor not in self.FLAVORS:
            raise ContractError(f"unknown b-triangle flavor {flavor!r}")
        super().__init__(values, flavor)

    def diagonal(self) -> tuple:
        k = min(self.values.shape)
        return tuple(int(self.values[i, i]) for i in range(k))


def initial_segment(face) -> int:
    """Largest ``k`` with ``{1, ..., k}`` contained in ``face``."""
    s = set(face)
    k = 0
    while k + 1 in s:
        k += 1
    return k


def facet_b_triangle(K: SimplicialComplex, flavor: str = "symmetric") -> BTriangle:
    """Count facets ``F`` with ``|F| = i``, ``[i-r]`` in ``F`` and ``i-r+1`` not in ``F``.

    Each facet lands in exactly one cell, ``r = |F| - initial_segment(F)``.
    Meant for shifted complexes (the output of a shift).
    """
    if K.is_void:
        raise ContractError("b-triangle of the void complex is undefined")
    d = K.dim + 1
    b = np.zeros((d + 1, d + 1), dtype=np.int64)
    for F in K.facets:
        b[len(F), len(F) - initial_segment(F)] += 1
    return BTriangle(b, flavor)


def _star_sizes(K):
    """For every face mask, the size of the largest facet containing it."""
    out = {}
    for m in K.face_masks:
        out[m] = max(popcount(f) for f in K._masks if f & m == m)
    return out


def f_triangle(K: SimplicialComplex) -> Triangle:
    """``f[i, j]`` = number of faces of size ``j`` whose star has dimension ``i-1``."""
    if K.is_void:
        raise ContractError("f-triangle of the void complex is undefined")
    d = K.dim + 1
    f = np.zeros((d + 1, d + 1), dtype=np.int64)
    for m, s in _star_sizes(K).items():
        f[s, popcount(m)] += 1
    return Triangle(f, "f")


def h_triangle(K: SimplicialComplex) -> Triangle:
    """``h[i, j] = sum_s (-1)^(j-s) C(i-s, j-s) f[i, s]``."""
    f = f_triangle(K).values
    d = f.shape[0] - 1
    h = np.zeros_like(f)
    for i in range(d + 1):
        for j in range(i + 1):
            h[i, j] = sum((-1) ** (j - s) * comb(i - s, j - s) * int(f[i, s]) for s in range(j + 1))
    return Triangle(h, "h")


def _compress(K: SimplicialComplex) -> tuple:
    """Facet masks relabelled onto the used vertices, order preserved."""
    used = sorted({v for f in K.facets for v in f})
    pos = {v: k for k, v in enumerate(used)}
    return tuple(sorted(sum(1 << pos[v] for v in f) for f in K.facets))


def reduced_homology_dims(K: SimplicialComplex) -> list:
    """``[beta_{-1}, beta_0, ..., beta_dim]`` of reduced homology over Q."""
    if K.is_void:
        raise ContractError("homology of the void complex is undefined")
    return list(_homology(_compress(K)))


@lru_cache(maxsize=100_000)
def _homology(facet_masks: tuple) -> tuple:
    faces = set()
    for f in facet_masks:
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    top = max(popcount(f) for f in facet_masks)
    by_size = [sorted(m for m in faces if popcount(m) == s) for s in range(top + 1)]
    index = [{m: k for k, m in enumerate(level)} for level in by_size]
    # rank of boundary from size s to size s-1, s >= 1
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        rows = []
        for m in by_size[s]:
            row = [0] * len(by_size[s - 1])
            sign = 1
            bits = face_of(m)
            for v in bits:
                row[index[s - 1][m & ~(1 << (v - 1))]] = sign
                sign = -sign
            rows.append(row)
        ranks[s] = integer_rank(rows)
    return tuple(len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(top + 1))


def euler_characteristic(K: SimplicialComplex) -> int:
    """Reduced Euler characteristic ``sum_k (-1)^k f_k`` with ``f_{-1} = 1``."""
    return sum((-1) ** (s - 1) * c for s, c in enumerate(K.f_vector))


def is_cohen_macaulay(K: SimplicialComplex) -> bool:
    """Reisner's criterion over Q."""
    for m in K.face_masks:
        lk = K.link(face_of(m))
        h = reduced_homology_dims(lk)
        if any(h[:-1]):
            return False
    return True


def is_buchsbaum(K: SimplicialComplex) -> bool:
    """Pure, and every nonempty face has a link with homology only on top."""
    if K.is_void or not K.is_pure():
        return False
    for m in K.face_masks:
        if m == 0:
            continue
        h = reduced_homology_dims(K.link(face_of(m)))
        if any(h[:-1]):
            return False
    return True


# -- families ----------------------------------------------------------------

def all_complexes(n: int):
    """Every non-void simplicial complex on ``[n]`` (down-sets of ``2^[n]``)."""
    order = sorted(range(1 << n), key=lambda m: (popcount(m), m))
    chosen = set()

    def rec(k):
        if k == len(order):
            yield SimplicialComplex._from_masks(n, chosen)
            return
        m = order[k]
        if all((m & ~(1 << b)) in chosen for b in range(n) if m >> b & 1):
            chosen.add(m)
            yield from rec(k + 1)
            chosen.discard(m)
        if m != 0:
            yield from rec(k + 1)

    yield from rec(0)


def random_complex(n: int, rng, max_facets: int = 6, max_size: int | None = None, min_size: int = 1):
    """Complex generated by a few random faces of bounded size."""
    max_size = n if max_size is None else max_size
    k = int(rng.integers(1, max_facets + 1))
    faces = []
    for _ in range(k):
        s = int(rng.integers(min_size, max_size + 1))
        faces.append(tuple(sorted(int(v) + 1 for v in rng.choice(n, size=s, replace=False))))
    return SimplicialComplex.from_faces(n, faces)


@lru_cache(maxsize=50_000)
def canonical_form(K: SimplicialComplex) -> tuple:
    """Isomorphism-class key: lexicographically least relabelling (small ``n``)."""
    best = None
    for perm in permutations(range(K.n)):
        key = tuple(sorted(sum(1 << perm[v - 1] for v in f) for f in K.facets))
        if best is None or key < best:
            best = key
    return (K.n, best)


def shifted_complexes(n: int):
    for K in all_complexes(n):
        if K.is_shifted():
            yield K


def subsets(n: int, size: int):
    return combinations(range(1, n + 1), size)
