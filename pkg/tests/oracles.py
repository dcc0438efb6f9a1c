"""Independent reference computations used to derive frozen test values.

These use sympy (Groebner bases, exact matrix ranks, minors) or brute force,
never the package's own linear algebra or Buchberger code.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np
import sympy as sp


def revlex_greater(a, b) -> bool:
    """Degree first, then the smallest-index variable with different exponent
    must appear to a lower power in the larger monomial (``y_n`` largest)."""
    if sum(a) != sum(b):
        return sum(a) > sum(b)
    for x, y in zip(a, b):
        if x != y:
            return x < y
    return False


def sympy_grevlex_greater(a, b) -> bool:
    """The same comparison through sympy's grevlex on reversed variables."""
    from sympy.polys.orderings import grevlex

    return grevlex(tuple(reversed(a))) > grevlex(tuple(reversed(b)))


def integer_matrix(n, rng, low=-9, high=9):
    while True:
        u = rng.integers(low, high + 1, size=(n, n))
        if round(abs(np.linalg.det(u))) != 0 and sp.Matrix(u.tolist()).det() != 0:
            return [[int(x) for x in row] for row in u]


def sympy_initial_ideal(polys_as_dicts, n, u=None, modulus=None):
    """Leading monomials of a reduced grevlex basis of ``u . I`` (``y_n`` largest)."""
    ys = sp.symbols(f"y1:{n + 1}")
    exprs = []
    for terms in polys_as_dicts:
        f = sum(sp.Integer(int(c)) * sp.prod([ys[k] ** e for k, e in enumerate(m)]) for m, c in terms.items())
        if u is not None:
            f = f.subs({ys[i]: sum(u[i][j] * ys[j] for j in range(n)) for i in range(n)}, simultaneous=True)
        exprs.append(sp.expand(f))
    gens = tuple(reversed(ys))
    kw = {"modulus": modulus} if modulus else {}
    G = sp.groebner(exprs, *gens, order="grevlex", **kw)
    lead = []
    for g in G.exprs:
        m = sp.Poly(g, *gens).monoms(order="grevlex")[0]
        lead.append(tuple(reversed(m)))
    return minimal(lead)


def minimal(gens):
    gens = sorted(set(gens), key=sum)
    keep = []
    for g in gens:
        if not any(all(h[k] <= g[k] for k in range(len(g))) for h in keep):
            keep.append(g)
    return set(keep)


def sympy_gin(polys_as_dicts, n, seeds=(1, 2), modulus=None):
    """Gin by sympy with integer matrices; returns the set if all seeds agree."""
    out = None
    for s in seeds:
        u = integer_matrix(n, np.random.default_rng(s))
        lead = sympy_initial_ideal(polys_as_dicts, n, u, modulus)
        if out is not None and lead != out:
            raise AssertionError("oracle seeds disagree")
        out = lead
    return out


# -- simplicial oracles ---------------------------------------------------------

def faces_of(facets):
    out = set()
    for F in facets:
        for k in range(len(F) + 1):
            out.update(combinations(sorted(F), k))
    return out


def reduced_homology(facets):
    """Reduced Betti numbers over Q with sympy ranks: list index s is dimension s-1."""
    faces = faces_of(facets)
    if not faces:
        return []
    top = max(len(f) for f in faces)
    by = {k: sorted(f for f in faces if len(f) == k) for k in range(top + 1)}
    ranks = {}
    for k in range(1, top + 1):
        rows, cols = by[k - 1], by[k]
        idx = {f: i for i, f in enumerate(rows)}
        M = sp.zeros(len(rows), len(cols))
        for j, f in enumerate(cols):
            for t in range(len(f)):
                M[idx[f[:t] + f[t + 1:]], j] = (-1) ** t
        ranks[k] = M.rank()
    out = []
    for k in range(top + 1):
        out.append(len(by[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0))
    return out


def alexander_dual_faces(n, facets):
    """Complements of the non-faces."""
    faces = faces_of(facets)
    ground = set(range(1, n + 1))
    subsets = [c for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    return {tuple(sorted(ground - set(F))) for F in subsets if F not in faces}


def exterior_shift_oracle(n, facets, u):
    """Exterior shift over Q via minors: u(e_S) has coefficient det u[S, T] on e_T."""
    faces = faces_of(facets)
    U = sp.Matrix(u)
    result = set()
    for k in range(n + 1):
        cols = list(combinations(range(1, n + 1), k))
        # largest first in revlex
        vec = lambda T: tuple(1 if v in T else 0 for v in range(1, n + 1))
        cols = sorted(cols, key=lambda T: _revlex_sort_key(vec(T)), reverse=True)
        non = [S for S in cols if S not in faces]
        if not non:
            result.update(cols)
            continue
        M = sp.Matrix([[U.extract([s - 1 for s in S], [t - 1 for t in T]).det() if k else 1 for T in cols]
                       for S in non])
        _, piv = M.rref()
        lead = {cols[c] for c in piv}
        result.update(T for T in cols if T not in lead)
    return result


def _revlex_sort_key(m):
    return (sum(m), tuple(-e for e in m))


def is_shifted_faces(faces):
    for F in faces:
        for v in F:
            for w in range(1, v):
                if w not in F:
                    G = tuple(sorted((set(F) - {v}) | {w}))
                    if G not in faces:
                        return False
    return True


def hochster_oracle(n, facets):
    """beta_{i,j}(I) = sum over |W| = j of dim H~_{j-i-2}(K_W), by sympy ranks."""
    faces = faces_of(facets)
    out = {}
    for j in range(1, n + 1):
        for W in combinations(range(1, n + 1), j):
            sub = [F for F in faces if set(F) <= set(W)]
            h = reduced_homology(sub) if sub else []
            for s, v in enumerate(h):
                if v:
                    i = j - (s - 1) - 2
                    out[(i, j)] = out.get((i, j), 0) + v
    return out


# -- standard pairs by brute force ----------------------------------------------

def standard_pairs_oracle(gens, n, box):
    """Maximal admissible pairs ``(m, sigma)`` with exponents below ``box``."""
    def in_ideal(m):
        return any(all(g[k] <= m[k] for k in range(n)) for g in gens)

    def admissible(m, sigma):
        if any(m[k - 1] for k in sigma):
            return False
        # m N^sigma avoids the ideal iff no generator divides m after raising sigma
        return not any(all(g[k] <= m[k] for k in range(n) if k + 1 not in sigma) for g in gens)

    pairs = set()
    for sigma_size in range(n + 1):
        for sigma in combinations(range(1, n + 1), sigma_size):
            ranges = [range(1) if k + 1 in sigma else range(box) for k in range(n)]
            for m in product(*ranges):
                if not in_ideal(m) and admissible(m, sigma):
                    pairs.add((m, sigma))

    def contained(p, q):
        (m, s), (m2, s2) = p, q
        return set(s) <= set(s2) and all(
            (m[k] == m2[k]) if k + 1 not in s2 else m[k] >= m2[k] for k in range(n))

    return {p for p in pairs if not any(q != p and contained(p, q) for q in pairs)}
