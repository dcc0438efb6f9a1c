"""Monomials, the reverse lexicographic order, polynomials and coordinate changes.

Monomials are tuples of non-negative exponents; entry ``k`` is the exponent of
``y_{k+1}``.  Variables are 1-indexed in every public interface and ``y_n`` is
the largest variable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from itertools import combinations_with_replacement
from math import comb

import numpy as np

from .config import get_config
from .errors import ContractError, DimensionError, ParseError, RandomnessError
from .linalg import determinant, inverse

Monomial = tuple

LESS, EQUAL, GREATER = -1, 0, 1


# -- monomials ---------------------------------------------------------------

def degree(m: Monomial) -> int:
    return sum(m)


def support(m: Monomial) -> frozenset:
    """1-based indices of the variables dividing ``m``."""
    return frozenset(k + 1 for k, e in enumerate(m) if e)


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(i: int, n: int) -> Monomial:
    """The monomial ``y_i`` (1-based)."""
    if not 1 <= i <= n:
        raise DimensionError(f"variable index {i} outside [1, {n}]")
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def from_support(indices, n: int) -> Monomial:
    """Squarefree monomial ``y^A`` for a set ``A`` of 1-based indices."""
    s = set(indices)
    return tuple(1 if k + 1 in s else 0 for k in range(n))


def revlex_key(m: Monomial):
    """Sort key: larger key means larger in the degree-revlex order."""
    return (sum(m), tuple(-e for e in m))


def revlex_compare(a: Monomial, b: Monomial) -> int:
    """Compare under degree-revlex with ``y_n > ... > y_1``.

    Higher degree wins; otherwise the monomial with the smaller exponent at
    the first index where they differ is larger.

    >>> revlex_compare((0, 1), (1, 0))
    1
    """
    if len(a) != len(b):
        raise DimensionError(f"monomials over {len(a)} and {len(b)} variables")
    ka, kb = revlex_key(a), revlex_key(b)
    return GREATER if ka > kb else LESS if ka < kb else EQUAL


def monomials_of_degree(n: int, d: int) -> list:
    """All degree-``d`` monomials in ``n`` variables, largest first."""
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    out.sort(key=revlex_key, reverse=True)
    return out


def count_monomials(n: int, d: int) -> int:
    return comb(n + d - 1, d) if d >= 0 else 0


# -- polynomials -------------------------------------------------------------

class Polynomial:
    """Sparse polynomial over an exact field.

    ``terms`` maps exponent tuples to nonzero field elements.  Instances are
    treated as immutable.
    """

    __slots__ = ("n", "field", "terms")

    def __init__(self, terms, n: int, field=None):
        self.n = n
        self.field = field if field is not None else get_config().field
        clean = {}
        for m, c in dict(terms).items():
            if len(m) != n:
                raise DimensionError(f"monomial {m} does not have {n} exponents")
            c = self.field(c)
            if not self.field.is_zero(c):
                clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms, n, field):
        p = cls.__new__(cls)
        p.n, p.field, p.terms = n, field, terms
        return p

    @classmethod
    def monomial(cls, m, coeff=1, field=None):
        return cls({tuple(m): coeff}, len(m), field)

    @classmethod
    def var(cls, i, n, field=None):
        return cls.monomial(variable(i, n), 1, field)

    @classmethod
    def constant(cls, c, n, field=None):
        return cls({unit(n): c}, n, field)

    @classmethod
    def zero(cls, n, field=None):
        return cls({}, n, field)

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial.constant(other, self.n, self.field)
        if other.n != self.n:
            raise DimensionError(f"polynomials over {self.n} and {other.n} variables")
        if other.field != self.field:
            raise ContractError(f"polynomials over {self.field} and {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        F = self.field
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = F.add(t.get(m, F.zero), c)
            if F.is_zero(v):
                t.pop(m, None)
            else:
                t[m] = v
        return Polynomial._raw(t, self.n, F)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Polynomial._raw({m: F.neg(c) for m, c in self.terms.items()}, self.n, F)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c):
        F = self.field
        c = F(c)
        if F.is_zero(c):
            return Polynomial.zero(self.n, F)
        return Polynomial._raw({m: F.mul(c, v) for m, v in self.terms.items()}, self.n, F)

    def shift(self, m: Monomial):
        """Multiply by a monomial."""
        return Polynomial._raw({mono_mul(k, m): v for k, v in self.terms.items()}, self.n, self.field)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        F = self.field
        t = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                m = mono_mul(a, b)
                t[m] = F.add(t.get(m, F.zero), F.mul(ca, cb))
        return Polynomial._raw({m: c for m, c in t.items() if not F.is_zero(c)}, self.n, F)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ContractError("negative power")
        result = Polynomial.constant(1, self.n, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.field == other.field and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_components(self) -> dict:
        comps = {}
        for m, c in self.terms.items():
            comps.setdefault(sum(m), {})[m] = c
        return {d: Polynomial._raw(t, self.n, self.field) for d, t in comps.items()}

    def sorted_terms(self):
        """Terms from largest to smallest monomial."""
        return sorted(self.terms.items(), key=lambda t: revlex_key(t[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ContractError("zero polynomial has no leading term")
        return max(self.terms, key=revlex_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def monic(self):
        return self.scale(self.field.inv(self.leading_coefficient()))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, n={self.n}, field={self.field!r})"

    def __str__(self):
        return format_polynomial(self)


# -- text grammar ------------------------------------------------------------

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def default_names(n: int) -> list:
    return [f"y{i}" for i in range(1, n + 1)]


def letter_names(n: int) -> list:
    if n > len(LETTERS):
        raise ContractError(f"only {len(LETTERS)} single-letter variables available")
    return list(LETTERS[:n])


def format_monomial(m: Monomial, names=None) -> str:
    names = names or default_names(len(m))
    parts = []
    for k in range(len(m) - 1, -1, -1):
        if m[k] == 1:
            parts.append(names[k])
        elif m[k] > 1:
            parts.append(f"{names[k]}^{m[k]}")
    return "*".join(parts) if parts else "1"


def format_polynomial(f: Polynomial, names=None) -> str:
    """Canonical text: terms largest first, variables in decreasing index."""
    if f.is_zero():
        return "0"
    names = names or default_names(f.n)
    F = f.field
    out = []
    for m, c in f.sorted_terms():
        s = F.format(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        body = format_monomial(m, names)
        if body == "1":
            term = s
        elif s == "1":
            term = body
        else:
            term = f"{s}*{body}"
        if out:
            out.append(("-" if neg else "+") + term)
        else:
            out.append(("-" if neg else "") + term)
    return "".join(out)


_COEFF = re.compile(r"\d+(?:/\d+)?")
_INDEXED = re.compile(r"y(\d+)")


def _infer_names(text: str, n: int | None):
    idx = [int(k) for k in _INDEXED.findall(text)]
    if idx:
        return default_names(n if n is not None else max(idx))
    used = [LETTERS.index(ch) + 1 for ch in text if ch in LETTERS]
    return letter_names(n if n is not None else max(used, default=0))


def parse_polynomial(text: str, names=None, n: int | None = None, field=None, line: int = 1) -> Polynomial:
    """Parse the ``[coeff][*]var^exp...`` grammar.

    Without ``names``, ``y1..yn`` are recognised when present; otherwise the
    single letters ``a..z`` stand for ``y_1..y_26`` in order.

    >>> format_polynomial(parse_polynomial("z^6-5z^4y^2", names=["x", "y", "z"]), ["x", "y", "z"])
    'z^6-5*z^4*y^2'
    """
    if names is None:
        names = _infer_names(text, n)
    names = list(names)
    nv = len(names)
    if n is not None and n != nv:
        raise DimensionError(f"{nv} variable names for n={n}")
    field = field if field is not None else get_config().field
    by_len = sorted(range(nv), key=lambda k: -len(names[k]))
    s = text
    pos = 0
    terms = {}

    def err(msg):
        raise ParseError(msg, line, pos + 1)

    def skip():
        nonlocal pos
        while pos < len(s) and s[pos] in " \t":
            pos += 1

    def match_var():
        for k in by_len:
            nm = names[k]
            if s.startswith(nm, pos):
                end = pos + len(nm)
                # y1 must not swallow the prefix of y12
                if nm[-1].isdigit() and end < len(s) and s[end].isdigit():
                    continue
                return k, end
        return None

    skip()
    if pos == len(s):
        err("empty polynomial")
    first = True
    while True:
        skip()
        sign = 1
        if pos < len(s) and s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
            skip()
        elif not first:
            err(f"expected '+' or '-' but found {s[pos]!r}")
        first = False
        coeff = None
        mc = _COEFF.match(s, pos)
        if mc:
            from fractions import Fraction

            coeff = Fraction(mc.group())
            pos = mc.end()
            skip()
            if pos < len(s) and s[pos] == "*":
                pos += 1
                skip()
        exps = [0] * nv
        nfac = 0
        while pos < len(s):
            mv = match_var()
            if mv is None:
                break
            k, pos = mv
            e = 1
            skip()
            if pos < len(s) and s[pos] == "^":
                pos += 1
                skip()
                me = re.compile(r"\d+").match(s, pos)
                if not me:
                    err("expected exponent after '^'")
                e = int(me.group())
                pos = me.end()
            exps[k] += e
            nfac += 1
            skip()
            if pos < len(s) and s[pos] == "*":
                pos += 1
                skip()
                if match_var() is None:
                    err("expected variable after '*'")
        if coeff is None and nfac == 0:
            err("expected coefficient or variable")
        c = field(sign * (coeff if coeff is not None else 1))
        m = tuple(exps)
        terms[m] = field.add(terms.get(m, field.zero), c)
        skip()
        if pos == len(s):
            break
    return Polynomial(terms, nv, field)


# -- generic coordinate changes ---------------------------------------------

@dataclass(frozen=True)
class GenericMatrix:
    """An invertible ``n x n`` matrix acting by ``y_i -> sum_j u[i][j] y_j``."""

    entries: tuple
    field: object = dc_field(compare=False)
    seed: int | None = None

    def __post_init__(self):
        n = len(self.entries)
        if any(len(r) != n for r in self.entries):
            raise DimensionError("generic matrix must be square")
        if self.field.is_zero(determinant(self.entries, self.field)):
            raise ContractError("matrix is singular")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def inverse(self) -> "GenericMatrix":
        inv = inverse(self.entries, self.field)
        return GenericMatrix(tuple(tuple(r) for r in inv), self.field, None)

    def linear_form(self, i: int) -> Polynomial:
        """Image of ``y_i`` (1-based)."""
        n = self.n
        return Polynomial({variable(j + 1, n): self.entries[i - 1][j] for j in range(n)}, n, self.field)

    @classmethod
    def identity(cls, n, field=None):
        field = field if field is not None else get_config().field
        return cls(tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)), field)


def random_generic_matrix(n: int, seed: int, field=None) -> GenericMatrix:
    """Invertible matrix with entries drawn uniformly from the nonzero elements."""
    if n < 1:
        raise ContractError("n must be positive")
    field = field if field is not None else get_config().field
    rng = np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)
    for _ in range(100):
        entries = tuple(tuple(field.random_nonzero(rng) for _ in range(n)) for _ in range(n))
        if not field.is_zero(determinant(entries, field)):
            return GenericMatrix(entries, field, int(seed))
    raise RandomnessError(f"100 singular samples for n={n}, seed={seed}")


def apply_linear_map(u: GenericMatrix, f: Polynomial) -> Polynomial:
    """Substitute every ``y_i`` by the ``i``-th linear form of ``u``."""
    if u.n != f.n:
        raise DimensionError(f"matrix of size {u.n} applied to polynomial in {f.n} variables")
    if u.field != f.field:
        raise ContractError("matrix and polynomial live over different fields")
    forms = [u.linear_form(i) for i in range(1, f.n + 1)]
    powers = {}
    result = Polynomial.zero(f.n, f.field)
    for m, c in f.terms.items():
        term = Polynomial.constant(c, f.n, f.field)
        for k, e in enumerate(m):
            if e:
                if (k, e) not in powers:
                    powers[(k, e)] = forms[k] ** e
                term = term * powers[(k, e)]
        result = result + term
    return result
