"""Exact coefficient fields: prime fields F_p and the rationals.

Elements are plain Python numbers (``int`` reduced into ``[0, p)`` for F_p,
``fractions.Fraction`` for Q); a field object supplies the arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .config import is_prime
from .errors import ContractError


class PrimeField:
    """The field with ``p`` elements."""

    rational = False

    def __init__(self, p: int):
        if not (is_prime(p) and p > 2):
            raise ContractError(f"p must be an odd prime, got {p}")
        self.p = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            return self.div(value.numerator, value.denominator)
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def random_nonzero(self, rng) -> int:
        return int(rng.integers(1, self.p))

    def to_int(self, a) -> int:
        """Symmetric representative in ``(-p/2, p/2]``."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a

    def format(self, a) -> str:
        return str(self.to_int(a))


class RationalField:
    """The rational numbers, via :class:`fractions.Fraction`."""

    rational = True
    p = 0
    #: half-width of the integer range sampled by :meth:`random_nonzero`
    sample_bound = 1000

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def random_nonzero(self, rng) -> Fraction:
        b = self.sample_bound
        v = int(rng.integers(1, 2 * b + 1))
        return Fraction(v if v <= b else b - v)

    def format(self, a) -> str:
        return str(a)


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


QQ = RationalField()
