"""Session-wide configuration (coefficient field, seeds, attempts).

Modelled on ``sklearn.config_context``: a module-level default that can be
overridden temporarily with :func:`config_context`.
"""

from __future__ import annotations

import os
import threading
from contextlib import contextmanager
from dataclasses import dataclass, replace

from .errors import ContractError

DEFAULT_PRIME = 32003
DEFAULT_SEED = 0xC0FFEE
DEFAULT_ATTEMPTS = 3


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class SessionConfig:
    """Parameters shared by all computations of a session.

    Parameters
    ----------
    prime : int
        Characteristic of the coefficient field when ``rational`` is False.
    rational : bool
        Compute over the rationals (slow certification mode).
    base_seed : int
        Root of every random coordinate change.
    attempts : int
        Number of independent coordinate changes used to certify a Gin.
    degree_bound : int or None
        Overrides the degree truncation used for B(I) and C_i windows.
    """

    prime: int = DEFAULT_PRIME
    rational: bool = False
    base_seed: int = DEFAULT_SEED
    attempts: int = DEFAULT_ATTEMPTS
    degree_bound: int | None = None

    def __post_init__(self):
        if not self.rational and not (is_prime(self.prime) and self.prime > 2):
            raise ContractError(f"prime must be an odd prime, got {self.prime}")
        if self.attempts < 2:
            raise ContractError(f"attempts must be at least 2, got {self.attempts}")
        if self.degree_bound is not None and self.degree_bound < 0:
            raise ContractError("degree_bound must be non-negative")

    @property
    def field(self):
        from .field import GF, QQ

        return QQ if self.rational else GF(self.prime)


def _initial_config() -> SessionConfig:
    env = os.environ.get("SHIFTLAB_PRIME")
    if env:
        return SessionConfig(prime=int(env))
    return SessionConfig()


_local = threading.local()
_global_config = _initial_config()


def get_config() -> SessionConfig:
    return getattr(_local, "config", _global_config)


def set_config(**changes) -> SessionConfig:
    """Replace the active configuration for the current thread."""
    _local.config = replace(get_config(), **changes)
    return _local.config


@contextmanager
def config_context(**changes):
    """Temporarily override configuration fields.

    >>> with config_context(prime=101):
    ...     get_config().prime
    101
    """
    old = get_config()
    _local.config = replace(old, **changes)
    try:
        yield _local.config
    finally:
        _local.config = old
