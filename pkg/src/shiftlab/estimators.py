"""scikit-learn style wrappers around the shifting operations.

The algebra is not learned from data, so ``fit`` only records shapes; the
classes exist so shifting and b-triangles can sit inside a ``Pipeline`` next
to ordinary feature processing.

>>> from shiftlab.simplicial import SimplicialComplex
>>> X = [SimplicialComplex(3, [[1, 2], [3]]), SimplicialComplex(3, [[1], [2], [3]])]
>>> BTriangleVectorizer().fit_transform(X).tolist()
[[0, 0, 1, 1, 0, 0], [0, 1, 2, 0, 0, 0]]
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .config import config_context, get_config
from .errors import ContractError
from .exterior import exterior_shift
from .shifting import kalai_b_triangle, symmetric_shift
from .simplicial import SimplicialComplex, complex_from_dict, facet_b_triangle


def check_complexes(X) -> list:
    """Accept complexes or their dict form; reject anything else."""
    if isinstance(X, (SimplicialComplex, dict)):
        raise ContractError("expected a sequence of complexes, got a single complex")
    out = []
    for k, x in enumerate(X):
        if isinstance(x, SimplicialComplex):
            out.append(x)
        elif isinstance(x, dict):
            out.append(complex_from_dict(x))
        else:
            raise ContractError(f"item {k} is {type(x).__name__}, not a simplicial complex")
    return out


class _ConfigMixin:
    def _context(self):
        cfg = get_config()
        return config_context(
            attempts=cfg.attempts if self.attempts is None else self.attempts,
            base_seed=cfg.base_seed if self.base_seed is None else self.base_seed,
        )


class ShiftingTransformer(_ConfigMixin, TransformerMixin, BaseEstimator):
    """Replace each complex by its symmetric or exterior shift.

    Parameters
    ----------
    kind : {"symmetric", "exterior"}
    attempts, base_seed : optional overrides of the session configuration.
    """

    def __init__(self, kind: str = "symmetric", attempts=None, base_seed=None):
        self.kind = kind
        self.attempts = attempts
        self.base_seed = base_seed

    def fit(self, X, y=None):
        if self.kind not in ("symmetric", "exterior"):
            raise ContractError(f"unknown kind {self.kind!r}")
        self.n_complexes_ = len(check_complexes(X))
        return self

    def transform(self, X):
        check_is_fitted(self, "n_complexes_")
        shift = symmetric_shift if self.kind == "symmetric" else exterior_shift
        with self._context():
            return [shift(K) for K in check_complexes(X)]


class BTriangleVectorizer(_ConfigMixin, TransformerMixin, BaseEstimator):
    """Flatten b-triangles into fixed-length integer feature rows.

    ``fit`` fixes the number of rows (largest facet size seen, or
    ``max_size``); ``transform`` pads smaller triangles with zeros and
    rejects larger ones.
    """

    def __init__(self, flavor: str = "symmetric", max_size=None, attempts=None, base_seed=None):
        self.flavor = flavor
        self.max_size = max_size
        self.attempts = attempts
        self.base_seed = base_seed

    def _triangle(self, K):
        if self.flavor == "symmetric":
            return facet_b_triangle(symmetric_shift(K))
        if self.flavor == "exterior":
            return facet_b_triangle(exterior_shift(K), "exterior")
        if self.flavor == "kalai":
            return kalai_b_triangle(K)
        raise ContractError(f"unknown flavor {self.flavor!r}")

    def fit(self, X, y=None):
        Ks = check_complexes(X)
        if self.max_size is not None:
            size = int(self.max_size)
        else:
            size = max((K.dim + 1 for K in Ks if not K.is_void), default=0)
        self.size_ = size
        self.n_features_out_ = (size + 1) * (size + 2) // 2
        return self

    def transform(self, X):
        check_is_fitted(self, "size_")
        Ks = check_complexes(X)
        rows = np.zeros((len(Ks), self.n_features_out_), dtype=np.int64)
        with self._context():
            for k, K in enumerate(Ks):
                if K.is_void:
                    continue
                if K.dim + 1 > self.size_:
                    raise ContractError(f"complex {k} has facets of size {K.dim + 1} > fitted size {self.size_}")
                b = self._triangle(K)
                col = 0
                for i in range(self.size_ + 1):
                    for r in range(i + 1):
                        rows[k, col] = b[i, r]
                        col += 1
        return rows

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "size_")
        return np.array([f"b[{i},{r}]" for i in range(self.size_ + 1) for r in range(i + 1)], dtype=object)
