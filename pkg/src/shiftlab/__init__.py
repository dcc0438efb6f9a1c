"""Algebraic shifting, generic initial ideals and iterated Betti numbers.

The most used entry points are re-exported here; the scikit-learn wrappers
live in :mod:`shiftlab.estimators` and are not imported eagerly.
"""

from .algebra import Polynomial, apply_linear_map, parse_polynomial, random_generic_matrix, revlex_compare
from .config import SessionConfig, config_context, get_config, set_config
from .errors import (
    ConsistencyError,
    ContractError,
    DimensionError,
    ParseError,
    RandomnessError,
    RangeError,
    ShiftlabError,
    UncertifiedGinError,
)
from .exterior import ExteriorElement, exterior_b_triangle, exterior_shift, wedge
from .field import GF, QQ
from .groebner import GroebnerBasis, buchberger, gin, gin_ideal, initial_ideal, normal_form
from .monomial_ideals import (
    BettiTable,
    MonomialIdeal,
    StandardPair,
    betti_squarefree_strongly_stable,
    degree_report,
    hochster_betti,
    phi,
    phi_inverse,
    standard_pairs,
)
from .shifting import (
    ShiftCache,
    b_triangle,
    chain_property,
    conjecture_scan,
    degrees_vs_btriangle,
    extremal_betti,
    iterated_betti_ideal,
    kalai_b_triangle,
    monomial_b_triangle,
    symmetric_shift,
)
from .simplicial import (
    BTriangle,
    SimplicialComplex,
    alexander_dual,
    f_triangle,
    h_triangle,
    load_complex,
    parse_complex,
    reduced_homology_dims,
)

__version__ = "0.1.0"

__all__ = [
    "BTriangle",
    "BettiTable",
    "ConsistencyError",
    "ContractError",
    "DimensionError",
    "ExteriorElement",
    "GF",
    "GroebnerBasis",
    "MonomialIdeal",
    "ParseError",
    "Polynomial",
    "QQ",
    "RandomnessError",
    "RangeError",
    "SessionConfig",
    "ShiftCache",
    "ShiftlabError",
    "SimplicialComplex",
    "StandardPair",
    "UncertifiedGinError",
    "alexander_dual",
    "apply_linear_map",
    "b_triangle",
    "betti_squarefree_strongly_stable",
    "buchberger",
    "chain_property",
    "config_context",
    "conjecture_scan",
    "degree_report",
    "degrees_vs_btriangle",
    "exterior_b_triangle",
    "exterior_shift",
    "extremal_betti",
    "f_triangle",
    "get_config",
    "gin",
    "gin_ideal",
    "h_triangle",
    "hochster_betti",
    "initial_ideal",
    "iterated_betti_ideal",
    "kalai_b_triangle",
    "load_complex",
    "monomial_b_triangle",
    "normal_form",
    "parse_complex",
    "parse_polynomial",
    "phi",
    "phi_inverse",
    "random_generic_matrix",
    "reduced_homology_dims",
    "revlex_compare",
    "set_config",
    "standard_pairs",
    "symmetric_shift",
    "wedge",
]
