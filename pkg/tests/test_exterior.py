import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from shiftlab.errors import ContractError, DimensionError
from shiftlab.exterior import ExteriorElement, exterior_b_triangle, exterior_shift, revlex_subsets, wedge
from shiftlab.field import GF
from shiftlab.simplicial import SimplicialComplex, face_of, random_complex, reduced_homology_dims

import oracles
import worked_examples

F = GF(32003)


def e(support, n=4, c=1):
    return ExteriorElement.monomial(support, n, c, F)


def test_wedge_of_basis_elements():
    assert wedge(e((1,)), e((2,))) == e((1, 2))
    assert wedge(e((2,)), e((1,))) == e((1, 2), c=-1)
    assert wedge(e((1, 3)), e((2,))) == e((1, 2, 3), c=-1)
    assert wedge(e((1, 2)), e((2, 4))).is_zero()


def test_square_of_a_linear_form_vanishes():
    s = e((1,)) + e((2,))
    assert (s ^ s).is_zero()


def test_unit_is_neutral():
    one = e(())
    x = e((1, 3)) + e((2,), c=5)
    assert (one ^ x) == x == (x ^ one)


def test_bad_supports():
    with pytest.raises(ContractError):
        e((2, 1))
    with pytest.raises(DimensionError):
        e((5,))
    with pytest.raises(DimensionError):
        e((1,), 3) ^ e((1,), 4)


elements = st.dictionaries(st.integers(0, 15), st.integers(-20, 20), max_size=4).map(
    lambda t: ExteriorElement(t, 4, F))


@given(elements, elements, elements)
@settings(max_examples=50, deadline=None)
def test_algebra_laws(a, b, c):
    assert ((a ^ b) ^ c) == (a ^ (b ^ c))
    assert (a ^ (b + c)) == (a ^ b) + (a ^ c)


@given(st.integers(1, 4), st.integers(1, 4))
def test_graded_commutativity(i, j):
    x = e(tuple(range(1, i + 1)), 8)
    y = e(tuple(range(5, 5 + j)), 8)
    sign = (-1) ** (i * j)
    assert (y ^ x) == (x ^ y if sign == 1 else -(x ^ y))


def test_revlex_subsets_order():
    got = [face_of(m) for m in revlex_subsets(4, 2)]
    assert got[0] == (3, 4) and got[-1] == (1, 2)
    assert len(got) == 6


# -- shifting ---------------------------------------------------------------------

def test_two_disjoint_edges():
    assert exterior_shift(SimplicialComplex(4, [[1, 2], [3, 4]])).facets == ((1, 2), (1, 3), (4,))


def test_fixed_points():
    for K in (SimplicialComplex.simplex(4), SimplicialComplex(4, [[1, 2, 3], [1, 4]]),
              SimplicialComplex(3, [[1], [2], [3]]), SimplicialComplex.empty(3)):
        assert K.is_shifted()
        assert exterior_shift(K) == K


def test_void_and_torus(ex_complex):
    assert exterior_shift(SimplicialComplex.void(3)).is_void
    D = exterior_shift(ex_complex)
    assert D.is_shifted() and D.f_vector == ex_complex.f_vector


def test_against_minor_oracle():
    rng = np.random.default_rng(11)
    for _ in range(10):
        n = int(rng.integers(3, 6))
        K = random_complex(n, rng, max_facets=4)
        u = oracles.integer_matrix(n, rng)
        want = oracles.exterior_shift_oracle(n, K.facets, u)
        D = exterior_shift(K)
        got = set(oracles.faces_of(D.facets))
        assert got == want, K


def test_exterior_diagonal_is_homology():
    rng = np.random.default_rng(5)
    for _ in range(10):
        K = random_complex(int(rng.integers(3, 7)), rng, max_facets=5)
        b = exterior_b_triangle(K)
        h = reduced_homology_dims(K)
        assert list(b.diagonal()) == h + [0] * (len(b.diagonal()) - len(h))


def test_exterior_triangle_of_example(ex_complex):
    b = exterior_b_triangle(ex_complex)
    assert list(b.diagonal()) == worked_examples.EX_REDUCED_BETTI
