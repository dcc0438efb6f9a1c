import numpy as np
import pytest

from shiftlab.errors import ConsistencyError, ContractError, UncertifiedGinError
from shiftlab.groebner import gin_ideal
from shiftlab.monomial_ideals import MonomialIdeal, betti_squarefree_strongly_stable
from shiftlab.shifting import (
    ShiftCache,
    a_sets,
    b_triangle,
    c_sets,
    chain_property,
    check_c_decomposition,
    conjecture_scan,
    degrees_vs_btriangle,
    dual_shift_betti_prediction,
    extremal_betti,
    iterated_betti_ideal,
    kalai_b_triangle,
    monomial_b_triangle,
    shift_from_gin,
    symmetric_shift,
)
from shiftlab.simplicial import SimplicialComplex, alexander_dual, all_complexes, is_buchsbaum, random_complex

import worked_examples


# -- the example complex -----------------------------------------------------------------

def test_symmetric_shift_of_example(ex_complex):
    D = symmetric_shift(ex_complex)
    assert set(D.facets) == set(worked_examples.EX_SHIFTED_FACETS)
    assert set(D.stanley_reisner_ideal().gens) == worked_examples.EX_SHIFTED_SR


def test_b_triangle_of_example(ex_complex):
    assert b_triangle(ex_complex).rows() == worked_examples.EX_B_TRIANGLE


def test_a_sets_of_example(ex_complex):
    A = monomial_b_triangle(ex_complex)
    assert {k: set(v) for k, v in A.sets.items()} == worked_examples.EX_A_SETS


def test_kalai_formula_disagrees_with_facet_count_off_the_diagonal(ex_complex):
    b = b_triangle(ex_complex)
    k = kalai_b_triangle(ex_complex)
    assert k.rows()[3] == (1, 4, 10, 1)
    assert b[3, 2] == 8 and k[3, 2] == 10
    assert k.diagonal() == b.diagonal()
    assert list(b.diagonal()) == worked_examples.EX_REDUCED_BETTI


def test_extremal_betti_of_example(ex_complex):
    E = extremal_betti(ex_complex)
    assert E.as_betti() == worked_examples.EX_EXTREMAL
    assert E.as_btriangle() == worked_examples.EX_EXTREMAL_CELLS


def test_degrees_of_example(ex_complex):
    rep = degrees_vs_btriangle(ex_complex)
    assert rep.ok
    assert rep.multiplicities == worked_examples.EX_MULT
    assert rep.degree == worked_examples.EX_DEGREE and rep.arithdeg == worked_examples.EX_ARITHDEG
    assert rep.facet_counts == {3: 14, 2: 2}


def test_dual_prediction_on_example(ex_complex):
    b = b_triangle(ex_complex)
    D = symmetric_shift(alexander_dual(ex_complex))
    assert betti_squarefree_strongly_stable(D.stanley_reisner_ideal()) == dual_shift_betti_prediction(b, 7)


# -- the example ideal ------------------------------------------------------------------

def test_a_sets_of_ex2(ex2_input):
    A = monomial_b_triangle(ex2_input.generators)
    for i, want in worked_examples.EX2_A.items():
        assert set(A.A(i)) == want


def test_iterated_betti_of_ex2(ex2_input):
    b = iterated_betti_ideal(ex2_input.generators)
    assert [b.row_sum(i) for i in range(3)] == [9, 5, 2]
    assert b.rows()[0] == (0, 0, 0, 0, 1, 2, 3, 2, 1)
    assert b.rows()[2][:2] == (1, 1)


def cone(m, sigma, n, D):
    from shiftlab.algebra import monomials_of_degree
    out = set()
    for d in range(D + 1):
        for q in monomials_of_degree(n, d):
            if all(q[k] == 0 for k in range(n) if k + 1 not in sigma):
                p = tuple(a + b for a, b in zip(m, q))
                if sum(p) <= D:
                    out.add(p)
    return out


def test_c_sets_of_ex2_at_truncation():
    G = MonomialIdeal(3, worked_examples.EX2_GIN)
    D = worked_examples.EX2_TRUNCATION
    A, C = c_sets(G, D)
    for i, cones in worked_examples.EX2_C_CONES.items():
        want = set().union(*[cone(m, s, 3, D) for m, s in cones]) if cones else set()
        assert C[i] == want, i
    assert check_c_decomposition(G, D) == []


def test_degrees_of_ex2(ex2_input):
    rep = degrees_vs_btriangle(ex2_input.generators)
    assert rep.multiplicities == worked_examples.EX2_MULT
    assert rep.arithdeg == worked_examples.EX2_ARITHDEG


# -- general behaviour --------------------------------------------------------------------

def test_small_shifts():
    assert symmetric_shift(SimplicialComplex(3, [[1], [2], [3]])).facets == ((1,), (2,), (3,))
    assert symmetric_shift(SimplicialComplex(3, [[1, 3], [2]])).facets == ((1, 2), (3,))
    assert symmetric_shift(SimplicialComplex(4, [[1, 2], [3, 4]])).facets == ((1, 2), (1, 3), (4,))
    with pytest.raises(ContractError):
        symmetric_shift(SimplicialComplex.void(3))


def test_shifts_of_all_small_complexes(shift_cache):
    for n in range(1, 5):
        for K in all_complexes(n):
            D = shift_cache.symmetric(K)
            assert D.is_shifted() and D.f_vector == K.f_vector
            if K.is_shifted():
                assert D == K


def test_shift_is_isomorphism_invariant():
    K = SimplicialComplex(5, [[1, 2, 5], [2, 3], [4]])
    L = K.relabel([5, 4, 3, 2, 1])
    assert symmetric_shift(K) == symmetric_shift(L)


def test_shift_from_gin_rejects_nonsense():
    with pytest.raises(ConsistencyError):
        shift_from_gin(MonomialIdeal(3, [(3, 0, 0)]))


def test_a_sets_need_initial_segments():
    with pytest.raises(ConsistencyError):
        a_sets(MonomialIdeal(2, [(1, 0)]))


def test_chain_property(ex_complex, shift_cache):
    assert chain_property(ex_complex)
    # a triangle plus an isolated vertex: sizes 3 and 1 but no 2
    assert not chain_property(SimplicialComplex(4, [[1, 2, 3], [4]]))
    assert chain_property(SimplicialComplex.simplex(3))
    rng = np.random.default_rng(8)
    seen = 0
    for _ in range(60):
        K = random_complex(6, rng, max_facets=6, min_size=2, max_size=2)
        if is_buchsbaum(K):
            seen += 1
            assert chain_property(K, shift_cache.symmetric(K))
    assert seen > 5


def test_shifted_complex_is_fixed_and_its_gin_is_strongly_stable():
    K = SimplicialComplex(7, worked_examples.EX_SHIFTED_FACETS)
    assert symmetric_shift(K) == K
    assert gin_ideal(K.stanley_reisner_ideal()).is_strongly_stable()


# -- retries and the scan ---------------------------------------------------------------

UNLUCKY = alexander_dual(SimplicialComplex(7, [[1, 2, 3], [2, 3, 7], [3, 4, 5], [6]]))


def test_uncertified_shift_raises_without_retry():
    with pytest.raises(UncertifiedGinError):
        symmetric_shift(UNLUCKY)


def test_cache_retries_with_fresh_seeds():
    cache = ShiftCache()
    D = cache.symmetric(UNLUCKY)
    assert cache.retried == 1
    assert D.is_shifted() and D.f_vector == UNLUCKY.f_vector
    with pytest.raises(UncertifiedGinError):
        ShiftCache(retries=0).symmetric(UNLUCKY)


def test_scan_on_three_vertices():
    rep = conjecture_scan({"n": 3, "exhaustive": True})
    assert len(rep.records) == 19
    assert rep.violations == 0 and rep.uncertified == 0
    assert rep.shifted_checked > 0 and rep.shifted_failures == 0


def test_scan_is_deterministic():
    spec = {"n": 5, "samples": 5, "seed": 3}
    assert conjecture_scan(spec).to_dict() == conjecture_scan(spec).to_dict()
