import math
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hook_syzygy.exact_algebra import (
    GF, QQ, ZZ, CoefficientRing, Monomial, Polynomial, PolynomialMatrix, SparseMatrix,
    count_monomials, elementary_symmetric, hilbert_function_squarefree_ideal,
    matrix_rank_over_field, monomials_of_degree, smith_normal_form,
)
from reference_data import PHI23


# --- coefficient rings ------------------------------------------------------

def test_ring_parsing_and_names():
    assert CoefficientRing.parse("QQ") == QQ
    assert CoefficientRing.parse("ZZ") == ZZ
    assert CoefficientRing.parse("Zp:7") == GF(7)
    assert CoefficientRing.parse("Z2") == GF(2)
    assert str(GF(3)) == "Zp:3"
    assert not ZZ.is_field and QQ.is_field and GF(5).is_field


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 91])
def test_prime_field_rejects_composite(bad):
    with pytest.raises(ValueError):
        GF(bad)


def test_characteristic_collision():
    with pytest.raises(ArithmeticError):
        GF(3)(Fraction(1, 6))
    M = SparseMatrix(1, 1, {(0, 0): Fraction(1, 2)}, QQ)
    with pytest.raises(ArithmeticError):
        matrix_rank_over_field(M.change_ring(GF(2)), GF(2))
    assert GF(5)(Fraction(1, 2)) == 3


# --- polynomials --------------------------------------------------------------

def test_elementary_symmetric_examples():
    assert str(elementary_symmetric(1, 4)) == "x1 + x2 + x3 + x4"
    assert elementary_symmetric(0, 3) == Polynomial.constant(1, 3)
    e = elementary_symmetric(2, 3)
    expected = {Monomial.from_support(s, 3) for s in combinations((1, 2, 3), 2)}
    assert set(e.terms) == expected and len(e.terms) == 3
    with pytest.raises(ValueError):
        elementary_symmetric(4, 3)


@pytest.mark.parametrize("n", range(0, 7))
def test_elementary_symmetric_evaluates_to_binomial(n):
    for k in range(n + 1):
        e = elementary_symmetric(k, n)
        assert e.evaluate([1] * n) == math.comb(n, k)
        assert all(m.is_squarefree and m.degree == k for m in e.terms)
        assert set(e.terms.values()) <= {1}


@given(st.integers(1, 5), st.integers(0, 6), st.data())
def test_hilbert_function_matches_enumeration(n, t, data):
    d = data.draw(st.integers(1, n))
    assert hilbert_function_squarefree_ideal(d, n, t) == oracles.brute_hilbert_ideal(d, n, t)


def test_hilbert_function_examples():
    assert hilbert_function_squarefree_ideal(2, 4, 2) == 6
    assert hilbert_function_squarefree_ideal(2, 4, 3) == 16
    assert all(hilbert_function_squarefree_ideal(4, 6, t) == 0 for t in range(4))


def test_monomial_enumeration_counts():
    for n in range(1, 6):
        for t in range(6):
            ms = monomials_of_degree(n, t)
            assert len(ms) == len(set(ms)) == count_monomials(n, t) == math.comb(n + t - 1, t)


poly_terms = st.dictionaries(
    st.lists(st.integers(0, 2), min_size=3, max_size=3).map(tuple),
    st.integers(-5, 5), max_size=5)


def _poly(terms):
    return Polynomial(3, {Monomial(e): c for e, c in terms.items()})


@given(poly_terms, poly_terms, poly_terms)
def test_polynomial_ring_axioms(a, b, c):
    p, q, r = _poly(a), _poly(b), _poly(c)
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p - p == Polynomial.zero(3)
    assert all(v != 0 for v in (p * q).terms.values())


@given(poly_terms)
def test_polynomial_text_round_trip(a):
    p = _poly(a)
    assert Polynomial.parse(str(p), 3) == p


def test_polynomial_relabel_and_signed_variable():
    p = Polynomial.parse("x1*x2^2 - 3*x3", 3)
    assert str(p.relabel((4, 1, 2), 4)) == "x1^2*x4 - 3*x2"
    assert Polynomial.parse("-x2", 3).as_signed_variable() == (-1, 2)
    assert Polynomial.parse("x1 + x2", 3).as_signed_variable() is None
    assert Polynomial.parse("2*x1", 3).as_signed_variable() is None


def test_polynomial_matrix_product():
    n = 2
    x = lambda v: Polynomial.variable(v, n)  # noqa: E731
    A = PolynomialMatrix(1, 2, n, {(0, 0): x(1), (0, 1): x(2)})
    B = PolynomialMatrix(2, 1, n, {(0, 0): x(2), (1, 0): -x(1)})
    assert (A @ B).is_zero()


# --- rank and Smith form ------------------------------------------------------

def test_rank_trivial_cases():
    assert matrix_rank_over_field(SparseMatrix.zero(4, 7), QQ) == 0
    assert matrix_rank_over_field(SparseMatrix.identity(5), QQ) == 5
    assert matrix_rank_over_field(SparseMatrix.identity(5), GF(2)) == 5
    with pytest.raises(ValueError):
        matrix_rank_over_field(SparseMatrix.identity(2), ZZ)


def test_rank_and_smith_of_displayed_slice():
    M = SparseMatrix.from_dense(PHI23)
    assert matrix_rank_over_field(M, QQ) == 2
    assert smith_normal_form(M) == [1, 1]
    assert oracles.sympy_invariant_factors(PHI23) == [1, 1]


def test_smith_examples():
    assert smith_normal_form(SparseMatrix.identity(3)) == [1, 1, 1]
    assert smith_normal_form(SparseMatrix.from_dense([[2, 0], [0, 3]])) == [1, 6]
    assert smith_normal_form(SparseMatrix.from_dense([[2, 0], [0, 4]])) == [2, 4]
    assert smith_normal_form(SparseMatrix.zero(3, 3)) == []


def _random_sparse(rng, rows, cols, density, lo=-3, hi=3):
    dense = [[0] * cols for _ in range(rows)]
    for r in range(rows):
        for c in range(cols):
            if rng.random() < density:
                dense[r][c] = rng.randint(lo, hi)
    return dense


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 30), st.integers(1, 30),
       st.floats(0.05, 0.5))
def test_rank_agrees_with_smith_and_sympy(seed, rows, cols, density):
    rng = random.Random(seed)
    dense = _random_sparse(rng, rows, cols, density)
    M = SparseMatrix.from_dense(dense)
    r = matrix_rank_over_field(M, QQ)
    factors = smith_normal_form(M)
    assert r == len(factors) == oracles.sympy_rank(dense)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 12), st.integers(1, 12))
def test_smith_matches_sympy(seed, rows, cols):
    rng = random.Random(seed)
    dense = _random_sparse(rng, rows, cols, 0.4, -6, 6)
    assert smith_normal_form(SparseMatrix.from_dense(dense)) == oracles.sympy_invariant_factors(dense)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([2, 3, 5]))
def test_rank_mod_p_matches_sympy(seed, p):
    rng = random.Random(seed)
    dense = _random_sparse(rng, rng.randint(1, 15), rng.randint(1, 15), 0.3)
    M = SparseMatrix.from_dense(dense)
    assert matrix_rank_over_field(M, GF(p)) == oracles.sympy_rank(dense, p)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_rank_invariant_under_permutation(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 20), rng.randint(1, 20)
    M = SparseMatrix.from_dense(_random_sparse(rng, rows, cols, 0.25))
    rp, cp = list(range(rows)), list(range(cols))
    rng.shuffle(rp)
    rng.shuffle(cp)
    P = M.permuted(rp, cp)
    for f in (QQ, GF(2), GF(3)):
        assert matrix_rank_over_field(P, f) == matrix_rank_over_field(M, f)


def test_rank_over_rationals_with_fractions():
    M = SparseMatrix(2, 2, {(0, 0): Fraction(1, 2), (0, 1): Fraction(1, 3),
                            (1, 0): Fraction(3, 2), (1, 1): 1}, QQ)
    assert matrix_rank_over_field(M, QQ) == 1


def test_characteristic_dependence_is_detected():
    M = SparseMatrix.from_dense([[2, 0], [0, 1]])
    assert matrix_rank_over_field(M, QQ) == 2
    assert matrix_rank_over_field(M, GF(2)) == 1
    assert smith_normal_form(M) == [1, 2]
