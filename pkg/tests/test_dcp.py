import dataclasses
import math

import pytest

from hook_syzygy.dcp import (
    ClassSymbol, ConeComplex, EquivariantSeries, GrothendieckElement, HookPartition,
    UnsupportedOperationError, build_mapping_cone_resolution, cone_rank_census, dcp_generators,
    equivariant_poincare, quotient_hilbert_function, series_rank_evaluation,
    verify_dcp_resolution, verify_regular_sequence,
)
from hook_syzygy.exact_algebra import GF, QQ, Polynomial, PolynomialMatrix, elementary_symmetric
from hook_syzygy.resolution import betti_table, build_resolution


def U(i, d=2, n=4):
    return GrothendieckElement.of(ClassSymbol.U(d, n, i))


ONE = GrothendieckElement.of(ClassSymbol.unit())


def test_hook_partition():
    assert HookPartition(4, 2).mu == (3, 1)
    assert HookPartition(5, 1).mu == (5,)
    assert HookPartition(3, 3).mu == (1, 1, 1)
    with pytest.raises(ValueError):
        HookPartition(3, 4)


def test_generators():
    g = dcp_generators(4, 2)
    assert g[0] == elementary_symmetric(1, 4) and len(g) == 7
    assert all(len(p.terms) == 1 and p.degree == 2 for p in g[1:])
    assert [str(p) for p in dcp_generators(3, 1)] == ["x1", "x2", "x3"]
    assert [str(p) for p in dcp_generators(3, 3)] == \
        ["x1 + x2 + x3", "x1*x2 + x1*x3 + x2*x3", "x1*x2*x3"]


def test_series_42_term_by_term():
    s = equivariant_poincare(4, 2)
    expected = EquivariantSeries({
        (0, 0): ONE, (1, 1): ONE, (1, 2): U(0), (2, 3): U(0) + U(1),
        (3, 4): U(1) + U(2), (4, 5): U(2)})
    assert s == expected
    assert s[(2, 3)] == U(1) + U(0)
    assert series_rank_evaluation(s)[(2, 3)] == 14
    assert s[(4, 5)] == U(2)


def test_series_without_cone_factors():
    for n in range(1, 6):
        s = equivariant_poincare(n, 1)
        assert s == EquivariantSeries({(0, 0): ONE, **{(i + 1, 1 + i): U(i, 1, n) for i in range(n)}})
    assert series_rank_evaluation(EquivariantSeries.one()) == {(0, 0): 1}


def test_products_of_two_classes_are_rejected():
    with pytest.raises(UnsupportedOperationError):
        _ = U(0) * U(1)
    assert U(1) * ONE == U(1)
    with pytest.raises(ValueError):
        ClassSymbol.U(2, 4, 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_series_specialization(n):
    # classes -> ranks gives the Betti polynomial times prod (1 + q t^k)
    for d in range(1, n + 1):
        poly = {(0, 0): 1}
        for (i, j), b in betti_table(d, n).items():
            poly[(i + 1, j)] = b
        for k in range(1, d):
            nxt = {}
            for (a, b), c in poly.items():
                nxt[(a, b)] = nxt.get((a, b), 0) + c
                nxt[(a + 1, b + k)] = nxt.get((a + 1, b + k), 0) + c
            poly = nxt
        assert series_rank_evaluation(equivariant_poincare(n, d)) == poly


@pytest.mark.parametrize("n", range(1, 6))
def test_census_matches_series(n):
    for d in range(1, n + 1):
        C = build_mapping_cone_resolution(n, d)
        assert cone_rank_census(C) == series_rank_evaluation(equivariant_poincare(n, d))


def test_cone_42_blocks():
    C = build_mapping_cone_resolution(4, 2)
    F = build_resolution(2, 4)
    e1 = elementary_symmetric(1, 4)
    assert [C.rank(p) for p in range(5)] == [1, 7, 14, 11, 3]
    d1 = C.differential(1)
    assert [d1[(0, c)] for c in range(6)] == [Polynomial.monomial(m) for m in F.augmentation]
    assert d1[(0, 6)] == e1
    d2 = C.differential(2)
    for (r, c), p in F.differential(1).matrix.entries.items():
        assert d2[(r, c)] == p
    for k in range(6):
        assert d2[(k, 8 + k)] == e1
    aug = F.augmentation_matrix()
    for (_, c), p in aug.entries.items():
        assert d2[(6, 8 + c)] == -p
    d4 = C.differential(4)
    assert d4.shape == (11, 3)
    for k in range(3):
        assert d4[(k, k)] == e1
    for (r, c), p in F.differential(2).matrix.entries.items():
        assert d4[(3 + r, c)] == -p


def test_cone_43_degree_two_term():
    C = build_mapping_cone_resolution(4, 3)
    labels = [s.label() for s in C.terms[2]]
    assert sorted(labels) == sorted(["F_1", "F_0(-1)e_{1}", "F_0(-2)e_{2}", "R(-3)e_{1,2}"])
    ranks = {s.label(): s.rank for s in C.terms[2]}
    assert ranks["F_1"] == 3 and ranks["F_0(-1)e_{1}"] == 4 and ranks["R(-3)e_{1,2}"] == 1


def test_cone_without_cones_is_base_resolution():
    C = build_mapping_cone_resolution(4, 1)
    F = build_resolution(1, 4)
    assert C.length == F.length + 1
    assert all(C.differential(p + 1) == F.differential(p).matrix for p in range(1, F.length + 1))


def test_regular_sequence_examples():
    assert verify_regular_sequence(4, 2, t_max=6).passed
    assert verify_regular_sequence(4, 1).passed
    assert verify_regular_sequence(4, 3, field=GF(2)).passed


def test_regular_sequence_negative_control():
    rep = verify_regular_sequence(4, 2, t_max=6, sequence=[Polynomial.variable(1, 4)])
    assert not rep.passed
    assert rep.failures()[0].details["kernel_degrees"]


@pytest.mark.parametrize("field", [QQ, GF(3)])
def test_dcp_resolution_42(field):
    assert verify_dcp_resolution(4, 2, field, t_max=7).passed


def test_dropped_sign_breaks_zero_composition():
    C = build_mapping_cone_resolution(4, 2)
    d2 = C.differential(2)
    flipped = {k: (-p if k[0] >= 6 else p) for k, p in d2.entries.items()}
    diffs = list(C.differentials)
    diffs[1] = PolynomialMatrix(d2.rows, d2.cols, 4, flipped)
    bad = dataclasses.replace(C, differentials=tuple(diffs), _slices={})
    rep = verify_dcp_resolution(4, 2, QQ, t_max=5, cone=bad)
    assert not rep.passed
    assert any(v.name.startswith("d_") and not v.passed for v in rep.verdicts)


def test_quotient_dimension():
    # the hook quotient has total dimension n! / (n-d+1)!
    for n in range(1, 5):
        for d in range(1, n + 1):
            gens = dcp_generators(n, d)
            top = n * (n - 1) // 2 + 1  # socle degree is at most C(n,2)
            total = sum(quotient_hilbert_function(gens, n, t) for t in range(top + 1))
            assert total == math.factorial(n) // math.factorial(n - d + 1)


def test_cone_type():
    assert isinstance(build_mapping_cone_resolution(3, 2), ConeComplex)
