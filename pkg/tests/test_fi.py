import random

import pytest
from hypothesis import given, settings, strategies as st

from hook_syzygy.exact_algebra import SparseMatrix
from hook_syzygy.fi import (
    check_functor_composition, check_square_commutes, induced_chain_map, random_injection,
)
from hook_syzygy.specht import GroupPermutation, act, straighten
from hook_syzygy.tableaux import HookTableau, InjectionMap, apply_injection


def test_identity_gives_identity_matrix():
    for d, i, n in [(2, 1, 4), (3, 0, 5), (1, 2, 4)]:
        M = induced_chain_map(InjectionMap.identity(n), d, i).matrix
        assert M == SparseMatrix.identity(M.rows)


def test_order_preserving_map_selects_columns():
    F = induced_chain_map(InjectionMap((2, 3, 4), 4), 2, 1)
    src, tgt = F.source.labels(), F.target.labels()
    images = {src[c]: tgt[r] for (r, c), v in F.matrix.entries.items() if v == 1}
    assert images["12|3"] == "23|4"
    assert images["13|2"] == "24|3"
    assert set(F.matrix.entries.values()) == {1} and F.matrix.nnz == 2


@pytest.mark.parametrize("eps", [(1, 3, 4, 6), (2, 3, 5, 6), (1, 2, 3, 4)])
def test_order_preserving_matrices_are_selections(eps):
    e = InjectionMap(eps, 6)
    for d in range(1, 5):
        for i in range(0, 5 - d):
            M = induced_chain_map(e, d, i).matrix
            per_col = {}
            for (_, c), v in M.entries.items():
                assert v == 1
                per_col[c] = per_col.get(c, 0) + 1
            assert sorted(per_col) == list(range(M.cols)) and set(per_col.values()) <= {1}


def test_non_monotone_map_via_permutation():
    # eps = sigma o inclusion with sigma = (3,1,2,4)
    eps = InjectionMap((3, 1, 2), 4)
    F = induced_chain_map(eps, 2, 1)
    col = F.source.index[HookTableau.parse("12|3", 3)]
    got = {F.target.basis[r]: v for (r, c), v in F.matrix.entries.items() if c == col}
    assert got == straighten(apply_injection(eps, HookTableau.parse("12|3", 3))).terms
    incl = induced_chain_map(InjectionMap.inclusion(3, 4), 2, 1)
    sigma = GroupPermutation((3, 1, 2, 4))
    for c, S in enumerate(incl.source.basis):
        e = straighten(apply_injection(InjectionMap.inclusion(3, 4), S))
        moved = act(sigma, e)
        assert {F.target.basis[r]: v for (r, cc), v in F.matrix.entries.items() if cc == c} == moved.terms


def test_square_examples():
    assert check_square_commutes(InjectionMap.inclusion(3, 4), 2, 1, t_max=6).passed
    assert check_square_commutes(InjectionMap((3, 1, 2), 4), 2, 1, t_max=6).passed
    assert check_square_commutes(InjectionMap((4, 2), 4), 2, 0).passed
    # source module is zero: both composites vanish
    assert check_square_commutes(InjectionMap((2, 1, 3), 5), 2, 2).passed


def test_coefficient_only_control_fails():
    eps = InjectionMap((3, 1, 2), 4)
    maps = (induced_chain_map(eps, 2, 0, relabel_coefficients=False),
            induced_chain_map(eps, 2, 1, relabel_coefficients=False))
    rep = check_square_commutes(eps, 2, 1, t_max=5, maps=maps)
    assert not rep.passed
    rep0 = check_square_commutes(eps, 2, 0, maps=(None, maps[0]))
    assert not rep0.passed


def test_composition_examples():
    a, b = InjectionMap.inclusion(3, 4), InjectionMap.inclusion(4, 5)
    assert check_functor_composition(a, b, 2, 1).passed
    direct = induced_chain_map(InjectionMap.inclusion(3, 5), 2, 1).matrix
    assert direct == induced_chain_map(b, 2, 1).matrix @ induced_chain_map(a, 2, 1).matrix
    idn = InjectionMap.identity(4)
    assert check_functor_composition(idn, idn, 2, 1).passed


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2), st.integers(0, 1), st.integers(0, 1),
       st.integers(0, 2**32 - 1))
def test_random_composition(d, extra_n, extra_m, extra_l, seed):
    rng = random.Random(seed)
    n = d + extra_n
    m, l = n + extra_m, n + extra_m + extra_l  # noqa: E741
    e1, e2 = random_injection(n, m, rng), random_injection(m, l, rng)
    for i in range(0, l - d + 1):
        assert check_functor_composition(e1, e2, d, i).passed


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2**32 - 1))
def test_random_squares_with_degree_slices(d, extra_n, extra_m, seed):
    rng = random.Random(seed)
    n = d + extra_n
    m = n + extra_m
    eps = random_injection(n, m, rng)
    for i in range(0, m - d + 1):
        assert check_square_commutes(eps, d, i, t_max=d + i + 1).passed
