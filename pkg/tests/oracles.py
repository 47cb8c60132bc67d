"""Independent reference computations used by the tests.

Nothing here calls into the package's straightening, rank, or resolution
code; each oracle works from first principles.
"""

from __future__ import annotations

import itertools
import math

import sympy


def brute_monomials(n: int, t: int):
    """Exponent vectors of all degree-t monomials in n variables."""
    for combo in itertools.combinations_with_replacement(range(n), t):
        e = [0] * n
        for v in combo:
            e[v] += 1
        yield tuple(e)


def brute_hilbert_ideal(d: int, n: int, t: int) -> int:
    return sum(1 for e in brute_monomials(n, t) if sum(1 for x in e if x) >= d)


def brute_standard_count(d: int, i: int, n: int) -> int:
    """Count standard hook fillings by scanning all injective fillings."""
    total = 0
    for entries in itertools.permutations(range(1, n + 1), d + i):
        column, arm = entries[: i + 1], entries[i + 1:]
        row = (column[0],) + arm
        if list(column) == sorted(column) and list(row) == sorted(row):
            total += 1
    return total


def _perm_sign(p) -> int:
    sign = 1
    p = list(p)
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if p[a] > p[b]:
                sign = -sign
    return sign


def polytabloid(column, arm) -> dict:
    """Young polytabloid of a hook filling, as {tabloid: coefficient}.

    A tabloid of hook shape is determined by the first-row set together
    with the ordered singletons below it.
    """
    out: dict = {}
    col = tuple(column)
    for perm in itertools.permutations(range(len(col))):
        image = tuple(col[k] for k in perm)
        key = (frozenset((image[0],) + tuple(arm)),) + image[1:]
        out[key] = out.get(key, 0) + _perm_sign(perm)
    return {k: v for k, v in out.items() if v}


def combine(terms) -> dict:
    """Sum of c * polytabloid(column, arm) over ((column, arm), c)."""
    out: dict = {}
    for (column, arm), c in terms:
        for k, v in polytabloid(column, arm).items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def sympy_rank(rows, p: int | None = None) -> int:
    if not rows or not rows[0]:
        return 0
    M = sympy.Matrix(rows)
    if p is None:
        return M.rank()
    from sympy.polys.matrices import DomainMatrix
    from sympy import GF
    dm = DomainMatrix.from_Matrix(M).convert_to(GF(p))
    return dm.rank()


def sympy_invariant_factors(rows) -> list[int]:
    from sympy.matrices.normalforms import invariant_factors
    from sympy import ZZ as SZZ
    if not rows or not rows[0]:
        return []
    f = invariant_factors(sympy.Matrix(rows), domain=SZZ)
    return [abs(int(x)) for x in f if x != 0]


def hook_rank_formula(d: int, i: int) -> int:
    return math.comb(d + i - 1, i)
