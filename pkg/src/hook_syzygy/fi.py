"""FI-module structure on F^{d,*}: an injection [n] -> [m] relabels
tableau entries and substitutes variables, giving chain maps
F^{d,n} -> F^{d,m}."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .exact_algebra import (ZZ, Monomial, Polynomial, PolynomialMatrix, SparseMatrix,
                            monomials_of_degree)
from .report import VerificationReport
from .resolution import (Differential, GradedFreeModule, ResolutionComplex, build_resolution,
                         graded_slice)
from .specht import straighten
from .tableaux import InjectionMap, apply_injection

__all__ = [
    "ChainMapSlice",
    "induced_chain_map",
    "check_square_commutes",
    "check_functor_composition",
    "random_injection",
]


@lru_cache(maxsize=64)
def _resolution(d: int, n: int) -> ResolutionComplex | None:
    return build_resolution(d, n) if 1 <= d <= n else None


def _differential(d: int, n: int, i: int) -> PolynomialMatrix:
    """Matrix of ``d_i`` on ``F^{d,n}``; a zero matrix where a module vanishes."""
    src, tgt = GradedFreeModule(d, n, i), GradedFreeModule(d, n, i - 1)
    C = _resolution(d, n)
    if C is None or not 1 <= i <= C.length:
        return PolynomialMatrix(tgt.rank, src.rank, n, {})
    return C.differential(i).matrix


@dataclass(frozen=True)
class ChainMapSlice:
    """The component ``F^{d,n}_i -> F^{d,m}_i`` induced by ``eps``.

    ``matrix`` holds the generator action ``[T] -> straighten(eps(T))``;
    coefficients are substituted ``x_v -> x_{eps(v)}`` when applied.
    """

    eps: InjectionMap
    d: int
    i: int
    source: GradedFreeModule
    target: GradedFreeModule
    matrix: SparseMatrix
    relabel_coefficients: bool = True

    def map_polynomial(self, p: Polynomial) -> Polynomial:
        if self.relabel_coefficients:
            return p.relabel(self.eps.values, self.eps.m)
        # negative control: keep x_v as x_v inside R_m
        return p.relabel(tuple(range(1, self.eps.n + 1)), self.eps.m)

    def after(self, D: PolynomialMatrix) -> PolynomialMatrix:
        """``self o D`` for a polynomial matrix ``D`` with rows on ``self.source``."""
        m = self.eps.m
        by_row: dict[int, list[tuple[int, object]]] = {}
        for (r, c), v in self.matrix.entries.items():
            by_row.setdefault(c, []).append((r, v))
        out: dict[tuple[int, int], Polynomial] = {}
        for (s, c), p in D.entries.items():
            q = self.map_polynomial(p)
            for r, v in by_row.get(s, ()):
                term = q.scale(v)
                out[(r, c)] = out[(r, c)] + term if (r, c) in out else term
        return PolynomialMatrix(self.target.rank, D.cols, m, out)

    def as_polynomial_matrix(self) -> PolynomialMatrix:
        m = self.eps.m
        return PolynomialMatrix(self.target.rank, self.source.rank, m,
                                {k: Polynomial.constant(v, m) for k, v in self.matrix.entries.items()})

    def graded_slice(self, t: int) -> SparseMatrix:
        """Degree-``t`` matrix ``(F^{d,n}_i)_t -> (F^{d,m}_i)_t``."""
        src_slice = graded_slice_labels(self.source, t)
        tgt_slice = graded_slice_labels(self.target, t)
        row_index = {lab: k for k, lab in enumerate(tgt_slice)}
        by_col: dict[int, list[tuple[int, object]]] = {}
        for (r, c), v in self.matrix.entries.items():
            by_col.setdefault(c, []).append((r, v))
        out = {}
        for j, (c, mono) in enumerate(src_slice):
            image = self.map_polynomial(Polynomial.monomial(mono))
            (img_mono, _), = image.terms.items()
            for r, v in by_col.get(c, ()):
                out[(row_index[(r, img_mono)], j)] = v
        return SparseMatrix(len(tgt_slice), len(src_slice), out, ZZ)


def graded_slice_labels(M: GradedFreeModule, t: int) -> list[tuple[int, Monomial]]:
    return [(r, mono) for r in range(M.rank)
            for mono in monomials_of_degree(M.n, t - M.generator_degree)]


def induced_chain_map(eps: InjectionMap, d: int, i: int,
                      relabel_coefficients: bool = True) -> ChainMapSlice:
    src = GradedFreeModule(d, eps.n, i)
    tgt = GradedFreeModule(d, eps.m, i)
    entries = {}
    for c, T in enumerate(src.basis):
        for S, v in straighten(apply_injection(eps, T)).terms.items():
            entries[(tgt.index[S], c)] = v
    M = SparseMatrix(tgt.rank, src.rank, entries, ZZ,
                     tuple(tgt.labels()), tuple(src.labels()))
    return ChainMapSlice(eps, d, i, src, tgt, M, relabel_coefficients)


def check_square_commutes(eps: InjectionMap, d: int, i: int, t_max: int | None = None,
                          maps: tuple[ChainMapSlice, ChainMapSlice] | None = None
                          ) -> VerificationReport:
    """``F_{i-1}(eps) o d^n_i = d^m_i o F_i(eps)``; for ``i = 0`` the
    augmentations onto the ideals are compared instead.

    The polynomial identity is exact; with ``t_max`` the integer slices of
    both composites are also compared in every degree up to ``t_max``.
    ``maps`` overrides the chain-map components ``(F_{i-1}, F_i)``.
    """
    n, m = eps.n, eps.m
    rep = VerificationReport(f"FI square [{n}]->[{m}] eps={eps.values}, d={d}, i={i}")
    if i == 0:
        F0 = maps[1] if maps is not None else induced_chain_map(eps, d, 0)
        bad = []
        for c, T in enumerate(F0.source.basis):
            lhs = F0.map_polynomial(Polynomial.monomial(Monomial.from_support(T.row, n)))
            rhs = Polynomial.zero(m)
            for (r, cc), v in F0.matrix.entries.items():
                if cc == c:
                    rhs = rhs + Polynomial.monomial(Monomial.from_support(F0.target.basis[r].row, m), v)
            if lhs != rhs:
                bad.append(T.label())
        rep.add("I(eps) o augmentation = augmentation o F_0(eps)", not bad, failing=bad)
        return rep
    lower, upper = maps if maps is not None else (induced_chain_map(eps, d, i - 1),
                                                  induced_chain_map(eps, d, i))
    Dn, Dm = _differential(d, n, i), _differential(d, m, i)
    left = lower.after(Dn)
    right = Dm @ upper.as_polynomial_matrix()
    diff = {k for k in set(left.entries) | set(right.entries) if left[k] != right[k]}
    rep.add("polynomial identity", not diff,
            failing_columns=sorted({upper.source.basis[c].label() for _, c in diff}))
    if t_max is not None and upper.source.rank:
        bad_t = []
        for t in range(d + i, t_max + 1):
            An = graded_slice(_as_diff(d, n, i), t, ZZ)
            Am = graded_slice(_as_diff(d, m, i), t, ZZ)
            if lower.graded_slice(t) @ An != Am @ upper.graded_slice(t):
                bad_t.append(t)
        rep.add(f"degreewise identity t <= {t_max}", not bad_t, failing_degrees=bad_t)
    return rep


def _as_diff(d: int, n: int, i: int) -> Differential:
    return Differential(GradedFreeModule(d, n, i), GradedFreeModule(d, n, i - 1),
                        _differential(d, n, i))


def check_functor_composition(eps1: InjectionMap, eps2: InjectionMap, d: int, i: int
                              ) -> VerificationReport:
    """``F(eps2 o eps1) = F(eps2) F(eps1)`` and identities go to identities."""
    rep = VerificationReport(f"functoriality [{eps1.n}]->[{eps1.m}]->[{eps2.m}], d={d}, i={i}")
    A = induced_chain_map(eps1, d, i).matrix
    B = induced_chain_map(eps2, d, i).matrix
    AB = induced_chain_map(eps2.compose(eps1), d, i).matrix
    rep.add("F(eps2 o eps1) = F(eps2) F(eps1)", AB == B @ A)
    for k in (eps1.n, eps1.m, eps2.m):
        M = induced_chain_map(InjectionMap.identity(k), d, i).matrix
        rep.add(f"F(id_{k}) = identity", M == SparseMatrix.identity(M.rows, ZZ))
    return rep


def random_injection(n: int, m: int, rng: random.Random) -> InjectionMap:
    return InjectionMap(tuple(rng.sample(range(1, m + 1), n)), m)
