"""The complex F^{d,n}: free modules on standard hook tableaux, the
tableau differential, the augmentation onto I_{d,n}, and the checks that
it is an equivariant minimal free resolution."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from .exact_algebra import (
    QQ,
    ZZ,
    CoefficientRing,
    Monomial,
    Polynomial,
    PolynomialMatrix,
    SparseMatrix,
    count_monomials,
    hilbert_function_squarefree_ideal,
    matrix_rank_over_field,
    monomials_of_degree,
    smith_normal_form,
)
from .report import VerificationReport, fan_out
from .specht import GroupPermutation, SpechtElement, act_on_tableaux, straighten, u_rank
from .tableaux import HookTableau, enumerate_standard, remove_box

__all__ = [
    "GradedFreeModule",
    "Differential",
    "ResolutionComplex",
    "differential_on_generator",
    "augment",
    "build_resolution",
    "betti_table",
    "betti_recursion_check",
    "graded_slice",
    "check_zero_composition",
    "check_minimality",
    "check_equivariance",
    "lemma1_left_inverse",
    "check_exactness_degreewise",
    "check_euler_hilbert",
    "check_unit_smith_factors",
    "verify_resolution",
]


def _check_params(d: int, n: int):
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")


@dataclass(frozen=True)
class GradedFreeModule:
    d: int
    n: int
    i: int

    @cached_property
    def basis(self) -> tuple[HookTableau, ...]:
        return tuple(enumerate_standard(self.d, self.i, self.n))

    @cached_property
    def index(self) -> dict[HookTableau, int]:
        return {T: k for k, T in enumerate(self.basis)}

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def generator_degree(self) -> int:
        return self.d + self.i

    def dim(self, t: int) -> int:
        """Dimension of the degree-``t`` graded piece over the coefficients."""
        return self.rank * count_monomials(self.n, t - self.generator_degree)

    def labels(self) -> list[str]:
        return [T.label() for T in self.basis]


@dataclass(frozen=True)
class Differential:
    """``matrix[r, c]`` is the coefficient of ``target.basis[r]`` in the
    image of ``source.basis[c]``."""

    source: GradedFreeModule
    target: GradedFreeModule
    matrix: PolynomialMatrix

    @property
    def entries(self):
        return self.matrix.entries

    def image(self, c: int) -> dict[HookTableau, Polynomial]:
        return {self.target.basis[r]: p for r, p in self.matrix.column(c).items()}


@dataclass(frozen=True)
class ResolutionComplex:
    d: int
    n: int
    modules: tuple[GradedFreeModule, ...]
    differentials: tuple[Differential, ...]
    augmentation: tuple[Monomial, ...]
    _slices: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def differential(self, i: int) -> Differential:
        """``d_i : F_i -> F_{i-1}`` for ``i >= 1``."""
        return self.differentials[i - 1]

    def augmentation_matrix(self) -> PolynomialMatrix:
        n = self.n
        return PolynomialMatrix(1, len(self.augmentation), n,
                                {(0, c): Polynomial.monomial(m) for c, m in enumerate(self.augmentation)})

    def integer_slice(self, i: int, t: int) -> SparseMatrix:
        key = (i, t)
        if key not in self._slices:
            self._slices[key] = graded_slice(self.differential(i), t, ZZ)
        return self._slices[key]


def differential_on_generator(T: HookTableau) -> list[tuple[Polynomial, SpechtElement]]:
    """``sum_j (-1)^(i-j) x_{a_j} [T minus a_j]``, one straightened term per j."""
    if T.i < 1:
        raise ValueError("tableaux with one row map through the augmentation")
    i = T.i
    return [(Polynomial.variable(a, T.n).scale((-1) ** (i - j)), straighten(remove_box(T, j)))
            for j, a in enumerate(T.column)]


def augment(T: HookTableau) -> Monomial:
    if T.i != 0:
        raise ValueError("the augmentation is defined on one-row tableaux")
    return Monomial.from_support(T.row, T.n)


def build_resolution(d: int, n: int) -> ResolutionComplex:
    _check_params(d, n)
    modules = tuple(GradedFreeModule(d, n, i) for i in range(n - d + 1))
    diffs = []
    for i in range(1, n - d + 1):
        src, tgt = modules[i], modules[i - 1]
        entries: dict[tuple[int, int], Polynomial] = {}
        for c, T in enumerate(src.basis):
            for poly, elem in differential_on_generator(T):
                for S, coeff in elem.terms.items():
                    key = (tgt.index[S], c)
                    term = poly.scale(coeff)
                    entries[key] = entries[key] + term if key in entries else term
        diffs.append(Differential(src, tgt, PolynomialMatrix(tgt.rank, src.rank, n, entries)))
    aug = tuple(augment(T) for T in modules[0].basis)
    return ResolutionComplex(d, n, modules, tuple(diffs), aug)


def betti_table(d: int, n: int) -> dict[tuple[int, int], int]:
    """Nonzero graded Betti numbers ``beta_{i,j}`` of ``I_{d,n}``."""
    _check_params(d, n)
    return {(i, d + i): math.comb(n, d + i) * math.comb(d + i - 1, i) for i in range(n - d + 1)}


def betti_recursion_check(d: int, n: int) -> bool:
    if n < 2 or d < 2 or d > n:
        raise ValueError(f"need 2 <= d <= n, got d={d}, n={n}")
    for i in range(-1, n + 2):
        lhs = u_rank(d, n, i)
        rhs = u_rank(d, n - 1, i - 1) + u_rank(d - 1, n - 1, i) + u_rank(d, n - 1, i)
        if lhs != rhs:
            return False
    return True


def graded_slice(diff: Differential, t: int, field: CoefficientRing = ZZ) -> SparseMatrix:
    """Degree-``t`` component of a differential as a coefficient matrix.

    Rows are ``(target tableau, monomial of degree t - deg target gen)``,
    columns ``(source tableau, monomial of degree t - deg source gen)``.
    """
    src, tgt = diff.source, diff.target
    M = diff.matrix.graded_slice([tgt.generator_degree] * tgt.rank,
                                 [src.generator_degree] * src.rank, t, field)
    rows = tuple((tgt.basis[r], m) for r, m in M.row_labels)
    cols = tuple((src.basis[c], m) for c, m in M.col_labels)
    return SparseMatrix(M.rows, M.cols, M.entries, field, rows, cols)


def _label(x) -> str:
    T, m = x
    return f"{m}[{T.label()}]"


def check_zero_composition(C: ResolutionComplex) -> VerificationReport:
    rep = VerificationReport(f"zero composition F^({C.d},{C.n})")
    if C.differentials:
        prod = C.augmentation_matrix() @ C.differential(1).matrix
        bad = sorted({c for _, c in prod.entries})
        rep.add("augmentation o d_1 = 0", not bad,
                failing_generators=[C.modules[1].basis[c].label() for c in bad])
    for i in range(1, len(C.differentials)):
        prod = C.differential(i).matrix @ C.differential(i + 1).matrix
        bad = sorted({c for _, c in prod.entries})
        rep.add(f"d_{i} o d_{i + 1} = 0", not bad,
                failing_generators=[C.modules[i + 1].basis[c].label() for c in bad])
    if not rep.verdicts:
        rep.add("no composable pairs", True)
    return rep


def check_minimality(C: ResolutionComplex) -> VerificationReport:
    rep = VerificationReport(f"minimality F^({C.d},{C.n})")
    for i, D in enumerate(C.differentials, start=1):
        units = [(D.target.basis[r].label(), D.source.basis[c].label())
                 for (r, c), p in sorted(D.entries.items()) if p.constant_term()]
        rep.add(f"d_{i} entries in the maximal ideal", not units, unit_entries=units)
        odd = [(D.target.basis[r].label(), D.source.basis[c].label(), str(p))
               for (r, c), p in sorted(D.entries.items()) if p.as_signed_variable() is None]
        rep.add(f"d_{i} entries are signed variables", not odd, other_entries=odd)
    if not C.differentials:
        rep.add("no differentials", True)
    return rep


def _act_poly(pi: GroupPermutation, p: Polynomial) -> Polynomial:
    return p.relabel(pi.images, p.n)


def check_equivariance(d: int, n: int, i: int, complex: ResolutionComplex | None = None
                       ) -> VerificationReport:
    """``sigma(d[T]) = d(sigma[T])`` for adjacent transpositions and basis ``T``.

    Both sides are read off the matrices of ``complex`` (built if omitted).
    """
    _check_params(d, n)
    C = complex if complex is not None else build_resolution(d, n)
    rep = VerificationReport(f"equivariance F^({d},{n})_{i}")
    if not 0 <= i <= n - d:
        rep.add("module is zero", True)
        return rep
    bad = []
    src = C.modules[i]
    for k in range(1, n):
        sigma = GroupPermutation.transposition(k, k + 1, n)
        for c, T in enumerate(src.basis):
            moved = act_on_tableaux(sigma, [(T, 1)])
            if i == 0:
                lhs = _act_poly(sigma, Polynomial.monomial(C.augmentation[c]))
                rhs = Polynomial.zero(n)
                for S, v in moved.items():
                    rhs = rhs + Polynomial.monomial(C.augmentation[src.index[S]], v)
                if lhs != rhs:
                    bad.append((k, T.label()))
                continue
            D = C.differential(i)
            lhs: dict[HookTableau, Polynomial] = {}
            for S, p in D.image(c).items():
                q = _act_poly(sigma, p)
                for U, v in act_on_tableaux(sigma, [(S, 1)]).items():
                    lhs[U] = lhs[U] + q.scale(v) if U in lhs else q.scale(v)
            rhs: dict[HookTableau, Polynomial] = {}
            for S, v in moved.items():
                for U, p in D.image(src.index[S]).items():
                    rhs[U] = rhs[U] + p.scale(v) if U in rhs else p.scale(v)
            lhs = {U: p for U, p in lhs.items() if p}
            rhs = {U: p for U, p in rhs.items() if p}
            if lhs != rhs:
                bad.append((k, T.label()))
    what = "augmentation" if i == 0 else f"d_{i}"
    rep.add(f"{what} commutes with adjacent transpositions", not bad,
            failing=[f"({k} {k + 1}) on [{lab}]" for k, lab in bad])
    return rep


def lemma1_left_inverse(d: int, n: int, i: int, complex: ResolutionComplex | None = None
                        ) -> tuple[VerificationReport, dict[str, str]]:
    """Check that the generator-degree slice of ``d_i`` is split injective.

    The rows ``x_{a_i}[T minus a_i]`` (drop the bottom box) must form a
    permutation matrix with entries +1.  Returns the report and the
    permutation as ``{source label: row label}``.
    """
    _check_params(d, n)
    if not 1 <= i <= n - d:
        raise ValueError(f"need 1 <= i <= n-d, got i={i}")
    C = complex if complex is not None else build_resolution(d, n)
    D = C.differential(i)
    M = graded_slice(D, d + i, ZZ)
    row_pos = {(T.label(), str(m)): r for r, (T, m) in enumerate(M.row_labels)}
    chosen = []
    for T in D.source.basis:
        bottom = T.column[-1]
        key = (remove_box(T, T.i).label(), str(Monomial.var(bottom, n)))
        chosen.append(row_pos[key])
    N = M.submatrix(chosen, list(range(M.cols)))
    perm: dict[str, str] = {}
    ok = N.rows == N.cols == len(set(chosen))
    row_hits = [0] * N.rows
    col_hits = [0] * N.cols
    for (r, c), v in N.entries.items():
        row_hits[r] += 1
        col_hits[c] += 1
        ok = ok and v == 1
        perm[D.source.basis[c].label()] = _label(M.row_labels[chosen[r]])
    ok = ok and all(h == 1 for h in row_hits) and all(h == 1 for h in col_hits)
    rep = VerificationReport(f"left inverse of phi^({d},{n})_{i}")
    rep.add("bottom-box rows form a +1 permutation matrix", ok,
            size=N.rows, rows=M.rows, cols=M.cols)
    if ok:
        # left inverse: N^T composed with the row selection
        L = SparseMatrix(M.cols, M.rows, {(c, chosen[r]): 1 for (r, c) in N.entries}, ZZ)
        rep.add("L * phi = identity", (L @ M) == SparseMatrix.identity(M.cols, ZZ))
    return rep, perm


def _hilbert_brute(d: int, n: int, t: int) -> int:
    return sum(1 for m in monomials_of_degree(n, t) if len(m.support) >= d)


def check_exactness_degreewise(C: ResolutionComplex, field: CoefficientRing = QQ,
                               t_max: int | None = None) -> VerificationReport:
    """Rank accounting ``dim ker = dim im`` at every position, degree by degree."""
    if not field.is_field:
        raise ValueError("degreewise exactness is checked over QQ or Zp:p")
    d, n = C.d, C.n
    t_max = n + 3 if t_max is None else t_max
    L = C.length
    work = [(i, t) for i in range(1, L + 1) for t in range(d + i, t_max + 1)]
    ranks = dict(zip(work, fan_out(
        lambda it: matrix_rank_over_field(C.integer_slice(*it), field), work)))
    rank = lambda i, t: ranks.get((i, t), 0)  # noqa: E731
    rep = VerificationReport(f"degreewise exactness F^({d},{n}) over {field}, t <= {t_max}")
    surj_bad = []
    for t in range(t_max + 1):
        hit = {(T_m * m) for T_m in C.augmentation for m in monomials_of_degree(n, t - d)}
        if len(hit) != hilbert_function_squarefree_ideal(d, n, t):
            surj_bad.append(t)
    rep.add("augmentation surjects onto I in each degree", not surj_bad, failing_degrees=surj_bad)
    for i in range(L + 1):
        table = {}
        bad = []
        for t in range(t_max + 1):
            if i == 0:
                ker = C.modules[0].dim(t) - hilbert_function_squarefree_ideal(d, n, t)
            else:
                ker = C.modules[i].dim(t) - rank(i, t)
            im = rank(i + 1, t)
            table[t] = (ker, im)
            if ker != im:
                bad.append(t)
        rep.add(f"exact at F_{i}", not bad, failing_degrees=bad, ker_im=table)
    return rep


def check_euler_hilbert(d: int, n: int, t_max: int | None = None) -> VerificationReport:
    """Alternating sum of shifted Hilbert functions of the free modules
    against a brute-force count of monomials with support at least ``d``."""
    _check_params(d, n)
    t_max = n + 3 if t_max is None else t_max
    beta = betti_table(d, n)
    rep = VerificationReport(f"Euler/Hilbert identity I_({d},{n}), t <= {t_max}")
    bad = []
    table = {}
    for t in range(t_max + 1):
        euler = sum((-1) ** i * b * count_monomials(n, t - j) for (i, j), b in beta.items())
        brute = _hilbert_brute(d, n, t)
        closed = hilbert_function_squarefree_ideal(d, n, t)
        table[t] = (euler, brute, closed)
        if not euler == brute == closed:
            bad.append(t)
    rep.add("sum (-1)^i beta_i HF(R(-d-i)) = HF(I)", not bad, failing_degrees=bad, values=table)
    return rep


def check_unit_smith_factors(C: ResolutionComplex) -> VerificationReport:
    """Integer Smith form of each ``d_i`` at degree ``d + i``: all ones, full rank."""
    rep = VerificationReport(f"unit Smith factors F^({C.d},{C.n})")
    for i in range(1, C.length + 1):
        factors = smith_normal_form(C.integer_slice(i, C.d + i))
        ok = len(factors) == C.modules[i].rank and all(f == 1 for f in factors)
        rep.add(f"SNF(phi_{i}) = [1]*{C.modules[i].rank}", ok,
                nonunit=[f for f in factors if f != 1], count=len(factors))
    if C.length == 0:
        rep.add("no differentials", True)
    return rep


def verify_resolution(d: int, n: int, fields: list[CoefficientRing] | None = None,
                      t_max: int | None = None, smith: bool = False) -> VerificationReport:
    """Run every resolution check for ``(d, n)``."""
    _check_params(d, n)
    fields = fields or [QQ]
    t_max = n + 3 if t_max is None else t_max
    C = build_resolution(d, n)
    rep = VerificationReport(f"F^({d},{n}) is an equivariant minimal free resolution of I_({d},{n})")
    rep.data["betti"] = {f"({i},{j})": b for (i, j), b in betti_table(d, n).items()}
    ranks_ok = all(C.modules[i].rank == u_rank(d, n, i) for i in range(C.length + 1))
    rep.add("module ranks match u_rank", ranks_ok)
    rep.extend(check_zero_composition(C), "zero_composition")
    rep.extend(check_minimality(C), "minimality")
    for i in range(C.length + 1):
        rep.extend(check_equivariance(d, n, i, C), f"equivariance[{i}]")
    for i in range(1, C.length + 1):
        rep.extend(lemma1_left_inverse(d, n, i, C)[0], f"left_inverse[{i}]")
    for f in fields:
        rep.extend(check_exactness_degreewise(C, f, t_max), f"exactness[{f}]")
    rep.extend(check_euler_hilbert(d, n, t_max), "euler_hilbert")
    if smith:
        rep.extend(check_unit_smith_factors(C), "smith")
    rep.data["certified_up_to_degree"] = t_max
    return rep
