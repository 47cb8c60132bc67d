"""De Concini-Procesi rings for hook partitions.

``I_mu = (e_1, ..., e_{d-1}) + I_{d,n}`` for ``mu = (n-d+1, 1^{d-1})``.  The
resolution of ``R_n / I_mu`` is obtained from the augmented ``F^{d,n}`` by
coning off multiplication by ``e_1``, then ``e_2``, and so on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exact_algebra import (
    QQ,
    ZZ,
    CoefficientRing,
    Monomial,
    Polynomial,
    PolynomialMatrix,
    SparseMatrix,
    count_monomials,
    elementary_symmetric,
    matrix_rank_over_field,
    monomials_of_degree,
)
from .report import VerificationReport, fan_out
from .resolution import build_resolution
from .specht import u_rank

__all__ = [
    "HookPartition",
    "ClassSymbol",
    "GrothendieckElement",
    "EquivariantSeries",
    "UnsupportedOperationError",
    "ConeSummand",
    "ConeComplex",
    "dcp_generators",
    "verify_regular_sequence",
    "build_mapping_cone_resolution",
    "cone_rank_census",
    "quotient_hilbert_function",
    "verify_dcp_resolution",
    "equivariant_poincare",
    "series_rank_evaluation",
]


class UnsupportedOperationError(TypeError):
    """Raised for products of two non-unit classes."""


def _check(n: int, d: int):
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got n={n}, d={d}")


@dataclass(frozen=True)
class HookPartition:
    n: int
    d: int

    def __post_init__(self):
        _check(self.n, self.d)

    @property
    def mu(self) -> tuple[int, ...]:
        return (self.n - self.d + 1,) + (1,) * (self.d - 1)


# ---------------------------------------------------------------------------
# Grothendieck-ring bookkeeping


@dataclass(frozen=True, order=True)
class ClassSymbol:
    """The unit class ``1`` (``key is None``) or ``[U^{d,n}_i]`` with ``key = (d, n, i)``."""

    key: tuple[int, int, int] | None = None

    def __post_init__(self):
        if self.key is not None:
            d, n, i = self.key
            if not (1 <= d <= n and 0 <= i <= n - d):
                raise ValueError(f"U^({d},{n})_{i} is zero")

    @classmethod
    def unit(cls) -> ClassSymbol:
        return cls(None)

    @classmethod
    def U(cls, d: int, n: int, i: int) -> ClassSymbol:
        return cls((d, n, i))

    @property
    def is_unit(self) -> bool:
        return self.key is None

    def rank(self) -> int:
        return 1 if self.key is None else u_rank(*self.key)

    def __str__(self) -> str:
        if self.key is None:
            return "1"
        d, n, i = self.key
        return f"[U^{{{d},{n}}}_{i}]"


def _sort_key(s: ClassSymbol):
    return (0, ()) if s.key is None else (1, s.key)


class GrothendieckElement:
    """Formal integer combination of class symbols."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[ClassSymbol, int] | None = None):
        self.coeffs = {s: c for s, c in (coeffs or {}).items() if c}

    @classmethod
    def of(cls, s: ClassSymbol, c: int = 1) -> GrothendieckElement:
        return cls({s: c})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, GrothendieckElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: GrothendieckElement) -> GrothendieckElement:
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, 0) + c
        return GrothendieckElement(out)

    def __mul__(self, other: GrothendieckElement) -> GrothendieckElement:
        out: dict[ClassSymbol, int] = {}
        for s, a in self.coeffs.items():
            for u, b in other.coeffs.items():
                if s.is_unit:
                    prod = u
                elif u.is_unit:
                    prod = s
                else:
                    raise UnsupportedOperationError(f"product {s} * {u} is not represented")
                out[prod] = out.get(prod, 0) + a * b
        return GrothendieckElement(out)

    def rank(self) -> int:
        return sum(c * s.rank() for s, c in self.coeffs.items())

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for s, c in sorted(self.coeffs.items(), key=lambda sc: _sort_key(sc[0])):
            parts.append(str(s) if c == 1 else f"{c}*{s}")
        return " + ".join(parts)

    __repr__ = __str__


class EquivariantSeries:
    """Polynomial in ``q, t`` with Grothendieck-ring coefficients,
    keyed by ``(power of q, power of t)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], GrothendieckElement] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def one(cls) -> EquivariantSeries:
        return cls({(0, 0): GrothendieckElement.of(ClassSymbol.unit())})

    def __getitem__(self, qt: tuple[int, int]) -> GrothendieckElement:
        return self.coeffs.get(qt, GrothendieckElement())

    def __eq__(self, other):
        if not isinstance(other, EquivariantSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: EquivariantSeries) -> EquivariantSeries:
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return EquivariantSeries(out)

    def __mul__(self, other: EquivariantSeries) -> EquivariantSeries:
        out: dict[tuple[int, int], GrothendieckElement] = {}
        for (a, b), x in self.coeffs.items():
            for (c, e), y in other.coeffs.items():
                k = (a + c, b + e)
                xy = x * y
                out[k] = out[k] + xy if k in out else xy
        return EquivariantSeries(out)

    def items(self):
        return sorted(self.coeffs.items())

    def __str__(self):
        parts = []
        for (a, b), v in self.items():
            mono = "".join(s for s in (
                "" if a == 0 else ("q" if a == 1 else f"q^{a}"),
                "" if b == 0 else ("t" if b == 1 else f"t^{b}")))
            coeff = str(v)
            if not mono:
                parts.append(coeff)
            elif coeff == "1":
                parts.append(mono)
            else:
                parts.append(f"({coeff}){mono}" if " + " in coeff or "*" in coeff else f"{coeff}{mono}")
        return " + ".join(parts) if parts else "0"


def equivariant_poincare(n: int, d: int) -> EquivariantSeries:
    """``prod_{k<d} (1 + q t^k) * (1 + sum_i [U^{d,n}_i] q^{i+1} t^{d+i})``, expanded."""
    _check(n, d)
    unit = GrothendieckElement.of(ClassSymbol.unit())
    base = EquivariantSeries.one() + EquivariantSeries(
        {(i + 1, d + i): GrothendieckElement.of(ClassSymbol.U(d, n, i)) for i in range(n - d + 1)})
    out = EquivariantSeries.one()
    for k in range(1, d):
        out = out * EquivariantSeries({(0, 0): unit, (1, k): unit})
    return out * base


def series_rank_evaluation(s: EquivariantSeries) -> dict[tuple[int, int], int]:
    return {k: v.rank() for k, v in s.items() if v.rank()}


# ---------------------------------------------------------------------------
# Ideals and regular sequences


def dcp_generators(n: int, d: int) -> list[Polynomial]:
    _check(n, d)
    gens = [elementary_symmetric(k, n) for k in range(1, d)]
    gens += [Polynomial.monomial(Monomial.from_support(s, n))
             for s in combinations(range(1, n + 1), d)]
    return gens


def _standard_monomials(n: int, d: int, t: int) -> tuple[Monomial, ...]:
    # basis of (R_n / I_{d,n})_t: monomials with support of size < d
    return tuple(m for m in monomials_of_degree(n, t) if len(m.support) < d)


def _reduced_span_matrix(polys: Iterable[Polynomial], basis: Sequence[Monomial],
                         field: CoefficientRing) -> SparseMatrix:
    index = {m: k for k, m in enumerate(basis)}
    entries = {}
    rows = 0
    for p in polys:
        row = {index[m]: c for m, c in p.terms.items() if m in index}
        if row:
            for k, c in row.items():
                entries[(rows, k)] = c
            rows += 1
    return SparseMatrix(rows, len(basis), entries, field)


def _multiples(polys: Sequence[Polynomial], basis_of_degree, t: int) -> list[Polynomial]:
    out = []
    for g in polys:
        for m in basis_of_degree(t - g.degree):
            out.append(g * Polynomial.monomial(m))
    return out


def verify_regular_sequence(n: int, d: int, t_max: int | None = None,
                            field: CoefficientRing = QQ,
                            sequence: Sequence[Polynomial] | None = None) -> VerificationReport:
    """Multiplication by ``e_k`` is injective on ``R_n / (I_{d,n} + (e_1..e_{k-1}))``
    in every degree ``t <= t_max``.

    ``sequence`` replaces ``e_1, ..., e_{d-1}`` (used for negative controls).
    """
    _check(n, d)
    t_max = n + 3 if t_max is None else t_max
    seq = list(sequence) if sequence is not None else [elementary_symmetric(k, n) for k in range(1, d)]
    rep = VerificationReport(f"regular sequence on R_{n}/I_({d},{n}) over {field}, t <= {t_max}")
    std = lambda t: _standard_monomials(n, d, t)  # noqa: E731
    if not seq:
        rep.add("empty sequence", True)
        return rep
    top = t_max + max(f.degree for f in seq)
    # span_rank[k][s]: rank of (f_1..f_k) in degree s of R_n / I_{d,n}
    span_rank = [[0] * (top + 1) for _ in range(len(seq) + 1)]
    for k in range(1, len(seq) + 1):
        for s in range(top + 1):
            M = _reduced_span_matrix(_multiples(seq[:k], std, s), std(s), field)
            span_rank[k][s] = matrix_rank_over_field(M, field)
    for k, f in enumerate(seq, start=1):
        bad = {}
        for t in range(t_max + 1):
            s = t + f.degree
            if s > top:
                continue
            quotient_dim = len(std(t)) - span_rank[k - 1][t]
            image_dim = span_rank[k][s] - span_rank[k - 1][s]
            if image_dim != quotient_dim:
                bad[t] = {"quotient_dim": quotient_dim, "image_dim": image_dim}
        rep.add(f"element {k} ({f}) is a nonzerodivisor", not bad, kernel_degrees=bad)
    return rep


def quotient_hilbert_function(generators: Sequence[Polynomial], n: int, t: int,
                              field: CoefficientRing = QQ) -> int:
    """``dim (R_n / (generators))_t`` by ranking all products ``m * g`` of degree ``t``."""
    basis = monomials_of_degree(n, t)
    M = _reduced_span_matrix(_multiples(generators, lambda s: monomials_of_degree(n, s), t),
                             basis, field)
    return len(basis) - matrix_rank_over_field(M, field)


# ---------------------------------------------------------------------------
# Iterated mapping cone


@dataclass(frozen=True)
class ConeSummand:
    """``G_q`` tensored with the Koszul symbol ``e_S``.

    ``G_0 = R_n`` and ``G_q = F^{d,n}_{q-1}`` for ``q >= 1``; the summand is
    twisted by ``sum(S)``.
    """

    q: int
    S: tuple[int, ...]
    rank: int
    base_degree: int

    @property
    def twist(self) -> int:
        return sum(self.S)

    @property
    def generator_degree(self) -> int:
        return self.base_degree + self.twist

    def label(self) -> str:
        base = "R" if self.q == 0 else f"F_{self.q - 1}"
        return base + (f"(-{self.twist})" if self.twist else "") + (
            "e_{" + ",".join(map(str, self.S)) + "}" if self.S else "")


@dataclass(frozen=True)
class ConeComplex:
    n: int
    d: int
    terms: tuple[tuple[ConeSummand, ...], ...]
    differentials: tuple[PolynomialMatrix, ...]
    basis_labels: tuple[tuple[str, ...], ...] = ()
    _slices: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def rank(self, p: int) -> int:
        return sum(s.rank for s in self.terms[p]) if 0 <= p < len(self.terms) else 0

    def generator_degrees(self, p: int) -> list[int]:
        if not 0 <= p < len(self.terms):
            return []
        return [s.generator_degree for s in self.terms[p] for _ in range(s.rank)]

    def differential(self, p: int) -> PolynomialMatrix:
        """``C_p -> C_{p-1}`` for ``1 <= p <= length``."""
        return self.differentials[p - 1]

    def dim(self, p: int, t: int) -> int:
        return sum(count_monomials(self.n, t - g) for g in self.generator_degrees(p))

    def integer_slice(self, p: int, t: int) -> SparseMatrix:
        key = (p, t)
        if key not in self._slices:
            self._slices[key] = self.differential(p).graded_slice(
                self.generator_degrees(p - 1), self.generator_degrees(p), t, ZZ)
        return self._slices[key]


def _block(rows: int, cols: int, n: int, blocks) -> PolynomialMatrix:
    entries = {}
    for r0, c0, M in blocks:
        for (r, c), p in M.entries.items():
            entries[(r0 + r, c0 + c)] = p
    return PolynomialMatrix(rows, cols, n, entries)


def _scalar_identity(size: int, f: Polynomial) -> PolynomialMatrix:
    return PolynomialMatrix(size, size, f.n, {(k, k): f for k in range(size)})


def build_mapping_cone_resolution(n: int, d: int) -> ConeComplex:
    """Resolution of ``R_n / I_mu`` as an iterated cone over ``e_1, ..., e_{d-1}``.

    Each step sends ``C`` to ``C_p + C_{p-1}(-k)`` with differential
    ``[[d_p, e_k], [0, -d_{p-1}]]``.
    """
    _check(n, d)
    F = build_resolution(d, n)
    terms: list[list[ConeSummand]] = [[ConeSummand(0, (), 1, 0)]]
    labels: list[list[str]] = [["1"]]
    for q in range(1, F.length + 2):
        mod = F.modules[q - 1]
        terms.append([ConeSummand(q, (), mod.rank, mod.generator_degree)])
        labels.append([f"[{T.label()}]" for T in mod.basis])
    diffs = [F.augmentation_matrix()] + [D.matrix for D in F.differentials]

    for k in range(1, d):
        ek = elementary_symmetric(k, n)
        rank = lambda ts: sum(s.rank for s in ts)  # noqa: E731
        L = len(terms)
        new_terms = []
        new_labels = []
        for p in range(L + 1):
            old = terms[p] if p < L else []
            shifted = [ConeSummand(s.q, s.S + (k,), s.rank, s.base_degree)
                       for s in (terms[p - 1] if p >= 1 else [])]
            new_terms.append(old + shifted)
            new_labels.append((labels[p] if p < L else [])
                              + ([f"{lab}e{k}" for lab in labels[p - 1]] if p >= 1 else []))
        new_diffs = []
        for p in range(1, L + 1):
            # rows: C_{p-1} + C_{p-2}(-k); cols: C_p + C_{p-1}(-k)
            top_rows = rank(terms[p - 1])
            top_cols = rank(terms[p]) if p < L else 0
            blocks = []
            if p < L:
                blocks.append((0, 0, diffs[p - 1]))
            blocks.append((0, top_cols, _scalar_identity(top_rows, ek)))
            if p >= 2:
                blocks.append((top_rows, top_cols, -diffs[p - 2]))
            rows = top_rows + (rank(terms[p - 2]) if p >= 2 else 0)
            cols = top_cols + top_rows
            new_diffs.append(_block(rows, cols, n, blocks))
        terms, labels, diffs = new_terms, new_labels, new_diffs

    return ConeComplex(n, d, tuple(tuple(ts) for ts in terms), tuple(diffs),
                       tuple(tuple(ls) for ls in labels))


def cone_rank_census(C: ConeComplex) -> dict[tuple[int, int], int]:
    """Number of basis elements per (homological degree, generator degree)."""
    out: dict[tuple[int, int], int] = {}
    for p, ts in enumerate(C.terms):
        for s in ts:
            if s.rank:
                key = (p, s.generator_degree)
                out[key] = out.get(key, 0) + s.rank
    return out


def verify_dcp_resolution(n: int, d: int, field: CoefficientRing = QQ, t_max: int | None = None,
                          cone: ConeComplex | None = None) -> VerificationReport:
    """Zero composition, minimality, and degreewise exactness of the cone
    complex onto ``R_n / I_mu``."""
    _check(n, d)
    if not field.is_field:
        raise ValueError("exactness is checked over QQ or Zp:p")
    t_max = n + 3 if t_max is None else t_max
    C = cone if cone is not None else build_mapping_cone_resolution(n, d)
    rep = VerificationReport(f"mapping cone resolution of R_{n}/I_mu, mu={HookPartition(n, d).mu}, "
                             f"over {field}, t <= {t_max}")
    for p in range(1, C.length):
        prod = C.differential(p) @ C.differential(p + 1)
        bad = sorted({c for _, c in prod.entries})
        rep.add(f"d_{p} o d_{p + 1} = 0", not bad,
                failing_columns=[C.basis_labels[p + 1][c] for c in bad] if C.basis_labels else bad)
    units = [(p, r, c) for p in range(1, C.length + 1)
             for (r, c), f in C.differential(p).entries.items() if f.constant_term()]
    rep.add("all entries in the maximal ideal", not units, unit_entries=units)

    gens = dcp_generators(n, d)
    work = [(p, t) for p in range(1, C.length + 1) for t in range(t_max + 1)]
    ranks = dict(zip(work, fan_out(
        lambda pt: matrix_rank_over_field(C.integer_slice(*pt), field), work)))
    rank = lambda p, t: ranks.get((p, t), 0)  # noqa: E731
    for p in range(C.length + 1):
        bad = []
        table = {}
        for t in range(t_max + 1):
            if p == 0:
                coker = C.dim(0, t) - rank(1, t)
                expected = quotient_hilbert_function(gens, n, t, field)
                table[t] = (coker, expected)
                if coker != expected:
                    bad.append(t)
            else:
                ker = C.dim(p, t) - rank(p, t)
                im = rank(p + 1, t)
                table[t] = (ker, im)
                if ker != im:
                    bad.append(t)
        what = "cokernel of d_1 is R/I_mu" if p == 0 else f"exact at C_{p}"
        rep.add(what, not bad, failing_degrees=bad, table=table)
    return rep
