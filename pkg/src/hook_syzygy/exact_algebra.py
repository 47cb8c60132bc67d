"""Exact coefficient rings, sparse polynomials and sparse matrices.

Everything here is exact: integers are Python ints, rationals are
:class:`fractions.Fraction`, prime-field elements are ints reduced mod p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "CoefficientRing",
    "ZZ",
    "QQ",
    "GF",
    "Monomial",
    "Polynomial",
    "SparseMatrix",
    "PolynomialMatrix",
    "elementary_symmetric",
    "monomials_of_degree",
    "count_monomials",
    "hilbert_function_squarefree_ideal",
    "matrix_rank_over_field",
    "smith_normal_form",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CoefficientRing:
    """One of ZZ, QQ or GF(p)."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("integers", "rationals", "prime-field"):
            raise ValueError(f"unknown coefficient ring kind {self.kind!r}")
        if self.kind == "prime-field":
            if not _is_prime(self.p):
                raise ValueError(f"prime-field modulus {self.p} is not prime")
        elif self.p != 0:
            raise ValueError("only prime fields carry a modulus")

    @classmethod
    def parse(cls, text: str) -> CoefficientRing:
        """Parse ``ZZ``, ``QQ`` or ``Zp:<p>`` (``Z2``, ``GF3`` are accepted too)."""
        s = text.strip()
        if s == "ZZ":
            return ZZ
        if s == "QQ":
            return QQ
        for prefix in ("Zp:", "GF", "Z"):
            if s.startswith(prefix) and s[len(prefix):].isdigit():
                return cls("prime-field", int(s[len(prefix):]))
        raise ValueError(f"cannot parse coefficient ring {text!r}")

    @property
    def is_field(self) -> bool:
        return self.kind != "integers"

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self) -> str:
        if self.kind == "integers":
            return "ZZ"
        if self.kind == "rationals":
            return "QQ"
        return f"Zp:{self.p}"

    def __call__(self, x) -> int | Fraction:
        """Map an integer or rational into this ring."""
        if self.kind == "integers":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ArithmeticError(f"{x} is not an integer")
                return x.numerator
            return int(x)
        if self.kind == "rationals":
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ArithmeticError(
                    f"denominator of {x} vanishes in characteristic {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p


ZZ = CoefficientRing("integers")
QQ = CoefficientRing("rationals")


def GF(p: int) -> CoefficientRing:
    return CoefficientRing("prime-field", p)


# ---------------------------------------------------------------------------
# Monomials and polynomials


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial in ``x_1, ..., x_n`` stored as its exponent vector."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError("negative exponent")

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, v: int, n: int) -> Monomial:
        if not 1 <= v <= n:
            raise ValueError(f"variable x{v} outside R_{n}")
        e = [0] * n
        e[v - 1] = 1
        return cls(tuple(e))

    @classmethod
    def from_support(cls, entries: Iterable[int], n: int) -> Monomial:
        """The product of ``x_v`` over ``entries`` (repeats raise the exponent)."""
        e = [0] * n
        for v in entries:
            if not 1 <= v <= n:
                raise ValueError(f"variable x{v} outside R_{n}")
            e[v - 1] += 1
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def exponents(self) -> dict[int, int]:
        return {v + 1: e for v, e in enumerate(self.exps) if e}

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v + 1 for v, e in enumerate(self.exps) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def __mul__(self, other: Monomial) -> Monomial:
        if self.n != other.n:
            raise ValueError("monomials live in different rings")
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def relabel(self, images: Sequence[int], m: int) -> Monomial:
        """Substitute ``x_v -> x_{images[v-1]}`` into ``R_m``."""
        e = [0] * m
        for v, k in enumerate(self.exps):
            if k:
                e[images[v] - 1] += k
        return Monomial(tuple(e))

    def __str__(self) -> str:
        parts = []
        for v, e in enumerate(self.exps):
            if e == 1:
                parts.append(f"x{v + 1}")
            elif e:
                parts.append(f"x{v + 1}^{e}")
        return "*".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, t: int) -> tuple[Monomial, ...]:
    """All degree-``t`` monomials in ``n`` variables, graded-lex descending
    (``x1^t`` first)."""
    if t < 0:
        return ()
    if n == 0:
        return (Monomial(()),) if t == 0 else ()

    def rec(k: int, left: int) -> Iterator[tuple[int, ...]]:
        if k == n - 1:
            yield (left,)
            return
        for e in range(left, -1, -1):
            for rest in rec(k + 1, left - e):
                yield (e,) + rest

    return tuple(Monomial(e) for e in rec(0, t))


def count_monomials(n: int, t: int) -> int:
    """Number of degree-``t`` monomials in ``n`` variables."""
    if t < 0 or n < 0:
        return 0
    if n == 0:
        return 1 if t == 0 else 0
    return math.comb(n - 1 + t, n - 1)


class Polynomial:
    """Sparse polynomial in ``R_n = A[x_1..x_n]``; zero coefficients are never stored."""

    __slots__ = ("n", "ring", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, object] | None = None,
                 ring: CoefficientRing = ZZ):
        self.n = n
        self.ring = ring
        self.terms = {}
        for mono, c in (terms or {}).items():
            if mono.n != n:
                raise ValueError(f"monomial {mono} does not live in R_{n}")
            c = ring(c)
            if c:
                self.terms[mono] = c

    @classmethod
    def variable(cls, v: int, n: int, ring: CoefficientRing = ZZ) -> Polynomial:
        return cls(n, {Monomial.var(v, n): 1}, ring)

    @classmethod
    def constant(cls, c, n: int, ring: CoefficientRing = ZZ) -> Polynomial:
        return cls(n, {Monomial.one(n): c}, ring)

    @classmethod
    def monomial(cls, mono: Monomial, c=1, ring: CoefficientRing = ZZ) -> Polynomial:
        return cls(mono.n, {mono: c}, ring)

    @classmethod
    def zero(cls, n: int, ring: CoefficientRing = ZZ) -> Polynomial:
        return cls(n, {}, ring)

    def _fast(self, terms: dict) -> Polynomial:
        p = Polynomial.__new__(Polynomial)
        p.n, p.ring, p.terms = self.n, self.ring, terms
        return p

    def _check(self, other: Polynomial):
        if self.n != other.n:
            raise ValueError(f"R_{self.n} vs R_{other.n}")

    def _norm(self, c):
        return c % self.ring.p if self.ring.kind == "prime-field" else c

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = self._norm(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return self._fast(out)

    def __neg__(self) -> Polynomial:
        return self._fast({m: self._norm(-c) for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def scale(self, c) -> Polynomial:
        c = self.ring(c)
        if not c:
            return Polynomial.zero(self.n, self.ring)
        return self._fast({m: self._norm(c * v) for m, v in self.terms.items()})

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.n, out, self.ring)

    __rmul__ = scale

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def constant_term(self):
        return self.terms.get(Monomial.one(self.n), 0)

    def homogeneous_component(self, t: int) -> Polynomial:
        return self._fast({m: c for m, c in self.terms.items() if m.degree == t})

    def relabel(self, images: Sequence[int], m: int) -> Polynomial:
        """Substitute ``x_v -> x_{images[v-1]}``, landing in ``R_m``."""
        return Polynomial(m, {mono.relabel(images, m): c for mono, c in self.terms.items()},
                          self.ring)

    def change_ring(self, ring: CoefficientRing) -> Polynomial:
        return Polynomial(self.n, self.terms, ring)

    def evaluate(self, point: Sequence) -> object:
        total = 0
        for mono, c in self.terms.items():
            v = c
            for x, e in zip(point, mono.exps):
                if e:
                    v *= x ** e
            total += v
        return self.ring(total)

    def as_signed_variable(self) -> tuple[int, int] | None:
        """``(sign, v)`` when this polynomial is ``+-x_v``, else ``None``."""
        if len(self.terms) != 1:
            return None
        (mono, c), = self.terms.items()
        if mono.degree != 1 or c not in (1, -1) and not (
                self.ring.kind == "prime-field" and c == self.ring.p - 1):
            return None
        sign = 1 if c == 1 else -1
        return sign, mono.support[0]

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda mc: (-mc[0].degree, tuple(-e for e in mc[0].exps)))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for mono, c in self.sorted_terms():
            neg = c < 0 if not isinstance(c, Fraction) else c < 0
            a = -c if neg else c
            ms = str(mono)
            if ms == "1":
                body = str(a)
            elif a == 1:
                body = ms
            else:
                body = f"{a}*{ms}"
            out.append(("-" if neg else "+", body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"Polynomial({self!s}, n={self.n})"

    @classmethod
    def parse(cls, text: str, n: int, ring: CoefficientRing = ZZ) -> Polynomial:
        """Inverse of ``str``: terms like ``-3*x1^2*x4`` joined by ``+``/``-``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls.zero(n, ring)
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[Monomial, object] = {}
        i = 0
        while i < len(s):
            sign = -1 if s[i] == "-" else 1
            j = i + 1
            while j < len(s) and s[j] not in "+-":
                j += 1
            body = s[i + 1:j]
            i = j
            coeff: object = 1
            exps = [0] * n
            for factor in body.split("*"):
                if factor.startswith("x"):
                    name, _, power = factor[1:].partition("^")
                    v = int(name)
                    if not 1 <= v <= n:
                        raise ValueError(f"variable x{v} outside R_{n}")
                    exps[v - 1] += int(power) if power else 1
                else:
                    coeff = coeff * Fraction(factor)
            mono = Monomial(tuple(exps))
            terms[mono] = terms.get(mono, 0) + sign * coeff
        return cls(n, terms, ring)


def elementary_symmetric(k: int, n: int, ring: CoefficientRing = ZZ) -> Polynomial:
    """The elementary symmetric polynomial ``e_k`` in ``n`` variables."""
    if k < 0 or k > n:
        raise ValueError(f"e_{k} is not defined in {n} variables")
    return Polynomial(
        n, {Monomial.from_support(s, n): 1 for s in combinations(range(1, n + 1), k)}, ring)


def hilbert_function_squarefree_ideal(d: int, n: int, t: int) -> int:
    """Dimension of the degree-``t`` part of ``I_{d,n}``.

    A degree-t monomial lies in the ideal iff its support has at least d
    variables; there are ``C(n,k) * C(t-1,k-1)`` monomials with support of
    size exactly ``k``.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if t < 0:
        raise ValueError("negative degree")
    return sum(math.comb(n, k) * math.comb(t - 1, k - 1) for k in range(d, min(n, t) + 1))


# ---------------------------------------------------------------------------
# Sparse matrices


@dataclass(frozen=True)
class SparseMatrix:
    """Map-of-entries matrix over a fixed coefficient ring.

    ``row_labels``/``col_labels`` are optional and only carried along for
    display and label-based comparison.
    """

    rows: int
    cols: int
    entries: Mapping[tuple[int, int], object]
    ring: CoefficientRing = ZZ
    row_labels: tuple | None = field(default=None, compare=False)
    col_labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            v = self.ring(v)
            if v:
                clean[(r, c)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence], ring: CoefficientRing = ZZ) -> SparseMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        return cls(nrows, ncols, {(r, c): v for r, row in enumerate(rows)
                                  for c, v in enumerate(row) if v}, ring)

    @classmethod
    def identity(cls, size: int, ring: CoefficientRing = ZZ) -> SparseMatrix:
        return cls(size, size, {(k, k): 1 for k in range(size)}, ring)

    @classmethod
    def zero(cls, rows: int, cols: int, ring: CoefficientRing = ZZ) -> SparseMatrix:
        return cls(rows, cols, {}, ring)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def __getitem__(self, rc: tuple[int, int]):
        return self.entries.get(rc, 0)

    def to_dense(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> SparseMatrix:
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()},
                            self.ring, self.col_labels, self.row_labels)

    def change_ring(self, ring: CoefficientRing) -> SparseMatrix:
        return SparseMatrix(self.rows, self.cols, self.entries, ring,
                            self.row_labels, self.col_labels)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> SparseMatrix:
        """Entry ``(r, c)`` moves to ``(row_perm[r], col_perm[c])``."""
        return SparseMatrix(self.rows, self.cols,
                            {(row_perm[r], col_perm[c]): v for (r, c), v in self.entries.items()},
                            self.ring)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> SparseMatrix:
        rpos = {r: k for k, r in enumerate(rows)}
        cpos = {c: k for k, c in enumerate(cols)}
        out = {(rpos[r], cpos[c]): v for (r, c), v in self.entries.items()
               if r in rpos and c in cpos}
        return SparseMatrix(len(rows), len(cols), out, self.ring)

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, dict[int, object]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, {})[c] = v
        out: dict[tuple[int, int], object] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, {}).items():
                out[(r, c)] = out.get((r, c), 0) + v * w
        return SparseMatrix(self.rows, other.cols, out, self.ring)

    def __neg__(self) -> SparseMatrix:
        return SparseMatrix(self.rows, self.cols, {k: -v for k, v in self.entries.items()},
                            self.ring, self.row_labels, self.col_labels)

    def __sub__(self, other: SparseMatrix) -> SparseMatrix:
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) - v
        return SparseMatrix(self.rows, self.cols, out, self.ring)

    def is_zero(self) -> bool:
        return not self.entries

    def row_dicts(self) -> list[dict[int, object]]:
        out: list[dict[int, object]] = [{} for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def components(self) -> list[tuple[list[int], list[int]]]:
        """Connected components of the bipartite row/column incidence graph
        (rows and columns without entries are dropped)."""
        parent: dict = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for r, c in self.entries:
            a, b = ("r", r), ("c", c)
            parent.setdefault(a, a)
            parent.setdefault(b, b)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        groups: dict = {}
        for node in parent:
            groups.setdefault(find(node), ([], []))
            kind, idx = node
            groups[find(node)][0 if kind == "r" else 1].append(idx)
        return [(sorted(rs), sorted(cs)) for rs, cs in groups.values()]


def _row_echelon_rank_mod(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in sorted(rows, key=len):
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                break
            f = row[lead]
            for c, v in prow.items():
                s = (row.get(c, 0) - f * v) % p
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
    return len(pivots)


def _row_echelon_rank_int(rows: list[dict[int, int]]) -> int:
    # fraction-free: r <- a*r - b*pivot; the row content is divided out
    # only after a non-unit scaling
    pivots: dict[int, dict[int, int]] = {}
    for row in sorted(rows, key=len):
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                g = 0
                for v in row.values():
                    g = math.gcd(g, v)
                    if g == 1:
                        break
                pivots[lead] = {c: v // g for c, v in row.items()} if g > 1 else row
                break
            a, b = prow[lead], row[lead]
            if a == 1 or a == -1:
                f = b * a
                get = row.get
                for c, v in prow.items():
                    s = get(c, 0) - f * v
                    if s:
                        row[c] = s
                    else:
                        del row[c]
                continue
            g = math.gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in row.items()}
            for c, v in prow.items():
                s = new.get(c, 0) - b * v
                if s:
                    new[c] = s
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = math.gcd(g, v)
                if g == 1:
                    break
            row = {c: v // g for c, v in new.items()} if g > 1 else new
    return len(pivots)


def matrix_rank_over_field(M: SparseMatrix, field: CoefficientRing) -> int:
    """Rank of ``M`` over QQ or GF(p), by exact sparse elimination.

    Connected components of the nonzero pattern are eliminated separately.
    """
    if not field.is_field:
        raise ValueError("rank is computed over a field (QQ or Zp:p)")
    rows = M.row_dicts()
    if field.kind == "prime-field":
        p = field.p
        conv = [{c: field(v) for c, v in r.items()} for r in rows]
        solve = lambda rs: _row_echelon_rank_mod(rs, p)  # noqa: E731
    else:
        conv = []
        for r in rows:
            dens = [v.denominator for v in r.values() if isinstance(v, Fraction)]
            scale = math.lcm(*dens) if dens else 1
            conv.append({c: int(Fraction(v) * scale) for c, v in r.items()})
        solve = _row_echelon_rank_int
    total = 0
    for rs, _cs in M.components():
        total += solve([conv[r] for r in rs])
    return total


def _snf_diagonal(rows: list[dict[int, int]]) -> list[int]:
    """Reduce an integer matrix (list of sparse rows) to a diagonal by
    unimodular row and column operations; returns the nonzero diagonal."""
    rows = [dict(r) for r in rows if r]
    cols: dict[int, set[int]] = {}
    for ri, r in enumerate(rows):
        for c in r:
            cols.setdefault(c, set()).add(ri)
    alive = set(range(len(rows)))
    diag: list[int] = []

    def set_entry(ri: int, c: int, v: int):
        if v:
            rows[ri][c] = v
            cols.setdefault(c, set()).add(ri)
        elif c in rows[ri]:
            del rows[ri][c]
            cols[c].discard(ri)

    while True:
        best = None
        for ri in alive:
            for c, v in rows[ri].items():
                key = (abs(v), len(rows[ri]) + len(cols[c]))
                if best is None or key < best[0]:
                    best = (key, ri, c)
        if best is None:
            return diag
        _, pr, pc = best
        while True:
            # clear the pivot column with row operations
            for ri in list(cols[pc]):
                if ri == pr:
                    continue
                a, b = rows[pr][pc], rows[ri][pc]
                if b % a == 0:
                    q = b // a
                    for c, v in list(rows[pr].items()):
                        set_entry(ri, c, rows[ri].get(c, 0) - q * v)
                else:
                    x, y, g = _xgcd(a, b)
                    old_p, old_r = dict(rows[pr]), dict(rows[ri])
                    for c in set(old_p) | set(old_r):
                        u, w = old_p.get(c, 0), old_r.get(c, 0)
                        set_entry(pr, c, x * u + y * w)
                        set_entry(ri, c, (-b // g) * u + (a // g) * w)
            # clear the pivot row with column operations
            for c in [c for c in rows[pr] if c != pc]:
                a, b = rows[pr][pc], rows[pr][c]
                if b % a == 0:
                    q = b // a
                    for ri in list(cols[pc]):
                        set_entry(ri, c, rows[ri].get(c, 0) - q * rows[ri][pc])
                else:
                    x, y, g = _xgcd(a, b)
                    for ri in list(cols[pc] | cols.get(c, set())):
                        u, w = rows[ri].get(pc, 0), rows[ri].get(c, 0)
                        set_entry(ri, pc, x * u + y * w)
                        set_entry(ri, c, (-b // g) * u + (a // g) * w)
            if cols[pc] == {pr} and len(rows[pr]) == 1:
                break
        diag.append(abs(rows[pr][pc]))
        set_entry(pr, pc, 0)
        alive.discard(pr)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def smith_normal_form(M: SparseMatrix) -> list[int]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` of an integer matrix."""
    if M.ring.kind != "integers":
        raise ValueError("Smith normal form is computed over ZZ")
    rows = M.row_dicts()
    diag: list[int] = []
    for rs, _cs in M.components():
        diag.extend(_snf_diagonal([rows[r] for r in rs]))
    # diagonal -> invariant factors: repeatedly replace (a, b) by (gcd, lcm)
    diag.sort()
    for k in range(len(diag)):
        for j in range(k + 1, len(diag)):
            a, b = diag[k], diag[j]
            g = math.gcd(a, b)
            if g != a:
                diag[k], diag[j] = g, a // g * b
    return diag


# ---------------------------------------------------------------------------
# Matrices with polynomial entries


@dataclass(frozen=True)
class PolynomialMatrix:
    """Sparse matrix over ``R_n``; the carrier for differentials and chain maps."""

    rows: int
    cols: int
    n: int
    entries: Mapping[tuple[int, int], Polynomial]

    def __post_init__(self):
        clean = {}
        for (r, c), p in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if p.n != self.n:
                raise ValueError("entry lives in the wrong polynomial ring")
            if p:
                clean[(r, c)] = p
        object.__setattr__(self, "entries", clean)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def __getitem__(self, rc: tuple[int, int]) -> Polynomial:
        return self.entries.get(rc) or Polynomial.zero(self.n)

    def column(self, c: int) -> dict[int, Polynomial]:
        return {r: p for (r, cc), p in self.entries.items() if cc == c}

    def __matmul__(self, other: PolynomialMatrix) -> PolynomialMatrix:
        if self.cols != other.rows or self.n != other.n:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list[tuple[int, Polynomial]]] = {}
        for (r, c), p in other.entries.items():
            by_row.setdefault(r, []).append((c, p))
        out: dict[tuple[int, int], Polynomial] = {}
        for (r, k), p in self.entries.items():
            for c, q in by_row.get(k, ()):
                prod = p * q
                out[(r, c)] = out[(r, c)] + prod if (r, c) in out else prod
        return PolynomialMatrix(self.rows, other.cols, self.n, out)

    def __neg__(self) -> PolynomialMatrix:
        return PolynomialMatrix(self.rows, self.cols, self.n,
                                {k: -p for k, p in self.entries.items()})

    def is_zero(self) -> bool:
        return not self.entries

    def graded_slice(self, row_degrees: Sequence[int], col_degrees: Sequence[int], t: int,
                     ring: CoefficientRing = ZZ) -> SparseMatrix:
        """Degree-``t`` component, viewing the matrix as a map between free
        modules with the given generator degrees.

        Rows are ``(row, monomial)`` and columns ``(col, monomial)``, ordered
        row/col-major then graded-lex; labels record these pairs.
        """
        n = self.n
        row_index: dict[tuple[int, Monomial], int] = {}
        row_labels = []
        for r, deg in enumerate(row_degrees):
            for mono in monomials_of_degree(n, t - deg):
                row_index[(r, mono)] = len(row_labels)
                row_labels.append((r, mono))
        col_labels = []
        by_col: dict[int, list[tuple[int, Polynomial]]] = {}
        for (r, c), p in self.entries.items():
            by_col.setdefault(c, []).append((r, p))
        out: dict[tuple[int, int], object] = {}
        for c, deg in enumerate(col_degrees):
            for mono in monomials_of_degree(n, t - deg):
                j = len(col_labels)
                col_labels.append((c, mono))
                for r, p in by_col.get(c, ()):
                    for pm, coeff in p.terms.items():
                        key = (r, pm * mono)
                        i = row_index.get(key)
                        if i is None:
                            raise ValueError(
                                "entry degree does not match the stated generator degrees")
                        out[(i, j)] = out.get((i, j), 0) + coeff
        return SparseMatrix(len(row_labels), len(col_labels), out, ring,
                            tuple(row_labels), tuple(col_labels))
