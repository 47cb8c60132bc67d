"""The modules U^{d,n}_i: tableau classes modulo column alternation and
shuffling, expanded in the basis of standard tableaux."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .tableaux import HookTableau, InjectionMap, apply_injection, is_standard

__all__ = [
    "SpechtElement",
    "GroupPermutation",
    "straighten",
    "act",
    "u_rank",
    "restriction_rank_terms",
    "restriction_rank_identity",
]


def _sort_with_sign(xs: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    xs = list(xs)
    sign = 1
    # insertion sort; each adjacent swap is a transposition
    for k in range(1, len(xs)):
        j = k
        while j > 0 and xs[j - 1] > xs[j]:
            xs[j - 1], xs[j] = xs[j], xs[j - 1]
            sign = -sign
            j -= 1
    return tuple(xs), sign


@lru_cache(maxsize=None)
def _straighten_sorted(column: tuple[int, ...], arm: tuple[int, ...]) -> tuple:
    """Expansion of a tableau whose column and arm are already increasing.

    Returns a tuple of ((column, arm), coeff) pairs over standard tableaux.
    """
    if not arm or column[0] < arm[0]:
        return (((column, arm), 1),)
    b1 = arm[0]
    acc: dict[tuple, int] = {}
    for j in range(len(column)):
        # exchange b_1 with a_j; the column entry sum drops by a_j - b_1 > 0
        new_col, sign = _sort_with_sign(column[:j] + (b1,) + column[j + 1:])
        new_arm = tuple(sorted((column[j],) + arm[1:]))
        for key, c in _straighten_sorted(new_col, new_arm):
            acc[key] = acc.get(key, 0) + sign * c
    return tuple((k, c) for k, c in sorted(acc.items()) if c)


class SpechtElement:
    """Integer combination of standard tableaux of shape ``(d, 1^i)`` on ``[n]``."""

    __slots__ = ("d", "i", "n", "terms")

    def __init__(self, d: int, i: int, n: int, terms: Mapping[HookTableau, int] | None = None):
        self.d, self.i, self.n = d, i, n
        self.terms: dict[HookTableau, int] = {}
        for T, c in (terms or {}).items():
            if (T.d, T.i, T.n) != (d, i, n):
                raise ValueError(f"{T} does not belong to U^({d},{n})_{i}")
            if not is_standard(T):
                raise ValueError(f"{T} is not standard")
            if c:
                self.terms[T] = c

    @classmethod
    def basis_vector(cls, T: HookTableau) -> SpechtElement:
        return cls(T.d, T.i, T.n, {T: 1})

    @classmethod
    def zero(cls, d: int, i: int, n: int) -> SpechtElement:
        return cls(d, i, n)

    def _like(self, terms: dict[HookTableau, int]) -> SpechtElement:
        out = SpechtElement.__new__(SpechtElement)
        out.d, out.i, out.n = self.d, self.i, self.n
        out.terms = {T: c for T, c in terms.items() if c}
        return out

    def coefficient(self, T: HookTableau) -> int:
        return self.terms.get(T, 0)

    def items(self) -> Iterator[tuple[HookTableau, int]]:
        return iter(sorted(self.terms.items(), key=lambda tc: tc[0].sort_key()))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpechtElement):
            return NotImplemented
        return (self.d, self.i, self.n) == (other.d, other.i, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, self.i, self.n, frozenset(self.terms.items())))

    def __add__(self, other: SpechtElement) -> SpechtElement:
        if (self.d, self.i, self.n) != (other.d, other.i, other.n):
            raise ValueError("elements of different modules")
        out = dict(self.terms)
        for T, c in other.terms.items():
            out[T] = out.get(T, 0) + c
        return self._like(out)

    def __neg__(self) -> SpechtElement:
        return self._like({T: -c for T, c in self.terms.items()})

    def __sub__(self, other: SpechtElement) -> SpechtElement:
        return self + (-other)

    def __mul__(self, c: int) -> SpechtElement:
        return self._like({T: c * v for T, v in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for T, c in self.items():
            s = "-" if c < 0 else "+"
            a = abs(c)
            parts.append(f"{s} {'' if a == 1 else a}[{T.label()}]")
        return " ".join(parts).lstrip("+ ")


def straighten(T: HookTableau) -> SpechtElement:
    """Expand the class ``[T]`` in the standard basis.

    The arm is sorted without sign, the column with the sign of the
    sorting permutation, and a corner larger than ``b_1`` is removed by the
    one-box shuffle between the first two columns.
    """
    column, sign = _sort_with_sign(T.column)
    arm = tuple(sorted(T.arm))
    terms = {HookTableau(col, a, T.n): sign * c for (col, a), c in _straighten_sorted(column, arm)}
    return SpechtElement(T.d, T.i, T.n, terms)


@dataclass(frozen=True)
class GroupPermutation:
    """A permutation of ``[n]``, ``images[k-1] = pi(k)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> GroupPermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, a: int, b: int, n: int) -> GroupPermutation:
        im = list(range(1, n + 1))
        im[a - 1], im[b - 1] = im[b - 1], im[a - 1]
        return cls(tuple(im))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: GroupPermutation) -> GroupPermutation:
        """Composition ``self o other``."""
        return GroupPermutation(tuple(self(other(k)) for k in range(1, self.n + 1)))

    def inverse(self) -> GroupPermutation:
        inv = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return GroupPermutation(tuple(inv))

    def as_injection(self) -> InjectionMap:
        return InjectionMap(self.images, self.n)


def act(pi: GroupPermutation, e: SpechtElement) -> SpechtElement:
    if pi.n != e.n:
        raise ValueError(f"permutation of [{pi.n}] acting on U over [{e.n}]")
    eps = pi.as_injection()
    out = SpechtElement.zero(e.d, e.i, e.n)
    for T, c in e.terms.items():
        out = out + straighten(apply_injection(eps, T)) * c
    return out


def act_on_tableaux(pi: GroupPermutation, terms: Iterable[tuple[HookTableau, int]]) -> dict:
    out: dict[HookTableau, int] = {}
    eps = pi.as_injection()
    for T, c in terms:
        for S, v in straighten(apply_injection(eps, T)).terms.items():
            out[S] = out.get(S, 0) + c * v
    return {S: v for S, v in out.items() if v}


def u_rank(d: int, n: int, i: int) -> int:
    """Rank of ``U^{d,n}_i``; zero outside ``1 <= d <= n``, ``0 <= i <= n-d``."""
    if not (1 <= d <= n and 0 <= i <= n - d):
        return 0
    return math.comb(n, d + i) * math.comb(d + i - 1, i)


def _rank_extended(d: int, n: int, i: int) -> int:
    # d = 0 is read as the trivial rank-one piece in position 0
    if d == 0:
        return 1 if i == 0 and n >= 0 else 0
    return u_rank(d, n, i)


def restriction_rank_terms(d: int, n: int, i: int) -> dict:
    """Both sides of the rank identity for restricting ``U^{d,n}_i`` to S_{n-1}.

    ``uses_zero_convention`` is set when the middle summand has arm length
    zero, which has no module of its own.
    """
    if not (1 <= d <= n and 0 <= i <= n - d and n >= 2):
        raise ValueError(f"need 1 <= d <= n, 0 <= i <= n-d, n >= 2; got {(d, n, i)}")
    parts = (u_rank(d, n - 1, i - 1), _rank_extended(d - 1, n - 1, i), u_rank(d, n - 1, i))
    return {"lhs": u_rank(d, n, i), "summands": parts, "rhs": sum(parts),
            "uses_zero_convention": d == 1}


def restriction_rank_identity(d: int, n: int, i: int) -> bool:
    t = restriction_rank_terms(d, n, i)
    return t["lhs"] == t["rhs"]
