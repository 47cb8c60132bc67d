"""Hook-shaped tableaux with distinct entries.

A tableau of shape ``(d, 1^i)`` is stored as its first column
``a_0, ..., a_i`` (top to bottom) and its arm ``b_1, ..., b_{d-1}`` (the
first row after the corner).  The text form lists the first row, a bar,
then the rest of the first column: ``"12|34"`` has corner 1, arm (2,),
column tail (3, 4).  Entries above 9 switch a part to comma separation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

__all__ = [
    "HookShape",
    "HookTableau",
    "InjectionMap",
    "is_standard",
    "enumerate_standard",
    "hook_rank",
    "remove_box",
    "apply_injection",
]


@dataclass(frozen=True)
class HookShape:
    d: int
    i: int

    def __post_init__(self):
        if self.d < 1 or self.i < 0:
            raise ValueError(f"invalid hook shape d={self.d}, i={self.i}")

    @property
    def partition(self) -> tuple[int, ...]:
        return (self.d,) + (1,) * self.i

    @property
    def size(self) -> int:
        return self.d + self.i


@dataclass(frozen=True, order=True)
class HookTableau:
    column: tuple[int, ...]
    arm: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "column", tuple(self.column))
        object.__setattr__(self, "arm", tuple(self.arm))
        if not self.column:
            raise ValueError("a hook tableau needs a corner box")
        entries = self.column + self.arm
        if len(set(entries)) != len(entries):
            raise ValueError(f"repeated entries in tableau {entries}")
        if any(not 1 <= e <= self.n for e in entries):
            raise ValueError(f"entries {entries} not all in [1, {self.n}]")

    @classmethod
    def parse(cls, text: str, n: int) -> HookTableau:
        """Read the ``row|tail`` notation, e.g. ``"12|3,4"`` or ``"215|34"``."""
        row_txt, _, tail_txt = text.strip().partition("|")

        def part(s: str) -> tuple[int, ...]:
            if not s:
                return ()
            if "," in s:
                return tuple(int(x) for x in s.split(","))
            return tuple(int(ch) for ch in s)

        row, tail = part(row_txt), part(tail_txt)
        if not row:
            raise ValueError(f"empty first row in {text!r}")
        return cls((row[0],) + tail, row[1:], n)

    @property
    def d(self) -> int:
        return len(self.arm) + 1

    @property
    def i(self) -> int:
        return len(self.column) - 1

    @property
    def shape(self) -> HookShape:
        return HookShape(self.d, self.i)

    @property
    def corner(self) -> int:
        return self.column[0]

    @property
    def row(self) -> tuple[int, ...]:
        return (self.column[0],) + self.arm

    @property
    def entries(self) -> frozenset[int]:
        return frozenset(self.column + self.arm)

    def sort_key(self) -> tuple[int, ...]:
        # canonical order: lexicographic on (a_0, ..., a_i, b_1, ..., b_{d-1})
        return self.column + self.arm

    def label(self) -> str:
        def fmt(xs: Sequence[int]) -> str:
            if any(x > 9 for x in xs):
                return ",".join(map(str, xs))
            return "".join(map(str, xs))

        tail = self.column[1:]
        return fmt(self.row) + ("|" + fmt(tail) if tail else "")

    def __str__(self) -> str:
        return self.label()


def is_standard(T: HookTableau) -> bool:
    col, row = T.column, T.row
    return (all(col[k] < col[k + 1] for k in range(len(col) - 1))
            and all(row[k] < row[k + 1] for k in range(len(row) - 1)))


def enumerate_standard(d: int, i: int, n: int) -> list[HookTableau]:
    """Standard tableaux of shape ``(d, 1^i)`` with entries in ``[n]``.

    The corner of a standard hook is the smallest entry; the rest of the
    entry set splits freely into column tail and arm.
    """
    if d < 1 or i < 0 or d + i > n:
        return []
    out = []
    for entries in combinations(range(1, n + 1), d + i):
        corner, rest = entries[0], entries[1:]
        for tail in combinations(rest, i):
            arm = tuple(x for x in rest if x not in tail)
            out.append(HookTableau((corner,) + tail, arm, n))
    out.sort(key=HookTableau.sort_key)
    return out


def hook_rank(d: int, i: int) -> int:
    """Rank of the Specht module of the hook ``(d, 1^i)``."""
    if d < 1 or i < 0:
        raise ValueError(f"invalid hook shape d={d}, i={i}")
    return math.comb(d + i - 1, i)


def remove_box(T: HookTableau, j: int) -> HookTableau:
    """Delete ``a_j`` from the first column and slide the boxes below it up.

    For ``j = 0`` the old ``a_1`` becomes the corner.
    """
    if T.i < 1:
        raise ValueError("cannot remove a column box from a one-row tableau")
    if not 0 <= j <= T.i:
        raise IndexError(f"column index {j} outside 0..{T.i}")
    return HookTableau(T.column[:j] + T.column[j + 1:], T.arm, T.n)


@dataclass(frozen=True)
class InjectionMap:
    """An injection ``[n] -> [m]`` given by its images ``eps(1), ..., eps(n)``."""

    values: tuple[int, ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(set(self.values)) != len(self.values):
            raise ValueError(f"{self.values} is not injective")
        if any(not 1 <= v <= self.m for v in self.values):
            raise ValueError(f"images {self.values} not in [1, {self.m}]")

    @classmethod
    def identity(cls, n: int) -> InjectionMap:
        return cls(tuple(range(1, n + 1)), n)

    @classmethod
    def inclusion(cls, n: int, m: int) -> InjectionMap:
        return cls(tuple(range(1, n + 1)), m)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, k: int) -> int:
        return self.values[k - 1]

    def compose(self, first: InjectionMap) -> InjectionMap:
        """``self o first``: apply ``first`` and then ``self``."""
        if first.m != self.n:
            raise ValueError(f"cannot compose [{first.n}]->[{first.m}] with [{self.n}]->[{self.m}]")
        return InjectionMap(tuple(self(v) for v in first.values), self.m)

    def is_order_preserving(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))


def apply_injection(eps: InjectionMap, T: HookTableau) -> HookTableau:
    if T.n != eps.n:
        raise ValueError(f"tableau on [{T.n}] but injection from [{eps.n}]")
    return HookTableau(tuple(eps(a) for a in T.column), tuple(eps(b) for b in T.arm), eps.m)
