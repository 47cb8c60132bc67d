from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class Verdict:
    name: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "details": _jsonable(self.details)}


@dataclass
class VerificationReport:
    """Named verdicts; the report passes iff every verdict does."""

    title: str
    verdicts: list[Verdict] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def __bool__(self) -> bool:
        return self.passed

    def add(self, name: str, passed: bool, **details) -> Verdict:
        v = Verdict(name, bool(passed), details)
        self.verdicts.append(v)
        return v

    def extend(self, other: VerificationReport, prefix: str | None = None) -> None:
        pre = prefix if prefix is not None else other.title
        for v in other.verdicts:
            self.verdicts.append(Verdict(f"{pre}/{v.name}" if pre else v.name, v.passed, v.details))

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def to_dict(self) -> dict[str, Any]:
        return {"title": self.title, "passed": self.passed,
                "verdicts": [v.to_dict() for v in self.verdicts]}

    def lines(self) -> list[str]:
        out = [f"{'PASS' if self.passed else 'FAIL'} {self.title}"]
        for v in self.verdicts:
            out.append(f"  {'ok  ' if v.passed else 'FAIL'} {v.name}")
        return out


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("HOOK_SYZYGY_THREADS", "1")))
    except ValueError:
        return 1


def fan_out(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Map ``fn`` over ``items``, in order, on at most ``HOOK_SYZYGY_THREADS`` threads."""
    items = list(items)
    workers = min(thread_cap(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
