"""Integer partitions, hooks, p-cores and the first-column hook set."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .words import require_coprime


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive row lengths (English notation, rows top down)."""

    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(r < 1 for r in rows):
            raise ValueError(f"rows must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows must be weakly decreasing: {rows}")

    @property
    def size(self) -> int:
        return sum(self.rows)

    def __len__(self):
        return len(self.rows)

    def column_heights(self) -> list[int]:
        if not self.rows:
            return []
        return [sum(1 for r in self.rows if r > j) for j in range(self.rows[0])]

    def boxes(self):
        for i, r in enumerate(self.rows):
            for j in range(r):
                yield i, j

    def __str__(self):
        return " ".join(map(str, self.rows))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Inverse of ``str``: ``"6 5 3"``; the empty string is the empty partition."""
        return cls(tuple(int(x) for x in text.split()))


def hook_lengths(p: Partition) -> list[list[int]]:
    """Hook length of every box, as ragged rows matching ``p.rows`` (0-indexed)."""
    cols = p.column_heights()
    return [[r - j + cols[j] - i - 1 for j in range(r)] for i, r in enumerate(p.rows)]


def is_p_core(p: Partition, q: int) -> bool:
    """True iff no box of `p` has a hook of exactly `q` boxes."""
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    return all(h != q for row in hook_lengths(p) for h in row)


def first_column_hooks(p: Partition) -> frozenset[int]:
    k = len(p.rows)
    return frozenset(r + (k - 1 - i) for i, r in enumerate(p.rows))


def partition_from_hookset(hooks: Iterable[int]) -> Partition:
    """Rebuild the partition whose first-column hook lengths are `hooks`."""
    a = sorted(hooks, reverse=True)
    if len(set(a)) != len(a):
        raise ValueError("hook set has repeated elements")
    if a and a[-1] < 1:
        raise ValueError("hook lengths must be positive")
    k = len(a)
    return Partition(tuple(x - (k - 1 - i) for i, x in enumerate(a)))


def size_from_hookset(hooks: Iterable[int]) -> int:
    """Box count of the partition with first-column hooks `hooks`.

    Every box pairs a rim step in the set with a smaller one outside it,
    which totals ``sum(hooks) - C(|hooks|, 2)``.
    """
    a = set(hooks)
    k = len(a)
    return sum(a) - k * (k - 1) // 2


def gaps(s: int, t: int) -> list[int]:
    """Naturals not of the form ``x*s + y*t`` with ``x, y >= 0``, by sieve."""
    require_coprime(s, t)
    n = s * t
    rep = bytearray(n + 1)
    rep[0] = 1
    for k in range(1, n + 1):
        if (k >= s and rep[k - s]) or (k >= t and rep[k - t]):
            rep[k] = 1
    return [k for k in range(1, n + 1) if not rep[k]]


def is_downset(elements: Iterable[int], s: int, t: int) -> bool:
    """Local closure test: each of ``a - s`` and ``a - t`` is negative or in the set."""
    require_coprime(s, t)
    a = set(elements)
    if any(x < 1 for x in a):
        return False
    for x in a:
        for step in (s, t):
            y = x - step
            if y >= 0 and y not in a:
                return False
    return True


@dataclass(frozen=True)
class Downset:
    """First-column hook set of an (s, t)-core."""

    elements: frozenset[int]
    s: int
    t: int

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))
        if not is_downset(self.elements, self.s, self.t):
            raise ValueError(
                f"{format_hookset(self.elements)!r} is not a downset for ({self.s}, {self.t})"
            )

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))


def format_hookset(hooks: Iterable[int]) -> str:
    return ",".join(str(x) for x in sorted(hooks))


def parse_hookset(text: str) -> frozenset[int]:
    text = text.strip()
    return frozenset(int(x) for x in text.split(",")) if text else frozenset()


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of `n` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.rows)
