"""Young diagrams: transpose, diagonal, hook notation and balanced diagrams.

Partitions are stored without trailing zeros. Hook notation records, for each
diagonal box ``(i, i)``, the arm and leg lengths counted *including* the
diagonal box itself, so that a single row ``(t)`` is ``(t|1)`` and a single
column of height ``t`` is ``(1|t)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (zeros are dropped)."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for prev, cur in zip(parts, parts[1:]):
            if cur > prev:
                raise ValueError(f"partition must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"partition entries must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"[3,1]"``, ``"3,1"``, ``"[]"`` or hook form ``"(3,2|2,1)"``."""
        text = text.strip()
        if "|" in text:
            return from_hook(HookForm.parse(text))
        body = text.strip("[]() ")
        if not body:
            return cls()
        return cls(int(tok) for tok in body.split(","))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    @property
    def width(self) -> int:
        return self[0] if self else 0

    def part(self, i: int) -> int:
        """1-based row length, zero past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if len(self) > length:
            raise ValueError(f"{self} has more than {length} rows")
        return tuple(self) + (0,) * (length - len(self))

    def transpose(self) -> "Partition":
        return transpose(self)

    def contains(self, other: Sequence[int]) -> bool:
        return len(other) <= len(self) and all(a <= b for a, b in zip(other, self))


def transpose(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam.width + 1))


def diagonal_length(lam: Sequence[int]) -> int:
    return sum(1 for i, p in enumerate(lam, start=1) if p >= i)


@dataclass(frozen=True)
class HookForm:
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.arms) != len(self.legs):
            raise ValueError("arms and legs must have equal length")
        for seq in (self.arms, self.legs):
            if any(x <= 0 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"hook sequences must be strictly decreasing positive integers: {seq}")

    @classmethod
    def parse(cls, text: str) -> "HookForm":
        m = re.fullmatch(r"\s*\(?\s*([\d,\s]*)\|([\d,\s]*)\)?\s*", text)
        if m is None:
            raise ValueError(f"not a hook form: {text!r}")
        arms, legs = (tuple(int(t) for t in g.split(",") if t.strip()) for g in m.groups())
        return cls(arms, legs)

    @property
    def size(self) -> int:
        return sum(self.arms) + sum(self.legs) - len(self.arms)

    def transpose(self) -> "HookForm":
        return HookForm(self.legs, self.arms)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.arms))}|{','.join(map(str, self.legs))})"


def to_hook(lam: Sequence[int]) -> HookForm:
    lam = Partition(lam)
    lt = transpose(lam)
    d = diagonal_length(lam)
    return HookForm(
        tuple(lam[i] - i for i in range(d)),
        tuple(lt[i] - i for i in range(d)),
    )


def from_hook(h: HookForm) -> Partition:
    d = len(h.arms)
    # column lengths of the first d columns, rows below the diagonal block
    cols = [h.legs[i] + i for i in range(d)]
    rows = [h.arms[i] + i for i in range(d)]
    below = max(cols, default=0)
    for r in range(d + 1, below + 1):
        rows.append(sum(1 for c in cols if c >= r))
    return Partition(rows)


def hook(arm: int, leg: int) -> Partition:
    """The single-hook diagram ``(arm|leg)``."""
    return from_hook(HookForm((arm,), (leg,)))


def _strict_partitions(total: int, max_part: int, min_part: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), min_part - 1, -1):
        for rest in _strict_partitions(total - first, first - 1, min_part):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_balanced(s: int, size: int) -> tuple[Partition, ...]:
    """All diagrams of the given size whose hook arms exceed legs by ``s``.

    ``s = +1`` gives the right balanced diagrams, ``s = -1`` the down balanced
    ones. Output is lexicographically decreasing.
    """
    if s not in (1, -1):
        raise ValueError("s must be +1 or -1")
    if size < 0 or size % 2:
        raise ValueError(f"balanced diagrams have even size, got {size}")
    half = size // 2
    out = []
    # the smaller of each (arm, leg) pair runs over strict partitions of size/2
    for small in _strict_partitions(half, half, 1):
        big = tuple(x + 1 for x in small)
        h = HookForm(big, small) if s == 1 else HookForm(small, big)
        out.append(from_hook(h))
    return tuple(sorted(out, reverse=True))


def right_balanced(size: int) -> tuple[Partition, ...]:
    return enumerate_balanced(1, size)


def down_balanced(size: int) -> tuple[Partition, ...]:
    return enumerate_balanced(-1, size)


def _partitions(size: int, max_height: int, max_width: int) -> Iterator[tuple[int, ...]]:
    if size == 0:
        yield ()
        return
    if max_height == 0:
        return
    for first in range(min(size, max_width), 0, -1):
        for rest in _partitions(size - first, max_height - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(size: int, max_height: int | None = None, max_width: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``size`` fitting in a box, lexicographically decreasing."""
    h = size if max_height is None else max_height
    w = size if max_width is None else max_width
    if size < 0 or h < 0 or w < 0:
        raise ValueError("bounds must be nonnegative")
    return tuple(Partition(p) for p in _partitions(size, h, w))
