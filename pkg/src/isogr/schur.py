"""Schur functor calculus: Littlewood-Richardson products and the exterior
power expansions of ``E (x) F``, ``S^2 E`` and ``Lambda^2 E``."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .diagrams import Partition, down_balanced, enumerate_partitions, right_balanced


@dataclass
class GLRepSum:
    """Formal sum of ``Sigma^alpha`` over a rank ``height_cap`` space."""

    height_cap: int
    terms: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for lam, mult in self.terms.items():
            lam = Partition(lam)
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            if mult and lam.height <= self.height_cap:
                clean[lam] = clean.get(lam, 0) + mult
        self.terms = dict(sorted(clean.items(), reverse=True))

    def __iter__(self) -> Iterator[tuple[Partition, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, lam: Sequence[int]) -> int:
        return self.terms.get(Partition(lam), 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GLRepSum):
            return self.terms == other.terms
        if isinstance(other, Mapping):
            return self.terms == {Partition(k): v for k, v in other.items()}
        return NotImplemented

    def to_json(self) -> list[dict]:
        return [{"partition": list(lam), "multiplicity": m} for lam, m in self.terms.items()]

    @classmethod
    def from_json(cls, data: list[dict], height_cap: int) -> "GLRepSum":
        return cls(height_cap, {Partition(d["partition"]): d["multiplicity"] for d in data})


def _letter_counts(r: int, h: int, cum: list[int], content: Sequence[int], room: int) -> Iterator[list[int]]:
    """Ways to place letters 1..h in row ``r`` respecting the lattice condition.

    ``cum[i]`` is how many copies of letter ``i + 1`` were placed in earlier rows.
    Reading a row right to left meets large letters first, so letter ``i + 1``
    may only be added while its running count stays below that of letter ``i``
    from earlier rows.
    """
    top = min(h, r)
    counts = [0] * h

    def rec(i: int, left: int) -> Iterator[list[int]]:
        if i == top:
            yield counts[:]
            return
        cap = content[i] - cum[i]
        if i > 0:
            cap = min(cap, cum[i - 1] - cum[i])
        for m in range(min(cap, left), -1, -1):
            counts[i] = m
            yield from rec(i + 1, left - m)
        counts[i] = 0

    yield from rec(0, room)


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    h = mu.height
    total = mu.size
    found: Counter[Partition] = Counter()
    unbounded = lam.width + total

    def rec(r: int, prev_row: dict[int, int], prev_end: int, shape: list[int], cum: list[int], used: int) -> None:
        if used == total:
            found[Partition(shape + list(lam[r - 1:]))] += 1
            return
        if r > k:
            return
        base = lam.part(r)
        above_base = lam.part(r - 1) if r > 1 else 0
        room = (prev_end if r > 1 else unbounded) - base
        if room < 0:
            return
        for counts in _letter_counts(r, h, cum, mu, room):
            placed = sum(counts)
            row: dict[int, int] = {}
            col = base + 1
            ok = True
            for letter, m in enumerate(counts, start=1):
                for _ in range(m):
                    if col > above_base and col in prev_row and prev_row[col] >= letter:
                        ok = False
                        break
                    row[col] = letter
                    col += 1
                if not ok:
                    break
            if not ok:
                continue
            if placed == 0 and used < total and base == 0:
                # an empty row with nothing of lam below ends the diagram
                continue
            rec(
                r + 1,
                row,
                base + placed,
                shape + [base + placed],
                [c + m for c, m in zip(cum, counts)],
                used + placed,
            )

    rec(1, {}, 0, [], [0] * h, 0)
    return tuple(sorted(found.items(), reverse=True))


def lr_product(lam: Sequence[int], mu: Sequence[int], k: int) -> GLRepSum:
    """``Sigma^lam (x) Sigma^mu`` on a rank ``k`` space, as a sum of ``Sigma^nu``.

    Coefficients are Littlewood-Richardson numbers counted by LR skew tableaux
    of shape ``nu / lam`` and content ``mu``; terms with more than ``k`` rows
    are never built.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.height > k or mu.height > k:
        raise ValueError(f"heights of {lam} and {mu} must not exceed {k}")
    if mu.size > lam.size:
        lam, mu = mu, lam
    return GLRepSum(k, dict(_lr(lam, mu, k)))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    nu = Partition(nu)
    return lr_product(lam, mu, max(nu.height, len(Partition(lam)), len(Partition(mu)), 1))[nu]


def exterior_of_tensor(q: int) -> list[tuple[Partition, Partition]]:
    """``Lambda^q(E (x) F) = sum over |lam| = q of Sigma^lam E (x) Sigma^{lam^T} F``."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    return [(lam, lam.transpose()) for lam in enumerate_partitions(q)]


def exterior_of_sym2(q: int) -> tuple[Partition, ...]:
    """Summands of ``Lambda^q(S^2 E)``: the right balanced diagrams of size 2q."""
    return right_balanced(2 * q)


def exterior_of_alt2(q: int) -> tuple[Partition, ...]:
    """Summands of ``Lambda^q(Lambda^2 E)``: the down balanced diagrams of size 2q."""
    return down_balanced(2 * q)
