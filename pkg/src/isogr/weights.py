"""Weights of the classical groups of types B, C and D.

Weights live in the epsilon basis. Entries are half-integers in types B and
D, so a :class:`Weight` stores twice its entries as integers; nothing here
ever touches floating point.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

FAMILIES = ("B", "C", "D")
# twice the constant shifting rho: rho = (n - eps, ..., 1 - eps)
_EPS2 = {"C": 0, "B": 1, "D": 2}
_MIN_RANK = {"B": 2, "C": 2, "D": 3}


@dataclass(frozen=True)
class GroupType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")

    @classmethod
    def parse(cls, text: str) -> "GroupType":
        m = re.fullmatch(r"\s*([BCDbcd])\s*(\d+)\s*", text)
        if m is None:
            raise ValueError(f"not a group name: {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def is_standard(self) -> bool:
        """Rank meets the usual lower bound (2 for B and C, 3 for D)."""
        return self.rank >= _MIN_RANK[self.family]

    @property
    def eps(self) -> Fraction:
        return Fraction(_EPS2[self.family], 2)

    def rho(self) -> "Weight":
        return rho(self)

    @property
    def weyl_order(self) -> int:
        n = self.rank
        order = 2**n * prod(range(1, n + 1))
        return order // 2 if self.family == "D" else order


@dataclass(frozen=True, order=True)
class Weight:
    """A weight in epsilon coordinates, stored doubled."""

    doubled: tuple[int, ...]

    @classmethod
    def of(cls, entries: Iterable) -> "Weight":
        out = []
        for e in entries:
            twice = Fraction(e) * 2
            if twice.denominator != 1:
                raise ValueError(f"{e} is not a half-integer")
            out.append(int(twice))
        return cls(tuple(out))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        body = text.strip().strip("[]() ")
        if not body:
            return cls(())
        return cls.of(Fraction(tok.strip()) for tok in body.split(","))

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled)

    @property
    def rank(self) -> int:
        return len(self.doubled)

    @property
    def is_integral(self) -> bool:
        return all(d % 2 == 0 for d in self.doubled)

    def ints(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValueError(f"{self} is not integral")
        return tuple(d // 2 for d in self.doubled)

    def __add__(self, other: "Weight") -> "Weight":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "Weight") -> "Weight":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return Weight(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.entries) + "]"


def zero_weight(n: int) -> Weight:
    return Weight((0,) * n)


class IrrepMultiset(Counter):
    """Multiplicities of irreducible representations keyed by highest weight."""

    def canonical(self) -> list[tuple[Weight, int]]:
        return sorted(((w, m) for w, m in self.items() if m > 0), reverse=True)

    def total(self) -> int:
        return sum(m for m in self.values() if m > 0)

    def __pos__(self) -> "IrrepMultiset":
        return IrrepMultiset({w: m for w, m in self.items() if m > 0})


@lru_cache(maxsize=None)
def rho(g: GroupType) -> Weight:
    n, e2 = g.rank, _EPS2[g.family]
    return Weight(tuple(2 * (n - i) - e2 for i in range(n)))


def positive_roots(g: GroupType) -> list[tuple[int, ...]]:
    """Positive roots as integer vectors in the epsilon basis."""
    n = g.rank
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            for sign in (-1, 1):
                v = [0] * n
                v[i], v[j] = 1, sign
                roots.append(tuple(v))
    if g.family in ("B", "C"):
        for i in range(n):
            v = [0] * n
            v[i] = 1 if g.family == "B" else 2
            roots.append(tuple(v))
    return roots


def is_singular(gamma: Weight, g: GroupType) -> bool:
    """True iff a nontrivial Weyl group element fixes ``gamma``."""
    absval = [abs(d) for d in gamma.doubled]
    if len(set(absval)) < len(absval):
        return True
    return g.family != "D" and 0 in absval


def is_dominant(w: Weight, g: GroupType) -> bool:
    v = w.doubled
    if len(v) != g.rank:
        return False
    if any(a < b for a, b in zip(v, v[1:])):
        return False
    if g.family == "D":
        return g.rank < 2 or v[-2] >= abs(v[-1])
    return v[-1] >= 0 if v else True


def _simple_step(v: list[int], family: str) -> bool:
    """Apply the first simple reflection that moves ``v`` towards the chamber."""
    n = len(v)
    for i in range(n - 1):
        if v[i] < v[i + 1]:
            v[i], v[i + 1] = v[i + 1], v[i]
            return True
    if family == "D":
        if n >= 2 and v[-2] + v[-1] < 0:
            v[-2], v[-1] = -v[-1], -v[-2]
            return True
    elif v and v[-1] < 0:
        v[-1] = -v[-1]
        return True
    return False


@dataclass(frozen=True)
class Chamber:
    """Result of moving a nonsingular weight into the dominant chamber."""

    length: int
    weight: Weight


def dominantize(gamma: Weight, g: GroupType) -> Chamber | None:
    """Dominant representative of a nonsingular ``gamma`` and the Weyl length
    of the element used; ``None`` when ``gamma`` is singular."""
    if gamma.rank != g.rank:
        raise ValueError(f"weight {gamma} does not have rank {g.rank}")
    if is_singular(gamma, g):
        return None
    v = list(gamma.doubled)
    length = 0
    while _simple_step(v, g.family):
        length += 1
    return Chamber(length, Weight(tuple(v)))


def negative_root_count(gamma: Weight, g: GroupType) -> int:
    """Number of positive roots pairing negatively with ``gamma``."""
    v = gamma.doubled
    return sum(1 for a in positive_roots(g) if sum(x * y for x, y in zip(a, v)) < 0)


def inversion_count(seq: Sequence) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] < seq[j])


def weyl_dim(w: Weight, g: GroupType) -> int:
    """Dimension of the irreducible representation with highest weight ``w``."""
    if not is_dominant(w, g):
        raise ValueError(f"{w} is not dominant for {g}")
    r = rho(g).doubled
    num = den = 1
    for a in positive_roots(g):
        num *= sum(x * (y + z) for x, y, z in zip(a, w.doubled, r))
        den *= sum(x * z for x, z in zip(a, r))
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def gl_dim(lam: Sequence[int], r: int) -> int:
    """Dimension of ``Sigma^lam`` applied to a rank ``r`` space."""
    lam = list(lam)
    if len(lam) > r:
        return 0
    lam = lam + [0] * (r - len(lam))
    num = prod(lam[i] - lam[j] + j - i for i in range(r) for j in range(i + 1, r))
    den = prod(j - i for i in range(r) for j in range(i + 1, r))
    return num // den


def _check_mixed(w: Weight, g: GroupType) -> None:
    parities = {d % 2 for d in w.doubled}
    if len(parities) > 1:
        raise ValueError(f"{w} mixes integral and half-integral entries")
    if g.family == "C" and parities == {1}:
        raise ValueError(f"{w} is not integral; type C weights are")


def fundamental_coords(w: Weight, g: GroupType) -> tuple[int, ...]:
    """Coefficients of a dominant weight over the fundamental weights."""
    if not is_dominant(w, g):
        raise ValueError(f"{w} is not dominant for {g}")
    _check_mixed(w, g)
    v, n = w.doubled, g.rank
    diffs = [(v[i] - v[i + 1]) // 2 for i in range(n - 1)]
    if g.family == "C":
        return tuple(diffs + [v[-1] // 2])
    if g.family == "B":
        return tuple(diffs + [v[-1]])
    if n == 1:
        return (v[0] // 2,)
    return tuple(diffs + [(v[-2] + v[-1]) // 2])


def from_fundamental(coords: Sequence[int], g: GroupType) -> Weight:
    n = g.rank
    if len(coords) != n or any(c < 0 for c in coords):
        raise ValueError("need one nonnegative coefficient per fundamental weight")
    v = [0] * n
    if g.family == "C":
        for i in range(n):
            v[i] = 2 * sum(coords[i:])
    elif g.family == "B":
        for i in range(n):
            v[i] = 2 * sum(coords[i:n - 1]) + coords[n - 1]
    else:
        if n == 1:
            return Weight((2 * coords[0],))
        for i in range(n - 1):
            v[i] = 2 * sum(coords[i:n - 2]) + coords[n - 2] + coords[n - 1]
        v[n - 1] = coords[n - 1] - coords[n - 2]
    return Weight(tuple(v))


def format_fundamental(coords: Sequence[int]) -> str:
    terms = [f"w{i}" if c == 1 else f"{c}*w{i}" for i, c in enumerate(coords, start=1) if c]
    return "+".join(terms) if terms else "0"


def parse_fundamental(text: str, g: GroupType) -> Weight:
    coords = [0] * g.rank
    text = text.replace(" ", "")
    if text not in ("", "0"):
        for term in text.split("+"):
            m = re.fullmatch(r"(?:(\d+)\*)?w(\d+)", term)
            if m is None:
                raise ValueError(f"bad fundamental term {term!r}")
            idx = int(m.group(2))
            if not 1 <= idx <= g.rank:
                raise ValueError(f"w{idx} out of range for {g}")
            coords[idx - 1] += int(m.group(1) or 1)
    return from_fundamental(coords, g)


def grassmannian_name(family: str, k: int, n: int) -> str:
    if family == "C":
        return f"IGr({k}, {2 * n})"
    if family == "B":
        return f"OGr({k}, {2 * n + 1})"
    if k >= n - 1:
        return f"OGr_+({n}, {2 * n})"
    return f"OGr({k}, {2 * n})"


@dataclass(frozen=True)
class Classification:
    kind: str  # special, curious, nonspecial, out_of_tool_scope
    attributes: tuple[str, ...]
    name: str

    def __str__(self) -> str:
        extra = f" {{{', '.join(self.attributes)}}}" if self.attributes else ""
        return f"{self.kind}{extra} ({self.name})"


def classify_grassmannian(family: str, k: int, n: int) -> Classification:
    """Sort ``G/P_k`` into special / curious / nonspecial."""
    family = family.upper()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    name = grassmannian_name(family, k, n)
    if n < _MIN_RANK[family]:
        return Classification("out_of_tool_scope", (), name)
    attrs = []
    if family == "B":
        table = {"minuscule": k == n, "cominuscule": k == 1, "adjoint": k == 2, "coadjoint": k == 1}
    elif family == "C":
        table = {"minuscule": k == 1, "cominuscule": k == n, "adjoint": k == 1, "coadjoint": k == 2}
    else:
        spinor = k >= n - 1
        table = {
            "minuscule": k == 1 or spinor,
            "cominuscule": k == 1 or spinor,
            "adjoint": k == 2 and n >= 4,
            "coadjoint": k == 2 and n >= 4,
        }
    attrs = [key for key, hit in table.items() if hit]
    if attrs:
        return Classification("special", tuple(attrs), name)
    if family == "B" and k == n - 1 and n >= 4:
        return Classification("curious", (), name)
    return Classification("nonspecial", (), name)

