"""Restriction of ``Sigma^lambda`` from ``GL(N)`` to ``Sp(N)`` or ``SO(N)``.

Two routes, both exact:

* Littlewood's rule, valid while ``height(lambda) <= m`` (the rank of the
  target group): the multiplicity of ``beta`` is the sum of
  ``c^lambda_{beta, delta}`` over ``delta`` with even rows (orthogonal) or
  even columns (symplectic). For ``SO(2m)`` a ``beta`` with ``m`` rows splits
  into ``beta`` and its mirror with negated last entry.
* Outside that range the weights of ``Sigma^lambda`` are restricted to the
  maximal torus and decomposed with the Brauer-Klimyk alternating sum.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .diagrams import Partition, enumerate_partitions, transpose
from .schur import lr_product
from .weights import GroupType, IrrepMultiset, Weight, is_dominant, negative_root_count, rho

KINDS = ("symplectic", "orthogonal_odd", "orthogonal_even")


class OutOfStableRange(ValueError):
    """``height(lambda)`` exceeds the rank of the target group."""


@dataclass(frozen=True)
class BranchTarget:
    kind: str
    m: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown target kind {self.kind!r}")
        if self.m < 1:
            raise ValueError("target rank must be positive")

    @classmethod
    def parse(cls, text: str) -> "BranchTarget":
        """``sp3`` is Sp(6); ``so7`` is SO(7); ``so8`` is SO(8)."""
        m = re.fullmatch(r"\s*(sp|so)(\d+)\s*", text.lower())
        if m is None:
            raise ValueError(f"not a target: {text!r} (expected sp<m> or so<N>)")
        num = int(m.group(2))
        if m.group(1) == "sp":
            return cls("symplectic", num)
        return cls("orthogonal_odd" if num % 2 else "orthogonal_even", num // 2)

    @classmethod
    def for_group(cls, g: GroupType) -> "BranchTarget":
        return cls({"C": "symplectic", "B": "orthogonal_odd", "D": "orthogonal_even"}[g.family], g.rank)

    @property
    def group(self) -> GroupType:
        return GroupType({"symplectic": "C", "orthogonal_odd": "B", "orthogonal_even": "D"}[self.kind], self.m)

    @property
    def dim(self) -> int:
        return 2 * self.m + 1 if self.kind == "orthogonal_odd" else 2 * self.m

    def __str__(self) -> str:
        return f"sp{self.m}" if self.kind == "symplectic" else f"so{self.dim}"


def _even_shapes(size: int, symplectic: bool, inside: Partition) -> list[Partition]:
    out = []
    for d in enumerate_partitions(size, inside.height, inside.width):
        if not inside.contains(d):
            continue
        check = transpose(d) if symplectic else d
        if all(p % 2 == 0 for p in check):
            out.append(d)
    return out


def _from_partition(beta: Partition, t: BranchTarget) -> list[Weight]:
    w = list(beta.padded(t.m))
    out = [Weight.of(w)]
    if t.kind == "orthogonal_even" and w[-1] > 0:
        out.append(Weight.of(w[:-1] + [-w[-1]]))
    return out


@lru_cache(maxsize=None)
def _littlewood(lam: Partition, t: BranchTarget) -> tuple[tuple[Weight, int], ...]:
    h = lam.height
    mults: Counter[Partition] = Counter()
    for dsize in range(0, lam.size + 1, 2):
        for delta in _even_shapes(dsize, t.kind == "symplectic", lam):
            for beta in enumerate_partitions(lam.size - dsize, h, lam.width):
                if not lam.contains(beta):
                    continue
                c = lr_product(beta, delta, h)[lam]
                if c:
                    mults[beta] += c
    out: Counter[Weight] = Counter()
    for beta, c in mults.items():
        for w in _from_partition(beta, t):
            out[w] += c
    return tuple(sorted(out.items(), reverse=True))


def littlewood_restrict(lam, t: BranchTarget) -> IrrepMultiset:
    lam = Partition(lam)
    if lam.height > t.m:
        raise OutOfStableRange(f"height({lam}) = {lam.height} exceeds rank {t.m} of {t}")
    return IrrepMultiset(dict(_littlewood(lam, t)))


def _defining_weights(t: BranchTarget) -> list[tuple[int, ...]]:
    """Torus weights (doubled) of the defining representation, one per basis letter."""
    out = []
    for i in range(t.m):
        v = [0] * t.m
        v[i] = 2
        out.append(tuple(v))
    for i in reversed(range(t.m)):
        v = [0] * t.m
        v[i] = -2
        out.append(tuple(v))
    if t.kind == "orthogonal_odd":
        out.insert(t.m, (0,) * t.m)
    return out


@lru_cache(maxsize=None)
def _schur_weights(lam: Partition, letters: tuple[tuple[int, ...], ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Weight multiset of ``Sigma^lam`` of a space with the given torus weights.

    Peels off the horizontal strip occupied by the last letter.
    """
    if lam.height > len(letters):
        return ()
    zero = (0,) * len(letters[0])
    if not lam:
        return ((zero, 1),)
    if len(letters) == 1:
        if lam.height > 1:
            return ()
        return ((tuple(x * lam[0] for x in letters[0]), 1),)
    last = letters[-1]
    rest = letters[:-1]
    out: Counter[tuple[int, ...]] = Counter()
    for mu in _strip_removals(lam):
        strip = lam.size - mu.size
        shift = tuple(x * strip for x in last)
        for wt, c in _schur_weights(mu, rest):
            out[tuple(a + b for a, b in zip(wt, shift))] += c
    return tuple(out.items())


def _strip_removals(lam: Partition) -> list[Partition]:
    """All ``mu`` with ``lam / mu`` a horizontal strip."""
    ranges = [range(lam.part(i + 2), lam[i] + 1) for i in range(lam.height)]
    return [Partition(mu) for mu in product(*ranges)]


@lru_cache(maxsize=None)
def _rho_orbit(g: GroupType) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Pairs ``(w rho, sign(w))`` over the Weyl group, doubled coordinates."""
    r = rho(g).doubled
    seen = {}
    for perm in permutations(r):
        for signs in product((1, -1), repeat=g.rank):
            if g.family == "D" and signs.count(-1) % 2:
                continue
            v = tuple(s * x for s, x in zip(signs, perm))
            if v not in seen:
                seen[v] = -1 if negative_root_count(Weight(v), g) % 2 else 1
    return tuple(seen.items())


@lru_cache(maxsize=None)
def _brauer_klimyk(lam: Partition, t: BranchTarget) -> tuple[tuple[Weight, int], ...]:
    g = t.group
    weights = dict(_schur_weights(lam, tuple(_defining_weights(t))))
    r = rho(g).doubled
    orbit = _rho_orbit(g)
    out = {}
    for wt in weights:
        w = Weight(wt)
        if not is_dominant(w, g):
            continue
        total = 0
        for v, sign in orbit:
            shifted = tuple(a + b - c for a, b, c in zip(wt, r, v))
            total += sign * weights.get(shifted, 0)
        if total:
            out[w] = total
    return tuple(sorted(out.items(), reverse=True))


def restrict_by_weights(lam, t: BranchTarget) -> IrrepMultiset:
    """Exact restriction for any ``lam``, via torus weights."""
    return IrrepMultiset(dict(_brauer_klimyk(Partition(lam), t)))


def _check_bounds(lam: Partition, t: BranchTarget, result: IrrepMultiset) -> None:
    for w, mult in result.items():
        assert mult > 0, (lam, t, w)
        assert w.is_integral, (lam, t, w)
        b = w.ints()
        for i in range(t.m - 1):
            assert b[i] <= lam.part(i + 1), (lam, t, w)
        assert abs(b[-1]) <= lam.part(t.m), (lam, t, w)
    if lam.height <= t.m:
        top = Weight.of(lam.padded(t.m))
        assert result.get(top, 0) == 1, (lam, t)


def restrict(lam, t: BranchTarget, beyond_stable: bool = True) -> IrrepMultiset:
    """Decompose ``Sigma^lam`` of the defining representation of ``t``.

    Inside the stable range Littlewood's rule is used. Outside it, the weight
    route is used when ``beyond_stable`` is set; otherwise
    :class:`OutOfStableRange` is raised.
    """
    lam = Partition(lam)
    if lam.height <= t.m:
        result = littlewood_restrict(lam, t)
    elif not beyond_stable:
        raise OutOfStableRange(f"height({lam}) = {lam.height} exceeds rank {t.m} of {t}")
    else:
        result = restrict_by_weights(lam, t)
    _check_bounds(lam, t, result)
    return result
