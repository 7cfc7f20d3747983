"""Slow, obviously-correct reference computations used by the test suite.

Nothing in here is called by the production modules. Each routine takes a
different path from its production counterpart:

* LR coefficients by filling every candidate skew shape box by box and
  checking the lattice condition at the end;
* irreducible characters as a quotient of Weyl alternants, divided one root
  factor at a time;
* restriction from ``GL(N)`` by greedily peeling highest weights off the
  restricted Schur character;
* dominantization by scanning the whole Weyl orbit and a breadth-first search
  over simple reflections.

All exponent vectors are doubled so that half-integral weights stay integral.
"""

from __future__ import annotations

import heapq
from collections import Counter, deque
from itertools import permutations, product
from typing import Iterator, Sequence

from .diagrams import Partition, enumerate_partitions
from .weights import GroupType, IrrepMultiset, Weight, rho

LR_CAP = 12
CHAR_RANK_CAP = 4
BRANCH_RANK_CAP = 3
ORBIT_RANK_CAP = 3


class OracleCapExceeded(ValueError):
    pass


# --- Littlewood-Richardson by brute force ----------------------------------


def _skew_boxes(nu: Sequence[int], lam: Sequence[int]) -> list[tuple[int, int]]:
    lam = list(lam) + [0] * (len(nu) - len(lam))
    return [(r, c) for r in range(len(nu)) for c in range(lam[r], nu[r])]


def _fillings(boxes: list[tuple[int, int]], letters: int) -> Iterator[dict]:
    filling: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> Iterator[dict]:
        if idx == len(boxes):
            yield dict(filling)
            return
        r, c = boxes[idx]
        lo = 1
        if (r, c - 1) in filling:
            lo = max(lo, filling[(r, c - 1)])
        if (r - 1, c) in filling:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for letter in range(lo, letters + 1):
            filling[(r, c)] = letter
            yield from rec(idx + 1)
            del filling[(r, c)]

    yield from rec(0)


def _is_lattice(word: list[int]) -> bool:
    seen = Counter()
    for x in word:
        seen[x] += 1
        if x > 1 and seen[x] > seen[x - 1]:
            return False
    return True


def lr_by_tableaux(lam: Sequence[int], mu: Sequence[int], cap: int = LR_CAP) -> dict[Partition, int]:
    lam, mu = Partition(lam), Partition(mu)
    if lam.size + mu.size > cap:
        raise OracleCapExceeded(f"|lam| + |mu| = {lam.size + mu.size} > {cap}")
    out = {}
    for nu in enumerate_partitions(lam.size + mu.size):
        if not nu.contains(lam):
            continue
        boxes = _skew_boxes(nu, lam)
        count = 0
        for f in _fillings(boxes, max(mu.height, 1)):
            content = Counter(f.values())
            if any(content[i + 1] != mu[i] for i in range(mu.height)):
                continue
            word = [f[(r, c)] for r in range(len(nu)) for c in reversed(range(nu[r])) if (r, c) in f]
            if _is_lattice(word):
                count += 1
        if count:
            out[nu] = count
    return out


# --- Weyl group as signed permutations --------------------------------------


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def weyl_group(g: GroupType) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Elements as ``(perm, signs, det)``; ``w(v)_i = signs[i] * v[perm[i]]``."""
    out = []
    for perm in permutations(range(g.rank)):
        ps = _perm_sign(perm)
        for signs in product((1, -1), repeat=g.rank):
            negs = signs.count(-1)
            if g.family == "D" and negs % 2:
                continue
            out.append((perm, signs, ps * (-1) ** negs))
    return out


def _act(w, v: Sequence[int]) -> tuple[int, ...]:
    perm, signs, _ = w
    return tuple(s * v[p] for p, s in zip(perm, signs))


# --- characters --------------------------------------------------------------

LaurentCharacter = dict  # doubled exponent vector -> integer coefficient


def _alternant(v: Sequence[int], g: GroupType) -> Counter:
    out = Counter()
    for w in weyl_group(g):
        out[_act(w, v)] += w[2]
    return Counter({e: c for e, c in out.items() if c})


def _divide_by_root(poly: Counter, alpha: tuple[int, ...]) -> Counter:
    """Exact quotient of ``poly`` by ``e^{alpha/2} - e^{-alpha/2}``.

    Exponents are doubled, so ``alpha`` here is the doubled root and
    ``alpha/2`` is the plain root vector.
    """
    half = tuple(a // 2 for a in alpha)
    # Along each line e + Z*alpha, divide by (t - 1) from the top down; the
    # result is then shifted by alpha/2.
    key = lambda e: sum(x * y for x, y in zip(e, alpha))  # noqa: E731
    floor = min((key(e) for e in poly), default=0)
    rest = Counter(poly)
    quot = Counter()
    heap = [(-key(e), e) for e in rest]
    heapq.heapify(heap)
    while heap:
        _, top = heapq.heappop(heap)
        c = rest.pop(top, 0)
        if not c:
            continue
        q_exp = tuple(x - y for x, y in zip(top, alpha))
        if key(q_exp) < floor:
            raise ArithmeticError("not divisible by the root factor")
        quot[q_exp] += c
        if q_exp not in rest:
            heapq.heappush(heap, (-key(q_exp), q_exp))
        rest[q_exp] += c
    shifted = Counter({tuple(x + y for x, y in zip(e, half)): c for e, c in quot.items() if c})
    return shifted


def _doubled_positive_roots(g: GroupType) -> list[tuple[int, ...]]:
    n = g.rank
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            for s in (1, -1):
                v = [0] * n
                v[i], v[j] = 2, 2 * s
                roots.append(tuple(v))
        if g.family == "B":
            v = [0] * n
            v[i] = 2
            roots.append(tuple(v))
        elif g.family == "C":
            v = [0] * n
            v[i] = 4
            roots.append(tuple(v))
    return roots


def character(w: Weight, g: GroupType) -> LaurentCharacter:
    """Character of the irreducible representation of highest weight ``w``."""
    if g.rank > CHAR_RANK_CAP:
        raise OracleCapExceeded(f"rank {g.rank} > {CHAR_RANK_CAP}")
    r = rho(g).doubled
    num = _alternant(tuple(a + b for a, b in zip(w.doubled, r)), g)
    for alpha in _doubled_positive_roots(g):
        num = _divide_by_root(num, alpha)
    return {e: c for e, c in num.items() if c}


def evaluate_at_identity(ch: LaurentCharacter) -> int:
    return sum(ch.values())


# --- restriction by characters ----------------------------------------------


def _ssyt_contents(lam: Partition, letters: int) -> Counter:
    """Multiset of contents of semistandard tableaux of shape ``lam``."""
    boxes = [(r, c) for r in range(lam.height) for c in range(lam[r])]
    out = Counter()
    for f in _fillings(boxes, letters):
        content = [0] * letters
        for x in f.values():
            content[x - 1] += 1
        out[tuple(content)] += 1
    return out


def _target_group(kind: str, m: int) -> tuple[GroupType, list[tuple[int, ...]]]:
    family = {"symplectic": "C", "orthogonal_odd": "B", "orthogonal_even": "D"}[kind]
    g = GroupType(family, m)
    basis = []
    for i in range(m):
        v = [0] * m
        v[i] = 2
        basis.append(tuple(v))
        basis.append(tuple(-x for x in v))
    if kind == "orthogonal_odd":
        basis.append((0,) * m)
    return g, basis


def branch_by_characters(lam: Sequence[int], kind: str, m: int) -> IrrepMultiset:
    """Decompose ``Sigma^lam`` of the defining representation of Sp/SO."""
    if m > BRANCH_RANK_CAP:
        raise OracleCapExceeded(f"rank {m} > {BRANCH_RANK_CAP}")
    lam = Partition(lam)
    g, basis = _target_group(kind, m)
    ch = Counter()
    for content, c in _ssyt_contents(lam, len(basis)).items():
        e = tuple(sum(n * b[i] for n, b in zip(content, basis)) for i in range(m))
        ch[e] += c
    out = IrrepMultiset()
    while True:
        ch = Counter({e: c for e, c in ch.items() if c})
        if not ch:
            return out
        top = max(ch)
        mult = ch[top]
        if mult < 0:
            raise ArithmeticError("negative leading coefficient while peeling")
        out[Weight(top)] += mult
        for e, c in character(Weight(top), g).items():
            ch[e] -= mult * c


# --- Weyl orbits -------------------------------------------------------------


def _dominant(v: Sequence[int], g: GroupType) -> bool:
    if any(a < b for a, b in zip(v, v[1:])):
        return False
    if g.family == "D":
        return len(v) < 2 or v[-2] >= abs(v[-1])
    return v[-1] >= 0


def _simple_reflections(g: GroupType):
    n = g.rank

    def swap(i):
        return lambda v: v[:i] + (v[i + 1], v[i]) + v[i + 2:]

    refl = [swap(i) for i in range(n - 1)]
    if g.family in ("B", "C"):
        refl.append(lambda v: v[:-1] + (-v[-1],))
    else:
        refl.append(lambda v: v[:-2] + (-v[-1], -v[-2]))
    return refl


def weyl_orbit_check(gamma: Weight, g: GroupType) -> dict:
    """``{"singular", "length", "chamber"}`` by exhausting the Weyl orbit."""
    if g.rank > ORBIT_RANK_CAP:
        raise OracleCapExceeded(f"rank {g.rank} > {ORBIT_RANK_CAP}")
    v = gamma.doubled
    images = [_act(w, v) for w in weyl_group(g)]
    stabilizer = sum(1 for x in images if x == v)
    if stabilizer > 1:
        return {"singular": True, "length": None, "chamber": None}
    chamber = next(x for x in images if _dominant(x, g))
    refl = _simple_reflections(g)
    dist = {v: 0}
    todo = deque([v])
    while todo:
        x = todo.popleft()
        if x == chamber:
            break
        for s in refl:
            y = s(x)
            if y not in dist:
                dist[y] = dist[x] + 1
                todo.append(y)
    return {"singular": False, "length": dist[chamber], "chamber": Weight(chamber)}
