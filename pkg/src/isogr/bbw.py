"""Borel-Bott-Weil for irreducible bundles ``(U^perp/U)^<beta> (x) Sigma^alpha U^*``.

The bundle is determined by a partition ``alpha`` with at most ``k`` rows and
an integral dominant weight ``beta`` of the rank ``n - k`` Levi factor. Its
cohomology is read off from ``gamma = rho + (alpha, beta)``: a singular
``gamma`` means no cohomology at all, otherwise everything sits in one degree
equal to the Weyl length needed to make ``gamma`` dominant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from .diagrams import Partition
from .weights import (
    Classification,
    GroupType,
    Weight,
    classify_grassmannian,
    dominantize,
    format_fundamental,
    fundamental_coords,
    inversion_count,
    is_dominant,
    rho,
)


class OutOfScope(ValueError):
    """The requested space lies outside what the tool computes."""


@dataclass(frozen=True)
class GrassmannianSpace:
    """``G/P_k`` for ``G`` of type B, C or D and rank ``n``."""

    family: str
    n: int
    k: int

    def __post_init__(self) -> None:
        cls = classify_grassmannian(self.family, self.k, self.n)
        if cls.kind == "out_of_tool_scope":
            raise OutOfScope(f"{self.family}{self.n} is below the supported rank")
        if cls.kind == "curious":
            raise OutOfScope(
                f"{cls.name} is curious (k = n - 1 in type B); its cohomology is outside the certified scope"
            )
        if not (1 <= self.k <= self.n - 2 or (self.family == "C" and self.k == self.n - 1)):
            raise OutOfScope(f"{cls.name}: k = {self.k} is outside 1 <= k <= n - 2 (or k = n - 1 in type C)")

    @classmethod
    def parse(cls, group: str, k: int) -> "GrassmannianSpace":
        g = GroupType.parse(group)
        return cls(g.family, g.rank, k)

    @classmethod
    def from_name(cls, text: str) -> "GrassmannianSpace":
        """Read ``IGr(3, 8)``, ``OGr(3, 11)`` or ``OGr(3, 12)``."""
        m = re.fullmatch(r"\s*([IO])Gr\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*", text)
        if m is None:
            raise ValueError(f"not a Grassmannian name: {text!r}")
        kind, k, dim = m.group(1), int(m.group(2)), int(m.group(3))
        if kind == "I":
            if dim % 2:
                raise ValueError("symplectic spaces have even dimension")
            return cls("C", dim // 2, k)
        return cls("B" if dim % 2 else "D", dim // 2, k)

    @property
    def group(self) -> GroupType:
        return GroupType(self.family, self.n)

    @property
    def levi(self) -> GroupType:
        return GroupType(self.family, self.n - self.k)

    @property
    def extended(self) -> bool:
        """True for ``IGr(n-1, 2n)``, where Borel-Bott-Weil is used beyond ``k <= n-2``."""
        return self.family == "C" and self.k == self.n - 1

    @property
    def classification(self) -> Classification:
        return classify_grassmannian(self.family, self.k, self.n)

    @property
    def name(self) -> str:
        return self.classification.name

    @property
    def quotient_dim(self) -> int:
        """Dimension of the fibre of ``U^perp / U``."""
        m = self.n - self.k
        return 2 * m + 1 if self.family == "B" else 2 * m

    @property
    def gl_part_rank(self) -> int:
        """Rank of ``S^2 U^*`` (type C) or ``Lambda^2 U^*`` (types B, D)."""
        return comb(self.k + 1, 2) if self.family == "C" else comb(self.k, 2)

    @property
    def levi_part_rank(self) -> int:
        return self.quotient_dim * self.k

    @property
    def dim(self) -> int:
        return self.levi_part_rank + self.gl_part_rank

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class BundleSummand:
    beta: Weight
    alpha: Partition

    @classmethod
    def of(cls, beta: Sequence[int] | Weight, alpha: Sequence[int]) -> "BundleSummand":
        if not isinstance(beta, Weight):
            beta = Weight.of(beta)
        return cls(beta, Partition(alpha))

    def check(self, X: GrassmannianSpace) -> None:
        if self.alpha.height > X.k:
            raise ValueError(f"alpha = {self.alpha} has more than k = {X.k} rows")
        if not self.beta.is_integral:
            raise ValueError(f"beta = {self.beta} must be integral")
        if not is_dominant(self.beta, X.levi):
            raise ValueError(f"beta = {self.beta} is not dominant for {X.levi}")


def levi_weight(beta: Sequence[int] | Weight, X: GrassmannianSpace) -> Weight:
    """Pad a short integral weight with zeros to the Levi rank."""
    if isinstance(beta, Weight):
        return beta
    beta = list(beta)
    m = X.n - X.k
    if len(beta) > m:
        raise ValueError(f"beta = {beta} has more than n - k = {m} entries")
    return Weight.of(beta + [0] * (m - len(beta)))


@dataclass(frozen=True)
class CohomResult:
    """Cohomology of one irreducible bundle: ``None`` degree means acyclic."""

    degree: int | None
    weight: Weight | None
    group: GroupType
    extended: bool = False
    # raw inversion count of gamma disagrees with the Weyl length
    inversion_mismatch: bool = False

    @property
    def acyclic(self) -> bool:
        return self.degree is None

    def to_json(self) -> dict:
        if self.acyclic:
            return {
                "status": "acyclic",
                "degree": None,
                "weight_eps": None,
                "weight_fund": None,
                "extended_flag": self.extended,
            }
        return {
            "status": "nonzero",
            "degree": self.degree,
            "weight_eps": str(self.weight),
            "weight_fund": format_fundamental(fundamental_coords(self.weight, self.group)),
            "extended_flag": self.extended,
            "inversion_mismatch": self.inversion_mismatch,
        }


def gamma(X: GrassmannianSpace, s: BundleSummand) -> Weight:
    alpha = Weight.of(s.alpha.padded(X.k))
    return rho(X.group) + Weight(alpha.doubled + s.beta.doubled)


@lru_cache(maxsize=None)
def _bbw(X: GrassmannianSpace, s: BundleSummand) -> CohomResult:
    s.check(X)
    g = gamma(X, s)
    chamber = dominantize(g, X.group)
    if chamber is None:
        return CohomResult(None, None, X.group, X.extended)
    mismatch = inversion_count(g.doubled) != chamber.length
    return CohomResult(chamber.length, chamber.weight - rho(X.group), X.group, X.extended, mismatch)


def bbw_cohomology(X: GrassmannianSpace, s: BundleSummand) -> CohomResult:
    return _bbw(X, s)


@dataclass(frozen=True)
class Certificate:
    """Degrees ``start <= i < stop`` (``stop = None``: all) certified to vanish."""

    start: int
    stop: int | None
    reason: str

    def covers(self, i: int) -> bool:
        return i >= self.start and (self.stop is None or i < self.stop)

    @property
    def empty(self) -> bool:
        return self.stop is not None and self.stop <= self.start


def vanishes_by_small_weight(X: GrassmannianSpace, s: BundleSummand) -> Certificate | None:
    """If ``height(alpha) + beta_1 <= k``: acyclic for ``beta != 0``, no higher
    cohomology for ``beta = 0``. Otherwise nothing is certified."""
    s.check(X)
    beta1 = s.beta.doubled[0] // 2 if s.beta.rank else 0
    if s.alpha.height + beta1 > X.k:
        return None
    if any(s.beta.doubled):
        return Certificate(0, None, "height(alpha) + beta_1 <= k with beta != 0")
    return Certificate(1, None, "beta = 0")


def vanishes_in_low_degrees(X: GrassmannianSpace, s: BundleSummand, j: int) -> Certificate | None:
    """For ``height(alpha) <= j < k``, degrees ``0 < i < k - j`` vanish."""
    s.check(X)
    if not (s.alpha.height <= j < X.k) or j < 0:
        return None
    return Certificate(1, X.k - j, f"height(alpha) <= {j}")
