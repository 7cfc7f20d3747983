"""First page of the spectral sequence of the filtered bundle ``Lambda^j T``
and the equivariant bounds it yields on ``H^i(X, Lambda^j T)``.

The tangent bundle is an extension of ``S^2 U^*`` (type C) or
``Lambda^2 U^*`` (types B, D) by ``(U^perp/U) (x) U^*``. The induced filtration
on ``Lambda^j T`` has pieces indexed by ``q = 0..j``::

    Lambda^{j-q}((U^perp/U) (x) U^*) (x) Lambda^q(S^2 U^* or Lambda^2 U^*)
      = sum over |lam| = j - q and balanced mu of
        Sigma^lam(U^perp/U) (x) Sigma^{lam^T} U^* (x) Sigma^mu U^*

Cells are indexed ``(q, i)`` with ``i`` the cohomological degree and the
differential ``d_r`` mapping ``(q, i)`` to ``(q - r, i + 1)``. Every
differential is equivariant, so a copy of ``V`` in a cell can only be
cancelled against copies of ``V`` in the cells it maps to or receives from.
Counting those gives certified lower bounds; the column sums are upper bounds.
Differentials themselves are never computed.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from pathlib import Path

from .bbw import BundleSummand, GrassmannianSpace, bbw_cohomology
from .branching import BranchTarget, OutOfStableRange, restrict
from .diagrams import Partition, enumerate_partitions
from .schur import GLRepSum, exterior_of_alt2, exterior_of_sym2, lr_product
from .weights import (
    IrrepMultiset,
    Weight,
    format_fundamental,
    fundamental_coords,
    gl_dim,
    weyl_dim,
)

Cell = tuple[int, int]

EXACT = "exact"
BOUNDED = "bounded"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class TangentData:
    levi_part_rank: int
    gl_part_rank: int
    dim_X: int


def tangent_data(X: GrassmannianSpace) -> TangentData:
    return TangentData(X.levi_part_rank, X.gl_part_rank, X.dim)


@dataclass(frozen=True)
class Subquotient:
    """``Sigma^lam(U^perp/U) (x) Sigma^{lam^T} U^* (x) Sigma^mu U^*``, with the
    ``U^*`` factor already expanded."""

    lam: Partition
    mu: Partition
    gl_terms: GLRepSum


def _balanced(X: GrassmannianSpace, q: int) -> tuple[Partition, ...]:
    return exterior_of_sym2(q) if X.family == "C" else exterior_of_alt2(q)


def subquotient_summands(X: GrassmannianSpace, j: int, q: int) -> list[Subquotient]:
    """Nonzero summands of the ``q``-th graded piece of ``Lambda^j T``."""
    if not 0 <= q <= j:
        raise ValueError(f"need 0 <= q <= j, got q={q}, j={j}")
    out = []
    for lam in enumerate_partitions(j - q, X.quotient_dim, X.k):
        lam_t = lam.transpose()
        for mu in _balanced(X, q):
            if mu.height > X.k:
                continue
            terms = lr_product(lam_t, mu, X.k)
            if len(terms):
                out.append(Subquotient(lam, mu, terms))
    return out


@dataclass(frozen=True)
class Taint:
    """A Levi factor ``Sigma^lam`` that could not be decomposed."""

    q: int
    lam: Partition


@dataclass
class E1Page:
    X: GrassmannianSpace
    j: int
    cells: dict[Cell, IrrepMultiset] = field(default_factory=dict)
    taints: list[Taint] = field(default_factory=list)
    # sum of bundle ranks over all summands; equals binom(dim X, j)
    rank: int = 0

    def cell(self, q: int, i: int) -> IrrepMultiset:
        return self.cells.get((q, i), IrrepMultiset())

    def mult(self, q: int, i: int, w: Weight) -> int:
        return self.cells.get((q, i), {}).get(w, 0)

    def row(self, i: int) -> dict[int, IrrepMultiset]:
        return {q: c for (q, ii), c in self.cells.items() if ii == i}

    @property
    def tainted_columns(self) -> set[int]:
        return {t.q for t in self.taints}

    @property
    def degrees(self) -> list[int]:
        return sorted({i for _, i in self.cells})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, E1Page):
            return NotImplemented
        return (
            self.X == other.X
            and self.j == other.j
            and _clean(self.cells) == _clean(other.cells)
            and sorted(self.taints, key=_taint_key) == sorted(other.taints, key=_taint_key)
        )

    def to_json(self) -> dict:
        return {
            "space": self.X.name,
            "family": self.X.family,
            "n": self.X.n,
            "k": self.X.k,
            "j": self.j,
            "extended": self.X.extended,
            "rank": self.rank,
            "cells": [
                {"q": q, "i": i, "terms": terms_to_json(self.cells[(q, i)], self.X)}
                for (q, i) in sorted(self.cells)
                if any(m > 0 for m in self.cells[(q, i)].values())
            ],
            "taints": [{"q": t.q, "lambda": list(t.lam)} for t in sorted(self.taints, key=_taint_key)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "E1Page":
        X = GrassmannianSpace(data["family"], data["n"], data["k"])
        cells = {(c["q"], c["i"]): terms_from_json(c["terms"]) for c in data["cells"]}
        taints = [Taint(t["q"], Partition(t["lambda"])) for t in data["taints"]]
        return cls(X, data["j"], cells, taints, data.get("rank", 0))


def _taint_key(t: Taint) -> tuple:
    return (t.q, tuple(t.lam))


def _clean(cells: dict[Cell, IrrepMultiset]) -> dict:
    return {c: {w: m for w, m in v.items() if m} for c, v in cells.items() if any(v.values())}


def terms_to_json(ms: IrrepMultiset, X: GrassmannianSpace) -> list[dict]:
    return [
        {
            "weight_eps": str(w),
            "weight_fund": format_fundamental(fundamental_coords(w, X.group)),
            "mult": m,
        }
        for w, m in IrrepMultiset(ms).canonical()
    ]


def terms_from_json(terms: list[dict]) -> IrrepMultiset:
    return IrrepMultiset({Weight.parse(t["weight_eps"]): t["mult"] for t in terms})


def _build_page(X: GrassmannianSpace, j: int, beyond_stable: bool) -> E1Page:
    page = E1Page(X, j)
    if j < 0 or j > X.dim:
        return page
    target = BranchTarget.for_group(X.levi)
    cells: dict[Cell, IrrepMultiset] = {}
    for q in range(j + 1):
        for sq in subquotient_summands(X, j, q):
            gl_rank = sum(c * gl_dim(a, X.k) for a, c in sq.gl_terms)
            try:
                levi = restrict(sq.lam, target, beyond_stable=beyond_stable)
            except OutOfStableRange:
                page.taints.append(Taint(q, sq.lam))
                page.rank += gl_rank * gl_dim(sq.lam, X.quotient_dim)
                continue
            page.rank += gl_rank * sum(r * weyl_dim(b, X.levi) for b, r in levi.items())
            for beta, r in levi.items():
                for alpha, c in sq.gl_terms:
                    res = bbw_cohomology(X, BundleSummand(beta, alpha))
                    if res.acyclic:
                        continue
                    cells.setdefault((q, res.degree), IrrepMultiset())[res.weight] += r * c
    page.cells = dict(sorted(cells.items()))
    return page


def _cache_path(X: GrassmannianSpace, j: int, beyond_stable: bool) -> Path | None:
    root = os.environ.get("ISOGR_CACHE_DIR")
    if not root:
        return None
    mode = "full" if beyond_stable else "stable"
    return Path(root) / f"page_{X.family}{X.n}_k{X.k}_j{j}_{mode}.json"


@lru_cache(maxsize=None)
def _page(X: GrassmannianSpace, j: int, beyond_stable: bool) -> E1Page:
    path = _cache_path(X, j, beyond_stable)
    if path is not None and path.exists():
        return E1Page.from_json(json.loads(path.read_text()))
    page = _build_page(X, j, beyond_stable)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".{os.getpid()}.tmp")
        tmp.write_text(json.dumps(page.to_json(), sort_keys=True))
        tmp.replace(path)
    return page


def e1_page(X: GrassmannianSpace, j: int, beyond_stable: bool = True) -> E1Page:
    """E_1 page for ``Lambda^j T_X``.

    With ``beyond_stable=False`` only Littlewood's rule is used for the Levi
    factor; pieces outside its range are recorded as taints instead.
    """
    return _page(X, j, beyond_stable)


@dataclass
class EInftyBounds:
    """Per degree and weight, bounds on the multiplicity in ``E_infinity``.

    ``upper[i]`` is ``None`` when a taint makes degree ``i`` unbounded.
    """

    page: E1Page
    cell_lower: dict[Cell, Counter]
    lower: dict[int, Counter]
    upper: dict[int, Counter | None]

    def bounds(self, i: int, w: Weight) -> tuple[int, int | None]:
        up = self.upper.get(i, Counter())
        return self.lower.get(i, Counter()).get(w, 0), (None if up is None else up.get(w, 0))


def _neighbour_mult(page: E1Page, q: int, i: int, w: Weight) -> int:
    """Copies of ``w`` that a differential could pair with cell ``(q, i)``."""
    total = 0
    for (qq, ii), cell in page.cells.items():
        if (ii == i - 1 and qq > q) or (ii == i + 1 and qq < q):
            total += cell.get(w, 0)
    return total


def _taint_reaches(page: E1Page, q: int, i: int) -> bool:
    for tq in page.tainted_columns:
        if tq == q or tq < q or (tq > q and i >= 1):
            return True
    return False


def einfty_bounds(page: E1Page) -> EInftyBounds:
    cell_lower: dict[Cell, Counter] = {}
    lower: dict[int, Counter] = {}
    upper: dict[int, Counter | None] = {}
    tainted = bool(page.taints)
    for (q, i), cell in page.cells.items():
        low = Counter()
        if not _taint_reaches(page, q, i):
            for w, m in cell.items():
                left = m - _neighbour_mult(page, q, i, w)
                if left > 0:
                    low[w] = left
        cell_lower[(q, i)] = low
        lower.setdefault(i, Counter()).update(low)
        if not tainted:
            upper.setdefault(i, Counter()).update({w: m for w, m in cell.items() if m})
    if tainted:
        upper = {i: None for i in range(page.X.dim + 1)}
    return EInftyBounds(page, cell_lower, lower, upper)


@dataclass
class DegreeReport:
    degree: int
    status: str
    certified: IrrepMultiset
    possible: IrrepMultiset | None  # upper minus lower; None when unbounded

    @property
    def is_zero(self) -> bool:
        return self.status == EXACT and not +self.certified


@dataclass
class CohomologyReport:
    X: GrassmannianSpace
    j: int
    degrees: dict[int, DegreeReport]

    def degree(self, i: int) -> DegreeReport:
        if i in self.degrees:
            return self.degrees[i]
        if self.degrees and any(d.status == UNDETERMINED for d in self.degrees.values()):
            return DegreeReport(i, UNDETERMINED, IrrepMultiset(), None)
        return DegreeReport(i, EXACT, IrrepMultiset(), IrrepMultiset())

    def higher_vanishes(self) -> bool:
        return all(self.degree(i).is_zero for i in range(1, self.X.dim + 1))


def _degree_report(i: int, bounds: EInftyBounds) -> DegreeReport:
    low = IrrepMultiset(bounds.lower.get(i, {}))
    up = bounds.upper.get(i, Counter())
    if up is None:
        return DegreeReport(i, UNDETERMINED, +low, None)
    extra = IrrepMultiset({w: m - low.get(w, 0) for w, m in up.items() if m - low.get(w, 0) > 0})
    return DegreeReport(i, BOUNDED if extra else EXACT, +low, extra)


def cohomology_report(X: GrassmannianSpace, j: int, beyond_stable: bool = True) -> CohomologyReport:
    """Certified and possible content of every ``H^i(X, Lambda^j T)``."""
    page = e1_page(X, j, beyond_stable)
    bounds = einfty_bounds(page)
    if page.taints:
        degrees = range(X.dim + 1)
    else:
        degrees = sorted({i for _, i in page.cells})
    return CohomologyReport(X, j, {i: _degree_report(i, bounds) for i in degrees})


@dataclass
class HHCell:
    i: int
    j: int
    report: DegreeReport


@dataclass
class HHReport:
    X: GrassmannianSpace
    l: int
    cells: list[HHCell]

    @property
    def certified(self) -> IrrepMultiset:
        out = IrrepMultiset()
        for c in self.cells:
            out.update(c.report.certified)
        return +out

    @property
    def possible_extra(self) -> IrrepMultiset | None:
        out = IrrepMultiset()
        for c in self.cells:
            if c.report.possible is None:
                return None
            out.update(c.report.possible)
        return +out

    def higher(self) -> list[HHCell]:
        """Cells with ``i > 0`` that are not certified zero."""
        return [c for c in self.cells if c.i > 0 and not c.report.is_zero]

    @property
    def equals_global_sections(self) -> bool:
        return not self.higher()

    def to_json(self) -> dict:
        possible = self.possible_extra
        return {
            "space": self.X.name,
            "family": self.X.family,
            "n": self.X.n,
            "k": self.X.k,
            "l": self.l,
            "certified": terms_to_json(self.certified, self.X),
            "possible": None if possible is None else terms_to_json(possible, self.X),
            "verdict": "HH^l = H^0(Lambda^l T)" if self.equals_global_sections else "higher terms present",
            "cells": [
                {
                    "i": c.i,
                    "j": c.j,
                    "status": c.report.status,
                    "certified": terms_to_json(c.report.certified, self.X),
                    "possible": None
                    if c.report.possible is None
                    else terms_to_json(c.report.possible, self.X),
                }
                for c in self.cells
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HHReport":
        X = GrassmannianSpace(data["family"], data["n"], data["k"])
        cells = []
        for c in data["cells"]:
            possible = None if c["possible"] is None else terms_from_json(c["possible"])
            cells.append(HHCell(c["i"], c["j"], DegreeReport(c["i"], c["status"], terms_from_json(c["certified"]), possible)))
        return cls(X, data["l"], cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HHReport):
            return NotImplemented
        return self.X == other.X and self.l == other.l and self.to_json() == other.to_json()


def hochschild(X: GrassmannianSpace, l: int, beyond_stable: bool = True) -> HHReport:
    """``HH^l(X)`` as the sum of ``H^i(X, Lambda^j T)`` over ``i + j = l``."""
    if not 0 <= l <= 2 * X.dim:
        raise ValueError(f"need 0 <= l <= 2 dim X = {2 * X.dim}")
    cells = []
    for j in range(0, min(l, X.dim) + 1):
        i = l - j
        if i > X.dim:
            continue
        cells.append(HHCell(i, j, cohomology_report(X, j, beyond_stable).degree(i)))
    return HHReport(X, l, cells)


@dataclass(frozen=True)
class Witness:
    i: int
    j: int
    weight: Weight
    mult: int


NOT_GLOBAL = "NOT_GLOBAL"
GLOBAL_UP_TO = "GLOBAL_UP_TO"

BOTT_NOTE = (
    "X is Fano and Lambda^j T = Lambda^{d-j} Omega (x) omega^{-1}, so the failure of "
    "Hochschild globality implies that Bott vanishing fails"
)


@dataclass
class GlobalityVerdict:
    X: GrassmannianSpace
    l_max: int
    verdict: str
    witnesses: list[Witness]
    # largest l with every (i > 0, j), i + j <= l, certified zero
    global_up_to: int
    undetermined: list[tuple[int, int]]
    notes: list[str]

    def to_json(self) -> dict:
        return {
            "space": self.X.name,
            "family": self.X.family,
            "n": self.X.n,
            "k": self.X.k,
            "classification": str(self.X.classification),
            "l_max": self.l_max,
            "verdict": self.verdict,
            "global_up_to": self.global_up_to,
            "witnesses": [
                {
                    "i": w.i,
                    "j": w.j,
                    "weight_eps": str(w.weight),
                    "weight_fund": format_fundamental(fundamental_coords(w.weight, self.X.group)),
                    "mult": w.mult,
                }
                for w in self.witnesses
            ],
            "undetermined": [list(c) for c in self.undetermined],
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, data: dict) -> "GlobalityVerdict":
        X = GrassmannianSpace(data["family"], data["n"], data["k"])
        witnesses = [Witness(w["i"], w["j"], Weight.parse(w["weight_eps"]), w["mult"]) for w in data["witnesses"]]
        return cls(
            X,
            data["l_max"],
            data["verdict"],
            witnesses,
            data["global_up_to"],
            [tuple(c) for c in data["undetermined"]],
            list(data["notes"]),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GlobalityVerdict):
            return NotImplemented
        return self.to_json() == other.to_json()


def globality_scan(X: GrassmannianSpace, l_max: int, beyond_stable: bool = True) -> GlobalityVerdict:
    """Look for certified nonzero ``H^i(X, Lambda^j T)``, ``i > 0``, ``i + j <= l_max``."""
    notes = []
    kind = X.classification.kind
    if kind == "special":
        notes.append("special Grassmannian: known to be Hochschild global")
    if X.extended:
        notes.append("k = n - 1 in type C: Borel-Bott-Weil used beyond k <= n - 2")
    witnesses: list[Witness] = []
    open_cells: list[tuple[int, int]] = []
    for j in range(0, min(l_max, X.dim) + 1):
        report = cohomology_report(X, j, beyond_stable)
        for i in range(1, min(l_max - j, X.dim) + 1):
            deg = report.degree(i)
            if deg.is_zero:
                continue
            for w, m in deg.certified.canonical():
                witnesses.append(Witness(i, j, w, m))
            if not +deg.certified:
                open_cells.append((i, j))
    witnesses.sort(key=lambda w: (w.i + w.j, w.j, tuple(-d for d in w.weight.doubled)))
    open_cells.sort(key=lambda c: (c[0] + c[1], c[1]))
    bad = [w.i + w.j for w in witnesses] + [i + j for i, j in open_cells]
    up_to = min(bad) - 1 if bad else l_max
    if witnesses:
        notes.append(BOTT_NOTE)
        return GlobalityVerdict(X, l_max, NOT_GLOBAL, witnesses, up_to, open_cells, notes)
    return GlobalityVerdict(X, l_max, GLOBAL_UP_TO, [], up_to, open_cells, notes)


def rank_identity(page: E1Page) -> bool:
    """Total rank of all summands equals ``binom(dim X, j)``."""
    expected = comb(page.X.dim, page.j) if 0 <= page.j <= page.X.dim else 0
    return page.rank == expected
