"""Command-line interface: ``python3 -m isogr <command> ...``.

Exit codes: 0 success, 1 bad input, 2 out-of-scope space, 3 a page needed a
Levi restriction outside the stable range while ``--strict`` was set.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from . import __version__
from .bbw import BundleSummand, CohomResult, GrassmannianSpace, OutOfScope, bbw_cohomology, levi_weight
from .branching import BranchTarget, restrict
from .diagrams import Partition
from .spectral import (
    NOT_GLOBAL,
    E1Page,
    GlobalityVerdict,
    HHReport,
    cohomology_report,
    e1_page,
    globality_scan,
    hochschild,
    subquotient_summands,
)
from .weights import (
    FAMILIES,
    GroupType,
    IrrepMultiset,
    Weight,
    classify_grassmannian,
    format_fundamental,
    fundamental_coords,
)

EXIT_OK, EXIT_INPUT, EXIT_SCOPE, EXIT_TAINT = 0, 1, 2, 3

CONVENTIONS = [
    "weights in epsilon coordinates; half-integers written as p/2",
    "fundamental coordinates written as sums of w1..wn",
    "E1 cells indexed (q, i), q the filtration level and i the cohomological degree; d_r maps (q, i) to (q - r, i + 1)",
    "hook notation counts arm and leg including the diagonal box, so (t) = (t|1)",
    "Levi restriction outside the stable range uses torus weights (exact); --strict treats it as a taint instead",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_range(text: str) -> list[int]:
    """``"3..5"`` is ``[3, 4, 5]``; a bare integer is a one-point range."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if m is None:
        raise argparse.ArgumentTypeError(f"not a range: {text!r} (expected a..b)")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


# --- rendering ---------------------------------------------------------------


def _fmt_weight(w: Weight, g: GroupType) -> str:
    try:
        fund = format_fundamental(fundamental_coords(w, g))
    except ValueError:
        fund = "?"
    return f"{w} = {fund}"


def _fmt_terms(ms: IrrepMultiset, g: GroupType) -> list[str]:
    return [f"{m} x {_fmt_weight(w, g)}" for w, m in IrrepMultiset(ms).canonical()]


def _table(header: Sequence[str], rows: list[Sequence[str]]) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    line = lambda r: "  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip()  # noqa: E731
    out = [line(header), line(["-" * w for w in widths])]
    out.extend(line(r) for r in rows)
    return "\n".join(out)


def _render_page(p: E1Page) -> str:
    title = f"E1 page of Lambda^{p.j} T on {p.X.name}"
    rows = []
    for (q, i), ms in sorted(p.cells.items()):
        for t in _fmt_terms(ms, p.X.group):
            rows.append((str(q), str(i), t))
    parts = [title]
    parts.append(_table(("q", "i", "term"), rows) if rows else "all cells vanish")
    for t in p.taints:
        parts.append(f"taint: q={t.q}, Sigma^{t.lam} outside the stable range")
    return "\n".join(parts)


def _render_hh(r: HHReport) -> str:
    g = r.X.group
    rows = []
    for c in r.cells:
        rep = c.report
        cert = _fmt_terms(rep.certified, g) or ["0"]
        if rep.possible is None:
            poss = ["unbounded"]
        else:
            poss = _fmt_terms(rep.possible, g) or ["-"]
        for n, (a, b) in enumerate(zip(cert + [""] * len(poss), poss + [""] * len(cert))):
            if not a and not b:
                continue
            head = (str(c.i), str(c.j), rep.status) if n == 0 else ("", "", "")
            rows.append((*head, a, b))
    verdict = "HH^l = H^0(Lambda^l T) certified" if r.equals_global_sections else "higher terms present"
    return "\n".join(
        [f"HH^{r.l} of {r.X.name}", _table(("i", "j", "status", "certified", "possibly also"), rows), verdict]
    )


def _render_verdict(v: GlobalityVerdict) -> str:
    lines = [f"{v.X.name}: {v.verdict}", f"classification: {v.X.classification}"]
    if v.verdict == NOT_GLOBAL:
        rows = [(str(w.i), str(w.j), str(w.mult), _fmt_weight(w.weight, v.X.group)) for w in v.witnesses]
        lines.append(_table(("i", "j", "mult", "weight"), rows))
    lines.append(f"certified global up to l = {v.global_up_to}")
    if v.undetermined:
        lines.append("undetermined cells (i, j): " + ", ".join(f"({i}, {j})" for i, j in v.undetermined))
    lines.extend(f"note: {n}" for n in v.notes)
    return "\n".join(lines)


def _render_cohom(r: CohomResult) -> str:
    if r.acyclic:
        return "acyclic"
    text = f"H^{r.degree} = V<{_fmt_weight(r.weight, r.group)}>"
    if r.extended:
        text += "  (k = n - 1 in type C)"
    return text


def render_table(report) -> str:
    """Fixed-width text rendering of any report type."""
    if isinstance(report, E1Page):
        return _render_page(report)
    if isinstance(report, HHReport):
        return _render_hh(report)
    if isinstance(report, GlobalityVerdict):
        return _render_verdict(report)
    if isinstance(report, CohomResult):
        return _render_cohom(report)
    if isinstance(report, ScanResult):
        rows = []
        for p in report.points:
            if p.verdict is None:
                rows.append((p.family, str(p.k), str(p.n), "OUT_OF_SCOPE", p.reason))
            else:
                v = p.verdict
                first = v.witnesses[0] if v.witnesses else None
                wit = f"(i={first.i}, j={first.j}) {_fmt_weight(first.weight, v.X.group)}" if first else ""
                rows.append((p.family, str(p.k), str(p.n), v.verdict, wit))
        return _table(("family", "k", "n", "verdict", "first witness / reason"), rows)
    raise TypeError(f"cannot render {type(report).__name__}")


# --- scan --------------------------------------------------------------------


@dataclass
class ScanPoint:
    family: str
    k: int
    n: int
    verdict: GlobalityVerdict | None = None
    reason: str = ""

    def to_json(self) -> dict:
        if self.verdict is None:
            return {"family": self.family, "k": self.k, "n": self.n, "status": "out_of_scope", "reason": self.reason}
        return {"family": self.family, "k": self.k, "n": self.n, "status": "ok", "verdict": self.verdict.to_json()}


@dataclass
class ScanResult:
    points: list[ScanPoint]
    metadata: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"metadata": self.metadata, "points": [p.to_json() for p in self.points]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, data: dict, verify: bool = True) -> "ScanResult":
        points = []
        for p in data["points"]:
            if p["status"] == "ok":
                v = GlobalityVerdict.from_json(p["verdict"])
                if verify:
                    verify_witnesses(v)
                points.append(ScanPoint(p["family"], p["k"], p["n"], v))
            else:
                points.append(ScanPoint(p["family"], p["k"], p["n"], None, p.get("reason", "")))
        keys = [(p.family, p.k, p.n) for p in points]
        if len(set(keys)) != len(keys):
            raise ValueError("scan result lists a grid point twice")
        return cls(points, dict(data.get("metadata", {})))


def verify_witnesses(v: GlobalityVerdict) -> None:
    """Recompute each witness; raise ``ValueError`` if it is not certified."""
    for w in v.witnesses:
        cert = cohomology_report(v.X, w.j).degree(w.i).certified
        if cert.get(w.weight, 0) < w.mult:
            raise ValueError(f"witness (i={w.i}, j={w.j}, {w.weight}) does not re-verify on {v.X.name}")


def _scan_point(args: tuple[str, int, int, int, bool]) -> ScanPoint:
    family, k, n, lmax, beyond = args
    try:
        X = GrassmannianSpace(family, n, k)
    except (OutOfScope, ValueError) as e:
        return ScanPoint(family, k, n, None, str(e))
    return ScanPoint(family, k, n, globality_scan(X, lmax, beyond))


def scan(family: str, ks: Sequence[int], ns: Sequence[int], lmax: int, workers: int = 1, beyond_stable: bool = True) -> ScanResult:
    grid = [(family, k, n, lmax, beyond_stable) for n in ns for k in ks]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(_scan_point, grid))
    else:
        points = [_scan_point(g) for g in grid]
    meta = {"tool": "isogr", "version": __version__, "lmax": lmax, "conventions": CONVENTIONS}
    return ScanResult(points, meta)


# --- commands ----------------------------------------------------------------


def _space(args) -> GrassmannianSpace:
    return GrassmannianSpace(args.family, args.n, args.k)


def _emit(args, obj, data: dict) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(render_table(obj))


def _tainted(X: GrassmannianSpace, js) -> bool:
    return any(e1_page(X, j, beyond_stable=False).taints for j in js)


def cmd_classify(args) -> int:
    c = classify_grassmannian(args.family, args.k, args.n)
    if args.format == "json":
        print(json.dumps({"kind": c.kind, "attributes": list(c.attributes), "name": c.name}, sort_keys=True))
    else:
        print(c)
    if args.strict and c.kind in ("curious", "out_of_tool_scope"):
        return EXIT_SCOPE
    return EXIT_OK


def cmd_bbw(args) -> int:
    X = _space(args)
    s = BundleSummand(levi_weight(list(Partition.parse(args.beta)), X), Partition.parse(args.alpha))
    r = bbw_cohomology(X, s)
    _emit(args, r, r.to_json())
    return EXIT_OK


def cmd_branch(args) -> int:
    t = BranchTarget.parse(args.target)
    lam = Partition.parse(args.lam)
    res = restrict(lam, t, beyond_stable=not args.strict)
    g = t.group
    if args.format == "json":
        terms = [{"weight_eps": str(w), "weight_fund": format_fundamental(fundamental_coords(w, g)), "mult": m}
                 for w, m in res.canonical()]
        print(json.dumps({"lambda": str(lam), "target": str(t), "terms": terms}, indent=2, sort_keys=True))
    else:
        print(f"Sigma^{lam} restricted to {t}")
        rows = [(str(m), _fmt_weight(w, g)) for w, m in res.canonical()]
        print(_table(("mult", "weight"), rows))
    return EXIT_OK


def cmd_decompose(args) -> int:
    X = _space(args)
    qs = [args.q] if args.q is not None else range(args.j + 1)
    out = []
    for q in qs:
        for sq in subquotient_summands(X, args.j, q):
            out.append({"q": q, "lambda": str(sq.lam), "mu": str(sq.mu),
                        "gl_terms": [{"partition": str(p), "mult": c} for p, c in sq.gl_terms]})
    if args.format == "json":
        print(json.dumps({"space": X.name, "j": args.j, "summands": out}, indent=2, sort_keys=True))
    else:
        rows = [(str(d["q"]), d["lambda"], d["mu"], " + ".join(f"{t['mult']}*{t['partition']}" for t in d["gl_terms"]))
                for d in out]
        print(f"graded pieces of Lambda^{args.j} T on {X.name}: Sigma^lambda(U^perp/U) (x) Sigma^(lambda^T) U^* (x) Sigma^mu U^*")
        print(_table(("q", "lambda", "mu", "U^* part"), rows) if rows else "no summands")
    return EXIT_OK


def cmd_e1(args) -> int:
    X = _space(args)
    page = e1_page(X, args.j, beyond_stable=not args.strict)
    _emit(args, page, page.to_json())
    return EXIT_TAINT if args.strict and page.taints else EXIT_OK


def cmd_hh(args) -> int:
    X = _space(args)
    if not 0 <= args.l <= 2 * X.dim:
        raise ValueError(f"need 0 <= l <= 2 dim X = {2 * X.dim}")
    r = hochschild(X, args.l, beyond_stable=not args.strict)
    _emit(args, r, r.to_json())
    return EXIT_TAINT if args.strict and _tainted(X, range(args.l + 1)) else EXIT_OK


def cmd_scan(args) -> int:
    family = args.family
    res = scan(family, args.k, args.n, args.lmax, args.workers, beyond_stable=not args.strict)
    text = res.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.format == "json" and not args.out:
        sys.stdout.write(text)
    else:
        print(render_table(res))
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def _add_group(p: argparse.ArgumentParser, need_k: bool = True) -> None:
    p.add_argument("--group", help="shorthand for --family and --n, e.g. C4")
    p.add_argument("--family", choices=FAMILIES, type=str.upper)
    p.add_argument("--n", type=int)
    if need_k:
        p.add_argument("--k", type=int, required=True)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--strict", action="store_true",
                   help="do not restrict outside the stable range; exit 3 if that was needed")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="isogr", description="Hochschild cohomology bounds for isotropic Grassmannians")
    ap.add_argument("--version", action="version", version=f"isogr {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="special / curious / nonspecial")
    _add_group(p)
    _common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bbw", help="cohomology of one irreducible bundle")
    _add_group(p)
    p.add_argument("--beta", default="[]", help="Levi weight, e.g. [2,1]")
    p.add_argument("--alpha", default="[]", help="partition for Sigma^alpha U^*, e.g. [1,1]")
    _common(p)
    p.set_defaults(func=cmd_bbw)

    p = sub.add_parser("branch", help="restrict Sigma^lambda to Sp or SO")
    p.add_argument("--lam", required=True, help="partition, e.g. [2,1]")
    p.add_argument("--target", required=True, help="sp<m>, so<N>")
    _common(p)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("decompose", help="list the graded pieces of Lambda^j T")
    _add_group(p)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--q", type=int)
    _common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("e1", help="E1 page for Lambda^j T")
    _add_group(p)
    p.add_argument("--j", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_e1)

    p = sub.add_parser("hh", help="bounds on HH^l")
    _add_group(p)
    p.add_argument("--l", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_hh)

    p = sub.add_parser("scan", help="globality verdicts over a grid")
    p.add_argument("--family", choices=FAMILIES, type=str.upper, required=True)
    p.add_argument("--k", type=parse_range, required=True, help="inclusive range a..b")
    p.add_argument("--n", type=parse_range, required=True, help="inclusive range a..b")
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    _common(p)
    p.set_defaults(func=cmd_scan)
    return ap


def _resolve_group(ap: argparse.ArgumentParser, args) -> None:
    if not hasattr(args, "group"):
        return
    if args.group:
        g = GroupType.parse(args.group)
        if args.family not in (None, g.family) or args.n not in (None, g.rank):
            ap.error("--group conflicts with --family/--n")
        args.family, args.n = g.family, g.rank
    if args.family is None or args.n is None:
        ap.error("give --group or both --family and --n")


def run(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        _resolve_group(ap, args)
    except UsageError as e:
        print(f"isogr: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"isogr: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except OutOfScope as e:
        print(f"isogr: out of scope: {e}", file=sys.stderr)
        return EXIT_SCOPE
    except ValueError as e:
        print(f"isogr: error: {e}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
