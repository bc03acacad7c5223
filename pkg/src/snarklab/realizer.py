"""Build a Hist-snark for any admissible multiset of outer-cycle lengths.

The planner recurses exactly like a minimal-counterexample argument run
forwards: shrink elements above 8 by four, split large multisets in two,
and settle singletons, pairs and triples from fixtures or one-step
constructions on the Petersen graph.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

from . import constructions as cons
from .certify import certify_snark
from .constructions import HistSnark
from .errors import ConstructionFailed, NotAdmissible, SnarkLabError, VerificationFailed
from .fixtures import hist_snark
from .graph import CubicGraph
from .hist import DEFAULT_MAX_VERTICES, Profile, find_hist, format_profile, profile, profile_of

log = logging.getLogger(__name__)

SINGLETON_BASES = {6: "P10", 10: "B18", 12: "L22", 13: "T(13)"}
PAIR_FIXTURES = {
    (5, 5): "T(5,5)", (5, 7): "T(5,7)", (5, 8): "T(5,8)", (6, 7): "T(6,7)",
    (6, 8): "T(6,8)", (7, 7): "T(7,7)", (8, 8): "T(8,8)",
}


def is_admissible(s: Iterable[int]) -> tuple[bool, str]:
    """Both conditions for a multiset of outer-cycle lengths, with the reason on failure."""
    s = profile_of(s)
    if not s:
        return False, "the multiset must be non-empty"
    small = [c for c in s if c < 5]
    if small:
        return False, f"every length must be at least 5 (girth 5); got {small}"
    if len(s) == 1 and not (s[0] == 6 or s[0] >= 10):
        return False, f"a single outer cycle must have length 6 or at least 10; got {s[0]}"
    return True, "admissible"


@dataclass(frozen=True)
class RealizationPlan:
    step: str
    target: Profile
    args: dict[str, Any] = field(default_factory=dict)
    children: tuple["RealizationPlan", ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "step": self.step,
            "target": list(self.target),
            "args": dict(self.args),
            "children": [c.to_dict() for c in self.children],
        }

    def render(self, indent: int = 0) -> str:
        extra = "".join(f" {k}={v}" for k, v in sorted(self.args.items()))
        lines = [f"{'  ' * indent}{self.step} -> {format_profile(self.target)}{extra}"]
        lines += [c.render(indent + 1) for c in self.children]
        return "\n".join(lines)


def _minus(s: Profile, *xs: int) -> list[int]:
    out = list(s)
    for x in xs:
        out.remove(x)
    return out


def plan(s: Iterable[int]) -> RealizationPlan:
    s = profile_of(s)
    ok, reason = is_admissible(s)
    if not ok:
        raise NotAdmissible(reason)
    return _plan(s)


def _plan(s: Profile) -> RealizationPlan:
    ok, reason = is_admissible(s)
    assert ok, f"planner produced inadmissible part {s}: {reason}"
    if len(s) == 1:
        k = s[0]
        if k in SINGLETON_BASES:
            return RealizationPlan("fixture", s, {"name": SINGLETON_BASES[k]})
        if k == 11:
            p10 = RealizationPlan("fixture", (6,), {"name": "P10"})
            return RealizationPlan("union_merge", s, {"k": 6, "l": 6}, (p10, p10))
        return RealizationPlan("reduce_i", s, {"k": k - 4}, (_plan((k - 4,)),))

    big = [m for m in s if m > 8]
    if big:
        m = max(big)
        return RealizationPlan("reduce_i", s, {"k": m - 4}, (_plan(profile_of(_minus(s, m) + [m - 4])),))

    if len(s) >= 4:
        left, right = s[:2], s[2:]
        return RealizationPlan("union_disjoint", s, {}, (_plan(left), _plan(right)))

    if len(s) == 2:
        if s in PAIR_FIXTURES:
            return RealizationPlan("fixture", s, {"name": PAIR_FIXTURES[s]})
        p10 = RealizationPlan("fixture", (6,), {"name": "P10"})
        if s == (5, 6):
            return RealizationPlan("reduce_ii", s, {}, (p10,))
        if s == (6, 6):
            return RealizationPlan("reduce_iii", s, {}, (p10,))
        if s == (7, 8):
            return RealizationPlan("reduce_iv", s, {"k": 6}, (p10,))
        raise AssertionError(f"no pair rule for {s}")

    # triples with every element in 5..8
    if 5 in s:
        return RealizationPlan("reduce_ii", s, {}, (_plan(profile_of(_minus(s, 5))),))
    if 6 in s:
        return RealizationPlan("reduce_iii", s, {}, (_plan(profile_of(_minus(s, 6))),))
    if 7 in s:
        y, z = _minus(s, 7)
        base = profile_of([y - 2, z])
        return RealizationPlan("reduce_iv", s, {"k": y - 2}, (_plan(base),))
    return RealizationPlan("fixture", s, {"name": "T(8,8,8)"})


def execute(p: RealizationPlan, memo: dict[Profile, HistSnark] | None = None) -> HistSnark:
    memo = {} if memo is None else memo
    if p.target in memo:
        return memo[p.target]
    kids = [execute(c, memo) for c in p.children]
    try:
        if p.step == "fixture":
            out = hist_snark(p.args["name"], p.target)
        elif p.step == "union_merge":
            out = cons.union_merge(kids[0], p.args["k"], kids[1], p.args["l"])
        elif p.step == "union_disjoint":
            out = cons.union_disjoint(kids[0], kids[1])
        elif p.step == "reduce_i":
            out = cons.reduce_i(kids[0], p.args["k"])
        elif p.step == "reduce_ii":
            out = cons.reduce_ii(kids[0])
        elif p.step == "reduce_iii":
            out = cons.reduce_iii(kids[0])
        elif p.step == "reduce_iv":
            out = cons.reduce_iv(kids[0], p.args["k"])
        else:
            raise AssertionError(f"unknown plan step {p.step}")
    except VerificationFailed as exc:
        raise ConstructionFailed(f"{p.step} for {format_profile(p.target)}: {exc}") from exc
    if out.profile != p.target:
        raise ConstructionFailed(f"{p.step} produced {out.profile}, planned {p.target}")
    memo[p.target] = out
    return out


def realize(s: Iterable[int], *, certify: bool = False) -> HistSnark:
    """A Hist-snark whose Hist has exactly the outer-cycle lengths ``s``.

    Raises NotAdmissible for multisets no snark can realize.  With
    ``certify`` the final graph is also run through the full snark check.
    """
    target = profile_of(s)
    out = execute(plan(target))
    if certify and not certify_snark(out.graph).is_snark:
        raise ConstructionFailed(f"realized graph for {format_profile(target)} is not a snark")
    return out


# -- batch scan ---------------------------------------------------------------------


@dataclass
class ScanRecord:
    index: int
    n: int
    is_snark: bool | None = None
    hist_found: bool | None = None
    profile: list[int] | None = None
    error: str | None = None

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True)


@dataclass
class ScanReport:
    records: list[ScanRecord] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        snarks = [r for r in self.records if r.is_snark]
        return {
            "graphs": len(self.records),
            "snarks": len(snarks),
            "snarks_with_hist": sum(1 for r in snarks if r.hist_found),
            "snarks_without_hist": sum(1 for r in snarks if r.hist_found is False),
            "errors": sum(1 for r in self.records if r.error),
        }

    def jsonl(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.records)

    def table(self) -> str:
        s = self.summary
        width = max(len(k) for k in s)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in s.items()) + "\n"


def _scan_one(args: tuple[int, CubicGraph, int]) -> ScanRecord:
    index, g, cap = args
    rec = ScanRecord(index, g.n)
    try:
        rec.is_snark = certify_snark(g).is_snark
        h = find_hist(g, max_vertices=cap)
        rec.hist_found = h is not None
        if h is not None:
            rec.profile = list(profile(g, h))
    except SnarkLabError as exc:
        rec.error = f"{type(exc).__name__}: {exc}"
    return rec


def scan_for_hists(
    graphs: Iterable[CubicGraph], *, workers: int = 1, max_vertices: int = DEFAULT_MAX_VERTICES
) -> ScanReport:
    """Certify each graph and search it for a Hist; errors are recorded, not raised."""
    jobs: Iterator[tuple[int, CubicGraph, int]] = ((i, g, max_vertices) for i, g in enumerate(graphs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_scan_one, jobs, chunksize=8))
    else:
        records = [_scan_one(j) for j in jobs]
    return ScanReport(records)
