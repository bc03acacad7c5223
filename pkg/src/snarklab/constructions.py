"""Dot-product surgeries and the Hist-carrying constructions built on them.

Output vertex numbering: the vertices of ``G`` keep their ids, the surviving
vertices of ``H`` follow in increasing order, and the new vertices come last
in the fixed role order ``h1, j1, h2, j2`` (bullet variants) or ``q1, q2``
(triangle).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from functools import cache
from typing import Any, Callable, Iterable, Iterator

from .certify import certify_snark
from .errors import (
    ElementAbsent,
    InvalidAnchors,
    NoValidAnchors,
    NotAHist,
    VerificationFailed,
)
from .graph import CubicGraph, Edge, edge, from_edges
from .hist import Hist, Profile, check_hist, find_hist, outer_cycle_vertices, profile_of
from . import named


# -- anchors -------------------------------------------------------------------


@dataclass(frozen=True)
class DotAnchors:
    a1: int
    b1: int
    a2: int
    b2: int
    a3: int
    b3: int
    x1: int
    y1: int
    x2: int
    y2: int

    @classmethod
    def choose(
        cls,
        g: CubicGraph,
        h: CubicGraph,
        e1: Edge,
        e2: Edge,
        e3: Edge,
        x1: int | None = None,
        x2: int | None = None,
    ) -> "DotAnchors":
        """Anchors from oriented edges; ``x1``/``x2`` default to the smaller neighbor."""
        a3, b3 = e3
        if not h.has_edge(a3, b3):
            raise InvalidAnchors(f"e3={e3} is not an edge of H")
        n1 = sorted(set(h.adjacency[a3]) - {b3})
        n2 = sorted(set(h.adjacency[b3]) - {a3})
        x1 = n1[0] if x1 is None else x1
        x2 = n2[0] if x2 is None else x2
        if x1 not in n1 or x2 not in n2:
            raise InvalidAnchors("x1/x2 must be neighbors of a3/b3 other than the edge mate")
        y1 = n1[1] if x1 == n1[0] else n1[0]
        y2 = n2[1] if x2 == n2[0] else n2[0]
        a = cls(e1[0], e1[1], e2[0], e2[1], a3, b3, x1, y1, x2, y2)
        a.validate(g, h)
        return a

    def validate(self, g: CubicGraph, h: CubicGraph) -> None:
        if not g.has_edge(self.a1, self.b1):
            raise InvalidAnchors(f"e1=({self.a1},{self.b1}) is not an edge of G")
        if not g.has_edge(self.a2, self.b2):
            raise InvalidAnchors(f"e2=({self.a2},{self.b2}) is not an edge of G")
        if {self.a1, self.b1} & {self.a2, self.b2}:
            raise InvalidAnchors("e1 and e2 must be independent")
        if not h.has_edge(self.a3, self.b3):
            raise InvalidAnchors(f"e3=({self.a3},{self.b3}) is not an edge of H")
        if {self.x1, self.y1} != set(h.adjacency[self.a3]) - {self.b3}:
            raise InvalidAnchors("{x1,y1} must be N(a3) - b3")
        if {self.x2, self.y2} != set(h.adjacency[self.b3]) - {self.a3}:
            raise InvalidAnchors("{x2,y2} must be N(b3) - a3")

    def to_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class TriangleAnchors(DotAnchors):
    c: int
    d: int

    @classmethod
    def choose_triangle(
        cls, g: CubicGraph, h: CubicGraph, e1: Edge, e2: Edge, e3: Edge, c: int, x1: int | None = None
    ) -> "TriangleAnchors":
        base = DotAnchors.choose(g, h, e1, e2, e3, x1=x1)
        others = [w for w in g.adjacency[base.b1] if w != base.a1]
        if c not in others:
            raise InvalidAnchors(f"c={c} must be a neighbor of b1 other than a1")
        d = others[1] if c == others[0] else others[0]
        a = cls(**base.to_dict(), c=c, d=d)
        a.validate(g, h)
        return a

    def validate(self, g: CubicGraph, h: CubicGraph) -> None:
        super().validate(g, h)
        nb = set(g.adjacency[self.b1])
        if len(nb) != 3 or nb != {self.a1, self.c, self.d}:
            raise InvalidAnchors("N(b1) must be {a1, c, d} with three distinct vertices")


# -- surgery core -----------------------------------------------------------------

_CONNECT_1 = [("a1", "x1"), ("b1", "y1")]
_CONNECT_2 = [("a2", "x2"), ("b2", "y2")]
_SPLIT_1 = [("a1", "h1"), ("h1", "j1"), ("j1", "b1"), ("h1", "x1"), ("j1", "y1")]
_SPLIT_2 = [("a2", "h2"), ("h2", "j2"), ("j2", "b2"), ("h2", "x2"), ("j2", "y2")]
_TRIANGLE = [
    ("a1", "q1"), ("q1", "b1"), ("b1", "q2"), ("q2", "c"),
    ("q1", "x1"), ("q2", "y1"), ("a2", "x2"), ("b2", "y2"),
]

_VARIANTS: dict[str, tuple[list[tuple[str, str]], tuple[str, ...]]] = {
    "dot": (_CONNECT_1 + _CONNECT_2, ()),
    "B1": (_SPLIT_1 + _CONNECT_2, ("h1", "j1")),
    "B2": (_CONNECT_1 + _SPLIT_2, ("h2", "j2")),
    "B3": (_SPLIT_1 + _SPLIT_2, ("h1", "j1", "h2", "j2")),
    "triangle": (_TRIANGLE, ("q1", "q2")),
}


@dataclass(frozen=True)
class Layout:
    """Where the pieces of G and H ended up in a surgery output."""

    n_g: int
    h_map: dict[int, int]
    roles: dict[str, int]
    anchors: DotAnchors

    def h(self, v: int) -> int:
        return self.h_map[v]

    def role(self, name: str) -> int:
        if name in self.roles:
            return self.roles[name]
        value = getattr(self.anchors, name)
        return self.h_map[value] if name[0] in "xy" else value

    def role_edge(self, p: str, q: str) -> Edge:
        return edge(self.role(p), self.role(q))

    def h_edges(self, edges: Iterable[Edge]) -> set[Edge]:
        """Images of the H edges that survive (both ends kept)."""
        hm = self.h_map
        return {edge(hm[u], hm[v]) for u, v in edges if u in hm and v in hm}


def _surgery(g: CubicGraph, h: CubicGraph, a: DotAnchors, variant: str) -> tuple[CubicGraph, Layout]:
    a.validate(g, h)
    connectors, new_roles = _VARIANTS[variant]
    keep = [v for v in range(h.n) if v not in (a.a3, a.b3)]
    h_map = {v: g.n + i for i, v in enumerate(keep)}
    base = g.n + len(keep)
    roles = {r: base + i for i, r in enumerate(new_roles)}
    lay = Layout(g.n, h_map, roles, a)
    dropped = {edge(a.a1, a.b1), edge(a.a2, a.b2)}
    if variant == "triangle":
        dropped.add(edge(a.b1, a.c))  # type: ignore[attr-defined]
    edges = [e for e in g.edges if e not in dropped]
    edges += sorted(lay.h_edges(h.edges))
    edges += [lay.role_edge(p, q) for p, q in connectors]
    return from_edges(base + len(new_roles), edges), lay


def dot_product(g: CubicGraph, h: CubicGraph, anchors: DotAnchors) -> CubicGraph:
    """G.H on n_G + n_H - 2 vertices."""
    return _surgery(g, h, anchors, "dot")[0]


def bullet(g: CubicGraph, h: CubicGraph, anchors: DotAnchors, variant: int) -> CubicGraph:
    """Bullet variant 1 or 2 (two new vertices) or 3 (four new vertices)."""
    if variant not in (1, 2, 3):
        raise ValueError("variant must be 1, 2 or 3")
    return _surgery(g, h, anchors, f"B{variant}")[0]


def triangle(g: CubicGraph, h: CubicGraph, anchors: TriangleAnchors) -> CubicGraph:
    if not isinstance(anchors, TriangleAnchors):
        raise InvalidAnchors("triangle needs TriangleAnchors (c, d)")
    return _surgery(g, h, anchors, "triangle")[0]


def _oriented(edges: Iterable[Edge]) -> Iterator[Edge]:
    for u, v in edges:
        yield (u, v)
        yield (v, u)


def iter_dot_anchors(g: CubicGraph, h: CubicGraph) -> Iterator[DotAnchors]:
    """Every anchor tuple in canonical order (orientations and x-choices included)."""
    for e1, e2 in itertools.permutations(list(_oriented(g.edges)), 2):
        if set(e1) & set(e2):
            continue
        for e3 in _oriented(h.edges):
            n1 = sorted(set(h.adjacency[e3[0]]) - {e3[1]})
            n2 = sorted(set(h.adjacency[e3[1]]) - {e3[0]})
            for x1 in n1:
                for x2 in n2:
                    yield DotAnchors.choose(g, h, e1, e2, e3, x1=x1, x2=x2)


def iter_triangle_anchors(g: CubicGraph, h: CubicGraph) -> Iterator[TriangleAnchors]:
    for a in iter_dot_anchors(g, h):
        for c in sorted(set(g.adjacency[a.b1]) - {a.a1}):
            yield TriangleAnchors.choose_triangle(
                g, h, (a.a1, a.b1), (a.a2, a.b2), (a.a3, a.b3), c, x1=a.x1
            )


# -- hist-carrying results ----------------------------------------------------------


@dataclass(frozen=True)
class Provenance:
    construction: str
    graph_digest: str
    anchors: dict[str, Any] = field(default_factory=dict)
    inputs: tuple["Provenance", ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "construction": self.construction,
            "graph_digest": self.graph_digest,
            "anchors": dict(self.anchors),
            "inputs": [p.to_dict() for p in self.inputs],
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Provenance":
        return cls(
            d["construction"],
            d["graph_digest"],
            dict(d.get("anchors", {})),
            tuple(cls.from_dict(x) for x in d.get("inputs", ())),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Provenance":
        return cls.from_dict(json.loads(text))

    def steps(self) -> list[str]:
        """Construction names in post-order."""
        out: list[str] = []
        for p in self.inputs:
            out.extend(p.steps())
        out.append(self.construction)
        return out


@dataclass(frozen=True)
class HistSnark:
    """A cubic graph together with one of its Hists."""

    graph: CubicGraph
    hist: Hist
    profile: Profile
    provenance: Provenance

    @classmethod
    def from_hist(cls, name: str, graph: CubicGraph, hist: Hist) -> "HistSnark":
        hist = check_hist(graph, hist.tree_edges)
        prof = profile_of(len(c) for c in outer_cycle_vertices(graph, hist))
        return cls(graph, hist, prof, Provenance(name, graph.digest()))

    @property
    def n(self) -> int:
        return self.graph.n


ConstructedHistSnark = HistSnark


def _verify(
    name: str,
    graph: CubicGraph,
    tree: Iterable[Edge],
    expected: Profile,
    anchors: dict[str, Any],
    inputs: tuple[HistSnark, ...],
    certify: bool,
) -> HistSnark:
    try:
        hist = check_hist(graph, tree)
    except NotAHist as exc:
        raise VerificationFailed(f"{name}: assembled tree is not a Hist ({exc})") from exc
    got = profile_of(len(c) for c in outer_cycle_vertices(graph, hist))
    if got != expected:
        raise VerificationFailed(f"{name}: profile {got} != expected {expected}")
    if certify and not certify_snark(graph).is_snark:
        raise VerificationFailed(f"{name}: output does not certify as a snark")
    prov = Provenance(name, graph.digest(), anchors, tuple(x.provenance for x in inputs))
    return HistSnark(graph, hist, got, prov)


def _first_valid(name: str, candidates: Iterable[Any], build: Callable[[Any], HistSnark]) -> HistSnark:
    tried = 0
    last: Exception | None = None
    for cand in candidates:
        tried += 1
        try:
            return build(cand)
        except (VerificationFailed, InvalidAnchors) as exc:
            last = exc
    if tried == 0:
        raise NoValidAnchors(f"{name}: no anchor candidates satisfy the required roles")
    raise VerificationFailed(f"{name}: all {tried} anchor candidates failed; last: {last}")


def _remove_one(p: Profile, k: int) -> list[int]:
    out = list(p)
    out.remove(k)
    return out


def _require(p: Profile, k: int, what: str) -> None:
    if k not in p:
        raise ElementAbsent(f"{k} is not in the {what} profile {p}")


def _cycles_of_length(x: HistSnark, k: int) -> list[list[int]]:
    return [c for c in outer_cycle_vertices(x.graph, x.hist) if len(c) == k]


def _cycle_edges(cycles: list[list[int]]) -> list[Edge]:
    out = []
    for c in cycles:
        out.extend(sorted(edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))))
    return out


def _independent(e: Edge, f: Edge) -> bool:
    return not set(e) & set(f)


def _anchor_record(a: DotAnchors, lay: Layout, **extra: Any) -> dict[str, Any]:
    rec: dict[str, Any] = {k: v for k, v in a.to_dict().items()}
    rec.update({f"new_{r}": v for r, v in lay.roles.items()})
    rec.update(extra)
    return rec


@cache
def petersen_fixture() -> HistSnark:
    g = named.petersen()
    hist = find_hist(g)
    assert hist is not None
    x = HistSnark.from_hist("P10", g, hist)
    return HistSnark(x.graph, x.hist, x.profile, Provenance("fixture:P10", g.digest()))


def union_disjoint(left: HistSnark, right: HistSnark, *, certify: bool = False, name: str = "union_disjoint") -> HistSnark:
    """Bullet-3 combination whose profile is the union of both profiles."""
    g, tg = left.graph, left.hist
    h, th = right.graph, right.hist
    internal_h = th.internal(h.n)
    e3s = [e for e in _oriented(sorted(th.tree_edges)) if e[0] in internal_h and e[1] in internal_h]
    tree_g = sorted(tg.tree_edges)
    expected = profile_of(left.profile + right.profile)

    def candidates() -> Iterator[tuple[Edge, Edge, Edge]]:
        for e1, e2 in itertools.combinations(tree_g, 2):
            if _independent(e1, e2):
                for e3 in e3s:
                    yield e1, e2, e3

    def build(c: tuple[Edge, Edge, Edge]) -> HistSnark:
        e1, e2, e3 = c
        a = DotAnchors.choose(g, h, e1, e2, e3)
        graph, lay = _surgery(g, h, a, "B3")
        tree = set(tg.tree_edges) - {edge(*e1), edge(*e2)}
        tree |= lay.h_edges(th.tree_edges)
        tree |= {lay.role_edge(p, q) for p, q in _SPLIT_1 + _SPLIT_2}
        return _verify(name, graph, tree, expected, _anchor_record(a, lay), (left, right), certify)

    return _first_valid(name, candidates(), build)


def union_merge(left: HistSnark, k: int, right: HistSnark, l: int, *, certify: bool = False) -> HistSnark:
    """Triangle combination merging a k-cycle of G and an l-cycle of H into one (k+l-1)-cycle."""
    _require(left.profile, k, "first")
    _require(right.profile, l, "second")
    g, tg = left.graph, left.hist
    h, th = right.graph, right.hist
    internal_g = tg.internal(g.n)
    expected = profile_of(_remove_one(left.profile, k) + _remove_one(right.profile, l) + [k + l - 1])
    e2s = list(_oriented(_cycle_edges(_cycles_of_length(left, k))))
    e1s = [e for e in _oriented(sorted(tg.tree_edges)) if e[1] in internal_g]
    h_sides = []
    for cyc in _cycles_of_length(right, l):
        for b3 in sorted(cyc):
            a3 = next(w for w in h.adjacency[b3] if edge(b3, w) in th.tree_edges)
            h_sides.append((a3, b3))

    def candidates() -> Iterator[tuple[Edge, int, Edge, Edge]]:
        for e1 in e1s:
            for c in sorted(set(g.adjacency[e1[1]]) - {e1[0]}):
                for e2 in e2s:
                    if _independent(e1, e2):
                        for e3 in h_sides:
                            yield e1, c, e2, e3

    def build(cand: tuple[Edge, int, Edge, Edge]) -> HistSnark:
        e1, c, e2, e3 = cand
        a = TriangleAnchors.choose_triangle(g, h, e1, e2, e3, c)
        graph, lay = _surgery(g, h, a, "triangle")
        tree = set(tg.tree_edges) - {edge(a.a1, a.b1), edge(a.b1, a.c)}
        tree |= lay.h_edges(th.tree_edges)
        tree |= {lay.role_edge(p, q) for p, q in _TRIANGLE[:6]}
        return _verify("union_merge", graph, tree, expected, _anchor_record(a, lay, k=k, l=l), (left, right), certify)

    return _first_valid("union_merge", candidates(), build)


def reduce_i(left: HistSnark, k: int, *, certify: bool = False) -> HistSnark:
    """Dot product with the Petersen graph turning one k-cycle into a (k+4)-cycle."""
    _require(left.profile, k, "input")
    g, tg = left.graph, left.hist
    p10 = named.petersen()
    inner = {edge(named.PETERSEN_INNER[i], named.PETERSEN_INNER[(i + 1) % 5]) for i in range(5)}
    u_edges = [e for e in p10.edges if e not in inner]
    expected = profile_of(_remove_one(left.profile, k) + [k + 4])
    e1s = list(_oriented(sorted(tg.tree_edges)))
    e2s = list(_oriented(_cycle_edges(_cycles_of_length(left, k))))

    def candidates() -> Iterator[tuple[Edge, Edge]]:
        for e1 in e1s:
            for e2 in e2s:
                if _independent(e1, e2):
                    yield e1, e2

    def build(c: tuple[Edge, Edge]) -> HistSnark:
        e1, e2 = c
        a = DotAnchors.choose(g, p10, e1, e2, named.P10_SPOKE_E3)
        graph, lay = _surgery(g, p10, a, "dot")
        tree = set(tg.tree_edges) - {edge(*e1)}
        tree |= {lay.role_edge("a1", "x1"), lay.role_edge("b1", "y1")}
        tree |= lay.h_edges(u_edges)
        return _verify("reduce_i", graph, tree, expected, _anchor_record(a, lay, k=k), (left,), certify)

    return _first_valid("reduce_i", candidates(), build)


def _same_side(tree: frozenset[Edge], n: int, cut: Edge, u: int, v: int) -> bool:
    """Whether u and v lie in the same component of ``tree - cut``."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for x, y in tree:
        if (x, y) != cut:
            adj[x].append(y)
            adj[y].append(x)
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            return True
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def reduce_ii(left: HistSnark, *, certify: bool = False) -> HistSnark:
    """Bullet-1 product with the Petersen graph adding an outer 5-cycle."""
    g, tg = left.graph, left.hist
    p10 = named.petersen()
    inner = {edge(named.PETERSEN_INNER[i], named.PETERSEN_INNER[(i + 1) % 5]) for i in range(5)}
    p_edges = [e for e in p10.edges if e not in inner]
    expected = profile_of(list(left.profile) + [5])
    oriented = list(_oriented(sorted(tg.tree_edges)))

    def candidates() -> Iterator[tuple[Edge, Edge]]:
        for e1 in oriented:
            for e2 in oriented:
                if _independent(e1, e2) and _same_side(tg.tree_edges, g.n, edge(*e2), e1[1], e2[1]):
                    yield e1, e2

    def build(c: tuple[Edge, Edge]) -> HistSnark:
        e1, e2 = c
        a = DotAnchors.choose(g, p10, e1, e2, named.P10_RIM_E3, x1=named.P10_RIM_X1, x2=named.P10_RIM_X2)
        graph, lay = _surgery(g, p10, a, "B1")
        tree = set(tg.tree_edges) - {edge(*e1), edge(*e2)}
        tree |= {lay.role_edge(p, q) for p, q in _SPLIT_1 + _CONNECT_2}
        tree |= lay.h_edges(p_edges)
        return _verify("reduce_ii", graph, tree, expected, _anchor_record(a, lay), (left,), certify)

    return _first_valid("reduce_ii", candidates(), build)


def reduce_iii(left: HistSnark, *, certify: bool = False) -> HistSnark:
    """Add an outer 6-cycle by combining with the Petersen graph."""
    return union_disjoint(left, petersen_fixture(), certify=certify, name="reduce_iii")


def reduce_iv(left: HistSnark, k: int, *, certify: bool = False) -> HistSnark:
    """Bullet-1 product with the Blanusa snark: k becomes k+2 and a 7-cycle appears."""
    _require(left.profile, k, "input")
    g, tg = left.graph, left.hist
    b18 = named.blanusa()
    expected = profile_of(_remove_one(left.profile, k) + [k + 2, 7])
    e1s = list(_oriented(_cycle_edges(_cycles_of_length(left, k))))
    e2s = list(_oriented(sorted(tg.tree_edges)))

    def candidates() -> Iterator[tuple[Edge, Edge]]:
        for e1 in e1s:
            for e2 in e2s:
                if _independent(e1, e2):
                    yield e1, e2

    def build(c: tuple[Edge, Edge]) -> HistSnark:
        e1, e2 = c
        a = DotAnchors.choose(g, b18, e1, e2, named.B18_E3)
        graph, lay = _surgery(g, b18, a, "B1")
        internal = {lay.h(v) for v in named.B18_INTERNAL}
        gadget = {e for e in graph.edges if e[0] in internal or e[1] in internal}
        tree = (set(tg.tree_edges) - {edge(*e2)}) | gadget
        return _verify("reduce_iv", graph, tree, expected, _anchor_record(a, lay, k=k), (left,), certify)

    return _first_valid("reduce_iv", candidates(), build)
