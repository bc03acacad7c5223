"""Hist search, outer-cycle extraction and the outer-cycle CDC probe.

A Hist of a cubic graph is determined by its set ``I`` of internal (degree 3)
vertices: the tree consists of every edge touching ``I``.  A vertex set ``I``
yields a Hist exactly when ``G[I]`` is a tree and every other vertex has
exactly one neighbor in ``I``.  The leaves then induce a 2-regular graph,
which is the union of the outer cycles, and ``|I| = n/2 - 1``.  The search
below decides internal/leaf status vertex by vertex with propagation of
these local rules.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NotAHist, SizeCapExceeded
from .graph import CubicGraph, Edge, edge

DEFAULT_MAX_VERTICES = 100
DEFAULT_CDC_CAP = 20

Profile = tuple[int, ...]

_UNDEC, _INT, _LEAF = 0, 1, 2


@dataclass(frozen=True)
class Hist:
    tree_edges: frozenset[Edge]

    def degrees(self, n: int) -> list[int]:
        deg = [0] * n
        for u, v in self.tree_edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def internal(self, n: int) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.degrees(n)) if d == 3)

    def leaves(self, n: int) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.degrees(n)) if d == 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.tree_edges)


def profile_of(lengths: Iterable[int]) -> Profile:
    return tuple(sorted(lengths))


def format_profile(p: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in p) + "}"


def hist_from_internal(g: CubicGraph, internal: Iterable[int]) -> Hist:
    ins = set(internal)
    return Hist(frozenset(e for e in g.edges if e[0] in ins or e[1] in ins))


def check_hist(g: CubicGraph, tree_edges: Iterable[Edge]) -> Hist:
    """Validate a tree edge set directly against the definition.

    This does not use the internal-set characterization: it checks the edge
    count, acyclicity, spanning connectivity and the degree condition.
    """
    es = frozenset(edge(*e) for e in tree_edges)
    for e in es:
        if not g.has_edge(*e):
            raise NotAHist(f"{e} is not an edge of the graph")
    if len(es) != g.n - 1:
        raise NotAHist(f"tree must have {g.n - 1} edges, got {len(es)}")
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    deg = [0] * g.n
    for u, v in es:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise NotAHist(f"edge {(u, v)} closes a cycle")
        parent[ru] = rv
        deg[u] += 1
        deg[v] += 1
    # n-1 edges and acyclic implies spanning and connected
    bad = [v for v in range(g.n) if deg[v] not in (1, 3)]
    if bad:
        raise NotAHist(f"vertices with tree-degree not in {{1,3}}: {bad[:10]}")
    return Hist(es)


def _cap(g: CubicGraph, max_vertices: int | None) -> None:
    if max_vertices is not None and g.n > max_vertices:
        raise SizeCapExceeded(f"graph has {g.n} vertices, cap is {max_vertices}")


class _HistSearch:
    def __init__(self, g: CubicGraph):
        self.g = g
        self.adj = g.adjacency
        self.n = g.n
        self.target_int = g.n // 2 - 1
        self.target_leaf = g.n // 2 + 1

    def _internal_path_exists(self, status: list[int], src: int, dst: set[int], skip: int) -> bool:
        adj = self.adj
        seen = {src, skip}
        stack = [src]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in seen or status[w] != _INT:
                    continue
                if w in dst:
                    return True
                seen.add(w)
                stack.append(w)
        return False

    def _assign(self, status: list[int], counts: list[int], todo: list[tuple[int, int]]) -> bool:
        adj = self.adj
        while todo:
            v, s = todo.pop()
            cur = status[v]
            if cur == s:
                continue
            if cur != _UNDEC:
                return False
            status[v] = s
            counts[s] += 1
            if counts[_INT] > self.target_int or counts[_LEAF] > self.target_leaf:
                return False
            if s == _INT:
                ins = [w for w in adj[v] if status[w] == _INT]
                if len(ins) >= 2:
                    rest = set(ins[1:])
                    if self._internal_path_exists(status, ins[0], rest, v):
                        return False
                    if len(ins) == 3 and self._internal_path_exists(status, ins[1], {ins[2]}, v):
                        return False
            for x in (v, *adj[v]):
                sx = status[x]
                ci = cl = 0
                for w in adj[x]:
                    t = status[w]
                    if t == _INT:
                        ci += 1
                    elif t == _LEAF:
                        cl += 1
                if sx == _LEAF:
                    if ci > 1 or cl > 2:
                        return False
                    if ci == 1 and cl < 2:
                        todo.extend((w, _LEAF) for w in adj[x] if status[w] == _UNDEC)
                    elif cl == 2 and ci == 0:
                        todo.extend((w, _INT) for w in adj[x] if status[w] == _UNDEC)
                elif sx == _UNDEC:
                    if ci >= 2 or cl == 3:
                        todo.append((x, _INT))
            if counts[_INT] == self.target_int and counts[_LEAF] < self.target_leaf:
                todo.extend((w, _LEAF) for w in range(self.n) if status[w] == _UNDEC)
            elif counts[_LEAF] == self.target_leaf and counts[_INT] < self.target_int:
                todo.extend((w, _INT) for w in range(self.n) if status[w] == _UNDEC)
        return True

    def _reach_prune(self, status: list[int], counts: list[int]) -> bool:
        """Internal vertices must stay connected through non-leaf vertices.

        Undecided vertices outside that region are forced to be leaves.
        """
        adj = self.adj
        while True:
            root = next((v for v in range(self.n) if status[v] == _INT), None)
            if root is None:
                return True
            seen = [False] * self.n
            seen[root] = True
            stack = [root]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if not seen[w] and status[w] != _LEAF:
                        seen[w] = True
                        stack.append(w)
            forced = []
            for v in range(self.n):
                if not seen[v]:
                    if status[v] == _INT:
                        return False
                    if status[v] == _UNDEC:
                        forced.append((v, _LEAF))
            if not forced:
                return True
            if not self._assign(status, counts, forced):
                return False

    def _choose(self, status: list[int]) -> int:
        adj = self.adj
        best, best_key = -1, None
        for v in range(self.n):
            if status[v] != _UNDEC:
                continue
            ni = nd = 0
            for w in adj[v]:
                t = status[w]
                if t != _UNDEC:
                    nd += 1
                    if t == _INT:
                        ni += 1
            key = (ni > 0, nd)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def run(self) -> Iterator[frozenset[int]]:
        status = [_UNDEC] * self.n
        counts = [0, 0, 0]
        yield from self._dfs(status, counts)

    def _dfs(self, status: list[int], counts: list[int]) -> Iterator[frozenset[int]]:
        if counts[_INT] + counts[_LEAF] == self.n:
            yield frozenset(v for v in range(self.n) if status[v] == _INT)
            return
        v = self._choose(status)
        for s in (_INT, _LEAF):
            st, ct = status[:], counts[:]
            if self._assign(st, ct, [(v, s)]) and self._reach_prune(st, ct):
                yield from self._dfs(st, ct)


def iter_hists(g: CubicGraph, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> Iterator[Hist]:
    """Yield every Hist of ``g`` exactly once, in a deterministic order."""
    _cap(g, max_vertices)
    if g.n < 4:
        return
    for internal in _HistSearch(g).run():
        yield check_hist(g, hist_from_internal(g, internal).tree_edges)


def find_hist(g: CubicGraph, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> Hist | None:
    """First Hist found, or None when the exhaustive search finds nothing."""
    return next(iter_hists(g, max_vertices), None)


def enumerate_hists(g: CubicGraph, limit: int, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> list[Hist]:
    if limit < 1:
        raise ValueError("limit must be at least 1")
    return list(itertools.islice(iter_hists(g, max_vertices), limit))


def _cycle_order(g: CubicGraph, comp: list[int], non_tree: set[Edge]) -> list[int]:
    start = min(comp)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = sorted(w for w in g.adjacency[cur] if edge(cur, w) in non_tree and w != prev)
        if prev is None:
            nxt = nxt[:1]
        if not nxt or nxt[0] == start:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def outer_cycle_vertices(g: CubicGraph, hist: Hist) -> list[list[int]]:
    """Outer cycles as vertex sequences in cyclic order, sorted by first vertex."""
    hist = check_hist(g, hist.tree_edges)
    non_tree = set(g.edges) - hist.tree_edges
    deg = hist.degrees(g.n)
    nt_deg = Counter()
    for u, v in non_tree:
        nt_deg[u] += 1
        nt_deg[v] += 1
    for v in range(g.n):
        expect = 2 if deg[v] == 1 else 0
        if nt_deg[v] != expect:
            raise NotAHist(f"vertex {v} has {nt_deg[v]} non-tree edges")
    seen: set[int] = set()
    cycles = []
    for v in range(g.n):
        if deg[v] != 1 or v in seen:
            continue
        comp = []
        queue = deque([v])
        seen.add(v)
        while queue:
            x = queue.popleft()
            comp.append(x)
            for w in g.adjacency[x]:
                if w not in seen and edge(x, w) in non_tree:
                    seen.add(w)
                    queue.append(w)
        cycles.append(_cycle_order(g, comp, non_tree))
    return cycles


def outer_cycles(g: CubicGraph, hist: Hist) -> tuple[list[frozenset[Edge]], Profile]:
    """Partition the non-tree edges into outer cycles; return them and the profile."""
    cycles = outer_cycle_vertices(g, hist)
    edge_sets = [
        frozenset(edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))) for c in cycles
    ]
    return edge_sets, profile_of(len(c) for c in cycles)


def profile(g: CubicGraph, hist: Hist) -> Profile:
    return outer_cycles(g, hist)[1]


# -- cycle double cover probe -------------------------------------------------


def all_cycles(g: CubicGraph) -> list[frozenset[Edge]]:
    """Every cycle of ``g`` as an edge set (exponential; small graphs only)."""
    found: set[frozenset[Edge]] = set()
    adj = g.adjacency
    for s in range(g.n):
        # cycles whose smallest vertex is s
        stack = [(s, [s], {s})]
        while stack:
            v, path, on = stack.pop()
            for w in adj[v]:
                if w == s and len(path) >= 3:
                    cyc = frozenset(edge(path[i], path[(i + 1) % len(path)]) for i in range(len(path)))
                    found.add(cyc)
                elif w > s and w not in on:
                    stack.append((w, path + [w], on | {w}))
    return sorted(found, key=lambda c: (len(c), sorted(c)))


def cdc_with_outer_cycles(
    g: CubicGraph, hist: Hist, cap: int = DEFAULT_CDC_CAP
) -> list[frozenset[Edge]] | None:
    """Search for a cycle double cover containing every outer cycle of ``hist``.

    Returns the cover as a list of edge sets (outer cycles first), or None when
    the exhaustive search over cycle families fails.
    """
    if g.n > cap:
        raise SizeCapExceeded(f"graph has {g.n} vertices, CDC cap is {cap}")
    mandatory, _ = outer_cycles(g, hist)
    cover = {e: 0 for e in g.edges}
    for c in mandatory:
        for e in c:
            cover[e] += 1
    pool = [c for c in all_cycles(g) if c not in set(mandatory)]
    by_edge: dict[Edge, list[frozenset[Edge]]] = {e: [] for e in g.edges}
    for c in pool:
        for e in c:
            by_edge[e].append(c)

    chosen: list[frozenset[Edge]] = []
    used: set[frozenset[Edge]] = set()

    def solve() -> bool:
        open_edges = [e for e, k in cover.items() if k < 2]
        if not open_edges:
            return True
        # most constrained uncovered edge first
        best, options = None, None
        for e in open_edges:
            opts = [c for c in by_edge[e] if c not in used and all(cover[f] < 2 for f in c)]
            if options is None or len(opts) < len(options):
                best, options = e, opts
                if not opts:
                    return False
        for c in options:
            for f in c:
                cover[f] += 1
            chosen.append(c)
            used.add(c)
            if solve():
                return True
            used.discard(c)
            chosen.pop()
            for f in c:
                cover[f] -= 1
        return False

    if any(k > 2 for k in cover.values()):
        return None
    if solve():
        return list(mandatory) + chosen
    return None
