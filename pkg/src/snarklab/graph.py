"""Immutable simple cubic graphs on vertices ``0..n-1``.

Edges are unordered pairs stored as ``(u, v)`` with ``u < v``; the canonical
edge list is sorted lexicographically, and edge indices everywhere refer to
that order.  Vertex and edge subsets are plain ``frozenset`` objects.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import Inconsistent, NotCubic, NotSimple

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered pair to ``(min, max)``."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CubicGraph:
    n: int
    adjacency: tuple[tuple[int, int, int], ...]
    edges: tuple[Edge, ...]
    _index: Mapping[Edge, int] = field(repr=False, compare=False, hash=False)

    def neighbors(self, v: int) -> tuple[int, int, int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self._index

    def edge_index(self, u: int, v: int) -> int:
        return self._index[edge(u, v)]

    def incident(self, v: int) -> tuple[Edge, Edge, Edge]:
        a, b, c = self.adjacency[v]
        return edge(v, a), edge(v, b), edge(v, c)

    @property
    def m(self) -> int:
        return len(self.edges)

    def digest(self) -> str:
        """Short content hash of the canonical edge list."""
        h = hashlib.sha256(f"{self.n}:{self.edges}".encode())
        return h.hexdigest()[:16]

    def __repr__(self) -> str:
        return f"CubicGraph(n={self.n}, m={self.m})"


def build(n: int, adjacency: Sequence[Iterable[int]] | Mapping[int, Iterable[int]]) -> CubicGraph:
    """Validate adjacency lists and return the canonical cubic graph.

    Raises NotSimple for loops and repeated neighbors, Inconsistent when an
    adjacency is not mirrored, and NotCubic when some degree differs from 3.
    """
    if isinstance(adjacency, Mapping):
        lists = [list(adjacency.get(v, ())) for v in range(n)]
        extra = set(adjacency) - set(range(n))
        if extra:
            raise Inconsistent(f"adjacency keys outside 0..{n - 1}: {sorted(extra)}")
    else:
        lists = [list(a) for a in adjacency]
        if len(lists) != n:
            raise Inconsistent(f"expected {n} adjacency lists, got {len(lists)}")

    for v, nbrs in enumerate(lists):
        for w in nbrs:
            if not 0 <= w < n:
                raise Inconsistent(f"vertex {v} lists unknown vertex {w}")
            if w == v:
                raise NotSimple(f"loop at vertex {v}")
        if len(set(nbrs)) != len(nbrs):
            raise NotSimple(f"parallel edge at vertex {v}")
    sets = [set(a) for a in lists]
    for v, nbrs in enumerate(sets):
        for w in nbrs:
            if v not in sets[w]:
                raise Inconsistent(f"{v} lists {w} but {w} does not list {v}")
    for v, nbrs in enumerate(sets):
        if len(nbrs) != 3:
            raise NotCubic(f"vertex {v} has degree {len(nbrs)}")

    adj = tuple(tuple(sorted(s)) for s in sets)
    edges = tuple(sorted({edge(v, w) for v in range(n) for w in adj[v]}))
    index = {e: i for i, e in enumerate(edges)}
    return CubicGraph(n, adj, edges, index)  # type: ignore[arg-type]


def from_edges(n: int, edges: Iterable[Edge]) -> CubicGraph:
    """Build from an edge list; a repeated pair raises NotSimple."""
    lists: list[list[int]] = [[] for _ in range(n)]
    seen: set[Edge] = set()
    for u, v in edges:
        if u == v:
            raise NotSimple(f"loop at vertex {u}")
        e = edge(u, v)
        if e in seen:
            raise NotSimple(f"parallel edge {e}")
        seen.add(e)
        if not (0 <= u < n and 0 <= v < n):
            raise Inconsistent(f"edge {e} outside 0..{n - 1}")
        lists[u].append(v)
        lists[v].append(u)
    return build(n, lists)


def connected_components(g: CubicGraph, removed_edges: Iterable[Edge] = ()) -> list[frozenset[int]]:
    """Vertex sets of the components of ``g`` minus ``removed_edges``.

    Components are ordered by their smallest vertex.
    """
    removed = {edge(*e) for e in removed_edges}
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w] and edge(v, w) not in removed:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(g: CubicGraph) -> bool:
    return len(connected_components(g)) == 1


def induced_edges(g: CubicGraph, vertex_set: Iterable[int]) -> list[Edge]:
    vs = set(vertex_set)
    return [(u, v) for u, v in g.edges if u in vs and v in vs]


def contains_cycle(g: CubicGraph, vertex_set: Iterable[int]) -> bool:
    """True iff the subgraph induced by ``vertex_set`` has a cycle."""
    vs = set(vertex_set)
    parent = {v: v for v in vs}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in induced_edges(g, vs):
        ru, rv = find(u), find(v)
        if ru == rv:
            return True
        parent[ru] = rv
    return False


def cut_edges(g: CubicGraph, side: Iterable[int]) -> list[Edge]:
    """Edges with exactly one endpoint in ``side``."""
    s = set(side)
    return [(u, v) for u, v in g.edges if (u in s) != (v in s)]
