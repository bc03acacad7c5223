"""Snark certification: girth, cyclic edge connectivity, 3-edge-colorability."""

from __future__ import annotations

import itertools
import os
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .errors import SizeCapExceeded
from .graph import CubicGraph, Edge, connected_components, contains_cycle, cut_edges

DEFAULT_MAX_VERTICES = 200
ENV_MAX_VERTICES = "SNARKLAB_MAX_VERTICES"


def default_max_vertices() -> int:
    raw = os.environ.get(ENV_MAX_VERTICES)
    return int(raw) if raw else DEFAULT_MAX_VERTICES


def _check_cap(g: CubicGraph, max_vertices: int | None) -> None:
    cap = default_max_vertices() if max_vertices is None else max_vertices
    if g.n > cap:
        raise SizeCapExceeded(f"graph has {g.n} vertices, cap is {cap}")


def girth(g: CubicGraph) -> int:
    """Length of a shortest cycle (BFS from every vertex)."""
    best = g.n + 1
    adj = g.adjacency
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v]:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def _cut_labels(g: CubicGraph, seed: int = 0x5EED) -> list[int]:
    """64-bit edge labels whose XOR vanishes on every edge cut.

    Non-tree edges of a BFS forest get random labels; a tree edge gets the
    XOR of the non-tree edges whose fundamental cycle uses it.  Any edge cut
    meets each fundamental cycle an even number of times, so its labels XOR
    to zero.  Other edge sets do so only with probability 2**-64, and every
    candidate is re-checked exactly anyway.
    """
    rng = random.Random(seed)
    parent = [-1] * g.n
    depth = [-1] * g.n
    for s in range(g.n):
        if depth[s] >= 0:
            continue
        depth[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if depth[w] < 0:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    queue.append(w)
    labels = [0] * g.m
    # accumulated XOR pushed up the tree: acc[v] labels the edge v-parent[v]
    acc = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        if parent[v] == u or parent[u] == v:
            continue
        r = rng.getrandbits(64)
        labels[i] = r
        acc[u] ^= r
        acc[v] ^= r
    for v in sorted(range(g.n), key=lambda x: -depth[x]):
        p = parent[v]
        if p >= 0:
            labels[g.edge_index(v, p)] = acc[v]
            acc[p] ^= acc[v]
    return labels


def _candidate_cuts(g: CubicGraph, size: int, labels: list[int]) -> Iterator[tuple[int, ...]]:
    """Edge-index sets of the given size whose labels XOR to zero."""
    m = g.m
    if size == 1:
        yield from ((i,) for i in range(m) if labels[i] == 0)
        return
    by_label: dict[int, list[int]] = {}
    for i, x in enumerate(labels):
        by_label.setdefault(x, []).append(i)
    if size == 2:
        for i in range(m):
            for j in by_label[labels[i]]:
                if j > i:
                    yield (i, j)
    elif size == 3:
        for i in range(m):
            for j in range(i + 1, m):
                for k in by_label.get(labels[i] ^ labels[j], ()):
                    if k > j:
                        yield (i, j, k)
    elif size == 4:
        pairs: dict[int, list[tuple[int, int]]] = {}
        for i in range(m):
            for j in range(i + 1, m):
                pairs.setdefault(labels[i] ^ labels[j], []).append((i, j))
        for group in pairs.values():
            for (i, j), (k, l) in itertools.combinations(group, 2):
                if j < k:
                    yield (i, j, k, l)
    else:
        raise ValueError("cut size must be between 1 and 4")


def find_cyclic_cut(g: CubicGraph, max_size: int) -> tuple[Edge, ...] | None:
    """Smallest cyclic edge cut with at most ``max_size`` edges, if any."""
    comps = connected_components(g)
    if len(comps) > 1:
        cyclic = [c for c in comps if contains_cycle(g, c)]
        if len(cyclic) >= 2:
            return ()
    labels = _cut_labels(g)
    for size in range(1, max_size + 1):
        for idx in _candidate_cuts(g, size, labels):
            witness = _cyclic_side_cut(g, {g.edges[i] for i in idx})
            if witness is not None:
                return witness
    return None


def find_cyclic_cut_bruteforce(g: CubicGraph, max_size: int) -> tuple[Edge, ...] | None:
    """Reference version: try every edge subset of each size in turn."""
    comps = connected_components(g)
    if len(comps) > 1 and sum(1 for c in comps if contains_cycle(g, c)) >= 2:
        return ()
    for size in range(1, max_size + 1):
        for subset in itertools.combinations(g.edges, size):
            witness = _cyclic_side_cut(g, set(subset))
            if witness is not None:
                return witness
    return None


def _cyclic_side_cut(g: CubicGraph, removed: set[Edge]) -> tuple[Edge, ...] | None:
    parts = connected_components(g, removed)
    if len(parts) < 2:
        return None
    everything = frozenset(range(g.n))
    for part in parts:
        if contains_cycle(g, part) and contains_cycle(g, everything - part):
            return tuple(cut_edges(g, part))
    return None


def cyclic_edge_connectivity_at_least(g: CubicGraph, k: int) -> tuple[bool, tuple[Edge, ...] | None]:
    """Whether no cyclic cut has fewer than ``k`` edges; else a minimal cut."""
    if k not in (4, 5):
        raise ValueError("k must be 4 or 5")
    cut = find_cyclic_cut(g, k - 1)
    return cut is None, cut


# -- 3-edge-coloring -------------------------------------------------------------


def _dfs_edge_order(g: CubicGraph) -> list[int]:
    seen_v = [False] * g.n
    seen_e = [False] * g.m
    order = []
    for s in range(g.n):
        if seen_v[s]:
            continue
        seen_v[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                i = g.edge_index(v, w)
                if not seen_e[i]:
                    seen_e[i] = True
                    order.append(i)
                if not seen_v[w]:
                    seen_v[w] = True
                    stack.append(w)
    return order


class _BudgetExhausted(Exception):
    pass


class _EdgeColorer:
    def __init__(self, g: CubicGraph):
        self.g = g
        self.inc = [[g.edge_index(v, w) for w in g.adjacency[v]] for v in range(g.n)]
        self.ends = g.edges
        self.order = _dfs_edge_order(g)

    def _set(self, dom: list[int], e: int, bit: int) -> bool:
        if not dom[e] & bit:
            return False
        dom[e] = bit
        # edges whose (now single) color still has to be removed from neighbors
        todo = [(e, bit)]
        while todo:
            e, bit = todo.pop()
            for v in self.ends[e]:
                for f in self.inc[v]:
                    if f == e:
                        continue
                    d = dom[f]
                    if d & bit:
                        d &= ~bit
                        if not d:
                            return False
                        dom[f] = d
                        if d & (d - 1) == 0:
                            todo.append((f, d))
        return True

    def solve(self, budget: int | None = None) -> list[int] | None:
        """A coloring, or None when none exists.

        With a node budget the search may give up by raising _BudgetExhausted.
        """
        self.budget = budget
        dom = [7] * self.g.m
        if self.order:
            first = self.order[0]
            if not self._set(dom, first, 1):
                return None
            u, v = self.ends[first]
            nxt = next((f for f in self.inc[u] if f != first), None)
            if nxt is not None and not self._set(dom, nxt, 2):
                return None
        found = self._search(dom, 0)
        if found is None:
            return None
        return [{1: 1, 2: 2, 4: 3}[d] for d in found]

    def _search(self, dom: list[int], pos: int) -> list[int] | None:
        order = self.order
        while pos < len(order) and dom[order[pos]] & (dom[order[pos]] - 1) == 0:
            pos += 1
        if pos == len(order):
            return dom
        if self.budget is not None:
            self.budget -= 1
            if self.budget < 0:
                raise _BudgetExhausted
        e = order[pos]
        for bit in (1, 2, 4):
            if dom[e] & bit:
                trial = dom[:]
                if self._set(trial, e, bit):
                    res = self._search(trial, pos + 1)
                    if res is not None:
                        return res
        return None


def is_proper_edge_coloring(g: CubicGraph, colors: list[int] | tuple[int, ...]) -> bool:
    if len(colors) != g.m or any(c not in (1, 2, 3) for c in colors):
        return False
    for v in range(g.n):
        seen = {colors[g.edge_index(v, w)] for w in g.adjacency[v]}
        if len(seen) != 3:
            return False
    return True


def _frontier_order(g: CubicGraph, starts: int = 1000) -> list[int]:
    """A vertex order with a small edge frontier.

    Greedy: always take the vertex with the most already-placed neighbours.
    A handful of start vertices are tried and the narrowest order is kept.
    """
    n = g.n
    if n == 0:
        return []
    step = max(1, n // starts)
    best: tuple[int, list[int]] | None = None
    for s in range(0, n, step):
        placed = [False] * n
        back = [0] * n
        touched = [n] * n
        order = []
        frontier = width = 0
        candidates: set[int] = set()
        for t in range(n):
            if t == 0:
                v = s
            elif candidates:
                v = max(candidates, key=lambda u: (back[u], -touched[u], -u))
            else:
                v = next(u for u in range(n) if not placed[u])
            candidates.discard(v)
            placed[v] = True
            order.append(v)
            frontier += 3 - 2 * back[v]
            width = max(width, frontier)
            for w in g.adjacency[v]:
                if not placed[w]:
                    back[w] += 1
                    touched[w] = min(touched[w], t)
                    candidates.add(w)
            if best is not None and width >= best[0]:
                break
        else:
            best = (width, order)
    assert best is not None
    return best[1]


def _canonical(state: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Rename colors in order of first appearance; also return the renaming."""
    ren = [0, 0, 0, 0]
    nxt = 1
    for c in state:
        if not ren[c]:
            ren[c] = nxt
            nxt += 1
            if nxt == 4:
                break
    for c in (1, 2, 3):
        if not ren[c]:
            ren[c] = nxt
            nxt += 1
    return tuple(ren[c] for c in state), (0, ren[1], ren[2], ren[3])


def _frontier_coloring(g: CubicGraph) -> list[int] | None:
    """Exact dynamic program over an edge frontier.

    States are the colors of the edges crossing the cut between placed and
    unplaced vertices, kept up to renaming of the three colors.  Placing a
    vertex checks that its back edges carry distinct colors and gives its
    forward edges the remaining ones.  Each layer remembers a parent and
    the renaming used, so a witness can be read back.
    """
    order = _frontier_order(g)
    pos = {v: i for i, v in enumerate(order)}
    frontier: list[int] = []
    layer: dict[tuple[int, ...], object] = {(): None}
    history = []
    for t, v in enumerate(order):
        back = [g.edge_index(v, w) for w in g.adjacency[v] if pos[w] < t]
        fwd = [g.edge_index(v, w) for w in g.adjacency[v] if pos[w] > t]
        slot = {e: i for i, e in enumerate(frontier)}
        bpos = [slot[e] for e in back]
        keep = [i for i in range(len(frontier)) if i not in bpos]
        nxt: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]] = {}
        choices: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for st in layer:
            bc = tuple(st[i] for i in bpos)
            if len(set(bc)) != len(bc):
                continue
            if bc not in choices:
                rest = [c for c in (1, 2, 3) if c not in bc]
                choices[bc] = sorted({p[: len(fwd)] for p in itertools.permutations(rest)})
            base = tuple(st[i] for i in keep)
            for p in choices[bc]:
                key, ren = _canonical(base + p)
                if key not in nxt:
                    nxt[key] = (st, ren)
        frontier = [frontier[i] for i in keep] + fwd
        history.append((frontier, nxt))
        layer = nxt
        if not layer:
            return None
    # Walk back from the final (empty) state.  ``tau`` maps the stored
    # labels of the current layer to the colors of the witness.
    colors = [0] * g.m
    state: tuple[int, ...] = next(iter(layer))
    tau = (0, 1, 2, 3)
    for frontier_t, parents in reversed(history):
        for e, c in zip(frontier_t, state):
            colors[e] = tau[c]
        parent, ren = parents[state]
        # stored state = ren(key), and key is written in the parent's labels
        tau = tuple(tau[ren[c]] if c else 0 for c in range(4))
        state = parent
    return colors


def is_three_edge_colorable(
    g: CubicGraph, max_vertices: int | None = None, *, budget: int = 2000
) -> tuple[bool, tuple[int, ...] | None]:
    """Exhaustive verdict plus a witness (colors aligned with ``g.edges``).

    A propagating backtracking search gets ``budget`` nodes, which settles
    colorable graphs quickly.  If it runs out, the frontier dynamic program
    decides the question exactly.
    """
    _check_cap(g, max_vertices)
    try:
        colors = _EdgeColorer(g).solve(budget)
    except _BudgetExhausted:
        colors = _frontier_coloring(g)
    if colors is None:
        return False, None
    return True, tuple(colors)


# -- certificate ---------------------------------------------------------------


@dataclass(frozen=True)
class SnarkCertificate:
    n: int
    connected: bool
    girth: int
    cyclically_4_edge_connected: bool
    cyclic_cut: tuple[Edge, ...] | None
    three_edge_colorable: bool
    coloring: tuple[int, ...] | None
    checks_run: tuple[str, ...] = field(default=())

    @property
    def is_snark(self) -> bool:
        return (
            self.connected
            and self.girth >= 5
            and self.cyclically_4_edge_connected
            and not self.three_edge_colorable
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "connected": self.connected,
            "girth": self.girth,
            "cyclically_4_edge_connected": self.cyclically_4_edge_connected,
            "cyclic_cut": [list(e) for e in self.cyclic_cut] if self.cyclic_cut is not None else None,
            "three_edge_colorable": self.three_edge_colorable,
            "coloring": list(self.coloring) if self.coloring is not None else None,
            "checks_run": list(self.checks_run),
            "is_snark": self.is_snark,
        }


def certify_snark(g: CubicGraph, max_vertices: int | None = None) -> SnarkCertificate:
    """Run every snark check and return an auditable certificate.

    Disconnected input is reported as not a snark rather than rejected.
    """
    _check_cap(g, max_vertices)
    connected = len(connected_components(g)) == 1
    gi = girth(g)
    ok4, cut = cyclic_edge_connectivity_at_least(g, 4)
    colorable, coloring = is_three_edge_colorable(g, max_vertices=g.n)
    return SnarkCertificate(
        n=g.n,
        connected=connected,
        girth=gi,
        cyclically_4_edge_connected=ok4,
        cyclic_cut=cut,
        three_edge_colorable=colorable,
        coloring=coloring,
        checks_run=("connectivity", "girth", "cyclic_connectivity", "coloring"),
    )
