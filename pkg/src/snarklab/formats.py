"""graph6, the ``v(n1,n2,...)`` adjacency text, bracketed cycle lists, and DOT."""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdge,
    GraphError,
    MalformedGraph6,
    NonAdjacentPair,
    NotCubic,
    OverlappingCycles,
    PaperSyntaxError,
)
from .graph import CubicGraph, Edge, edge, from_edges
from .hist import Hist

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 258047

_ENTRY = re.compile(r"(\d+)\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)")


# -- paper adjacency text -----------------------------------------------------


def _strip_layout(text: str) -> str:
    # LaTeX line breaks ("\\") show up when lists are copied from typeset sources
    return re.sub(r"\s+", "", text.replace("\\\\", " "))


def parse_paper_edges(text: str) -> list[Edge]:
    body = _strip_layout(text)
    edges: list[Edge] = []
    seen: set[Edge] = set()
    pos = 0
    while pos < len(body):
        m = _ENTRY.match(body, pos)
        if m is None:
            raise PaperSyntaxError(f"unexpected input at offset {pos}: {body[pos:pos + 20]!r}")
        v = int(m.group(1))
        for tok in m.group(2).split(","):
            w = int(tok)
            e = edge(v, w)
            if v == w:
                raise PaperSyntaxError(f"loop {v}({w})")
            if e in seen:
                raise DuplicateEdge(f"edge {e} listed twice")
            seen.add(e)
            edges.append(e)
        pos = m.end()
    if not edges:
        raise PaperSyntaxError("no adjacency entries found")
    return edges


def parse_paper_adjacency(text: str) -> CubicGraph:
    """Parse ``0(4,8,12)1(5,6,14)...``; each entry lists edges from its key.

    A vertex need not appear as a key as long as other entries give it
    degree 3.
    """
    edges = parse_paper_edges(text)
    n = max(max(e) for e in edges) + 1
    return from_edges(n, edges)


def emit_paper_adjacency(g: CubicGraph) -> str:
    """Each edge listed once, under its smaller endpoint."""
    parts = []
    for v in range(g.n):
        later = [w for w in g.adjacency[v] if w > v]
        if later:
            parts.append(f"{v}({','.join(map(str, later))})")
    return "".join(parts)


# -- bracketed outer-cycle declarations --------------------------------------


def parse_cycle_brackets(text: str) -> list[list[int]]:
    body = _strip_layout(text)
    if not re.fullmatch(r"(\[\d+(,\d+)*\])+", body):
        raise PaperSyntaxError(f"expected bracketed vertex lists, got {text!r}")
    return [[int(t) for t in grp.split(",")] for grp in re.findall(r"\[([\d,]+)\]", body)]


def cycle_edges(g: CubicGraph, cycle: list[int]) -> frozenset[Edge]:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NonAdjacentPair(f"not a simple cycle: {cycle}")
    out = set()
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise NonAdjacentPair(f"{u} and {v} are not adjacent")
        out.add(edge(u, v))
    return frozenset(out)


def parse_outer_cycle_declaration(text: str, g: CubicGraph) -> list[frozenset[Edge]]:
    cycles = parse_cycle_brackets(text)
    used: set[int] = set()
    out = []
    for c in cycles:
        es = cycle_edges(g, c)
        if used & set(c):
            raise OverlappingCycles(f"cycle {c} shares vertices {sorted(used & set(c))}")
        used |= set(c)
        out.append(es)
    return out


# -- graph6 ---------------------------------------------------------------------


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise MalformedGraph6("empty record")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 4 or data[1] == 126:
        raise MalformedGraph6("unsupported graph6 size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def decode_graph6(line: bytes | str) -> tuple[int, list[Edge]]:
    """Decode one graph6 record into ``(n, edges)`` without cubic checks."""
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]
    if any(b < 63 or b > 126 for b in data):
        raise MalformedGraph6("byte outside graph6 range")
    n, off = _decode_n(data)
    nbits = n * (n - 1) // 2
    body = data[off:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = []
    for b in body:
        x = b - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return n, sorted(edges)


def iter_graph6(data: bytes | str, strict: bool = True) -> Iterator[CubicGraph]:
    """Yield the cubic graphs of a graph6 stream.

    Blank lines are skipped.  With ``strict`` a non-cubic record raises
    NotCubic, otherwise it is skipped.
    """
    if isinstance(data, str):
        data = data.encode("ascii")
    for raw in data.splitlines():
        line = raw.strip()
        if not line:
            continue
        n, edges = decode_graph6(line)
        try:
            yield from_edges(n, edges)
        except GraphError as exc:
            if strict:
                raise NotCubic(f"graph6 record is not a simple cubic graph: {exc}") from exc


def parse_graph6(data: bytes | str, strict: bool = True) -> list[CubicGraph]:
    return list(iter_graph6(data, strict))


def encode_graph6(n: int, edges: Iterable[Edge]) -> str:
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 writer supports n <= {GRAPH6_MAX_N}")
    es = {edge(*e) for e in edges}
    if n < 63:
        head = [n + 63]
    else:
        head = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    bits = [1 if (i, j) in es else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [
        63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)
    ]
    return bytes(head + body).decode("ascii")


def emit_graph6(g: CubicGraph) -> str:
    return encode_graph6(g.n, g.edges)


# -- DOT --------------------------------------------------------------------------


def emit_dot(
    g: CubicGraph,
    hist: Hist | None = None,
    outer_cycles: Iterable[Iterable[Edge]] | None = None,
    name: str = "G",
) -> str:
    """Undirected DOT; tree edges bold, outer-cycle edges dashed."""
    tree = hist.tree_edges if hist is not None else frozenset()
    dashed = {edge(*e) for c in (outer_cycles or ()) for e in c}
    safe = re.sub(r"\W", "_", name) or "G"
    lines = [f"graph {safe} {{", "  node [shape=circle];"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges:
        attrs = []
        if (u, v) in dashed:
            attrs.append("style=dashed")
        elif (u, v) in tree:
            attrs.append("style=bold")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def looks_like_paper_format(text: str) -> bool:
    body = text.lstrip()
    return body.startswith("[") or re.match(r"^(\w+\s*:\s*)?\d+\s*\(", body) is not None
