"""Labeled copies of small named snarks and the role constants built on them."""

from __future__ import annotations

from functools import cache

from .graph import CubicGraph, from_edges

# Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
)
PETERSEN_OUTER = (0, 1, 2, 3, 4)
PETERSEN_INNER = (5, 7, 9, 6, 8)  # cyclic order of the pentagram

# Blanusa snark with automorphism group of order 8 (dot product of two
# Petersen graphs).
BLANUSA_EDGES = (
    (0, 1), (0, 4), (0, 12), (1, 2), (1, 6), (2, 7), (2, 10), (3, 4), (3, 8),
    (3, 14), (4, 9), (5, 7), (5, 8), (5, 13), (6, 8), (6, 9), (7, 9), (10, 11),
    (10, 15), (11, 12), (11, 16), (12, 17), (13, 15), (13, 16), (14, 16),
    (14, 17), (15, 17),
)

# Loupekine snark on 22 vertices: three copies of the Petersen graph minus a
# 3-vertex path, a central vertex 21 joined to the three path middles.
LOUPEKINE_EDGES = (
    (0, 1), (0, 5), (0, 8), (1, 6), (1, 18), (2, 4), (2, 5), (2, 14), (3, 5),
    (3, 6), (3, 21), (4, 6), (4, 9), (7, 8), (7, 12), (7, 15), (8, 13), (9, 11),
    (9, 12), (10, 12), (10, 13), (10, 21), (11, 13), (11, 16), (14, 15),
    (14, 19), (15, 20), (16, 18), (16, 19), (17, 19), (17, 20), (17, 21),
    (18, 20),
)

# Roles on the Petersen graph for the k -> k+4 step: e3 is a spoke with its
# head on the inner pentagram.
P10_SPOKE_E3 = (0, 5)
# Roles for the "+5" step: e3 on the outer cycle, x1 and x2 on it as well.
P10_RIM_E3 = (0, 1)
P10_RIM_X1 = 4
P10_RIM_X2 = 2

# Roles on the Blanusa snark for the "k -> k+2 plus a 7" step.  Deleting
# the ends of e3 leaves 16 vertices; the internal ones below induce a tree
# containing all four former neighbors of e3, the other seven induce a
# 7-cycle.
B18_E3 = (0, 1)
B18_INTERNAL = (2, 4, 6, 7, 9, 10, 11, 12, 16)


@cache
def petersen() -> CubicGraph:
    return from_edges(10, PETERSEN_EDGES)


@cache
def blanusa() -> CubicGraph:
    return from_edges(18, BLANUSA_EDGES)


@cache
def loupekine() -> CubicGraph:
    return from_edges(22, LOUPEKINE_EDGES)
