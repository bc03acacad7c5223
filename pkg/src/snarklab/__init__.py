"""Hist-snarks: certification, Hist search, snark surgeries and realization."""

from .certify import (
    SnarkCertificate,
    certify_snark,
    cyclic_edge_connectivity_at_least,
    girth,
    is_three_edge_colorable,
)
from .constructions import (
    ConstructedHistSnark,
    DotAnchors,
    HistSnark,
    Provenance,
    TriangleAnchors,
    bullet,
    dot_product,
    reduce_i,
    reduce_ii,
    reduce_iii,
    reduce_iv,
    triangle,
    union_disjoint,
    union_merge,
)
from .fixtures import HistFreeSnark, fixture, hist_snark
from .formats import emit_dot, emit_graph6, parse_graph6, parse_outer_cycle_declaration, parse_paper_adjacency
from .graph import CubicGraph, build, connected_components, contains_cycle, from_edges
from .hist import Hist, cdc_with_outer_cycles, enumerate_hists, find_hist, outer_cycles, profile
from .realizer import is_admissible, plan, realize, scan_for_hists

__all__ = [
    "ConstructedHistSnark", "CubicGraph", "DotAnchors", "Hist", "HistFreeSnark", "HistSnark",
    "Provenance", "SnarkCertificate", "TriangleAnchors", "build", "bullet", "cdc_with_outer_cycles",
    "certify_snark", "connected_components", "contains_cycle", "cyclic_edge_connectivity_at_least",
    "dot_product", "emit_dot", "emit_graph6", "enumerate_hists", "find_hist", "fixture", "from_edges",
    "girth", "hist_snark", "is_admissible", "is_three_edge_colorable", "outer_cycles",
    "parse_graph6", "parse_outer_cycle_declaration", "parse_paper_adjacency", "plan", "profile",
    "realize", "reduce_i", "reduce_ii", "reduce_iii", "reduce_iv", "scan_for_hists", "triangle",
    "union_disjoint", "union_merge",
]
