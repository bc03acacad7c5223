import itertools

import networkx as nx
import pytest

from snarklab import constructions as cons
from snarklab.certify import certify_snark
from snarklab.constructions import (
    DotAnchors,
    HistSnark,
    Provenance,
    TriangleAnchors,
    bullet,
    dot_product,
    iter_dot_anchors,
    iter_triangle_anchors,
    triangle,
)
from snarklab.errors import ElementAbsent, InvalidAnchors, NoValidAnchors, VerificationFailed
from snarklab.fixtures import fixture
from snarklab.hist import check_hist, outer_cycles
from snarklab.named import blanusa, petersen

from oracles import to_nx

P = petersen()


def recomputed_profile(x: HistSnark):
    hist = check_hist(x.graph, x.hist.tree_edges)
    return outer_cycles(x.graph, hist)[1]


def test_petersen_dot_petersen_gives_both_blanusa_snarks():
    classes = []
    for a in itertools.islice(iter_dot_anchors(P, P), 0, 72000, 2000):
        out = to_nx(dot_product(P, P, a))
        assert out.number_of_nodes() == 18
        if not any(nx.is_isomorphic(out, c) for c in classes):
            classes.append(out)
    assert len(classes) == 2
    assert sum(nx.is_isomorphic(c, to_nx(blanusa())) for c in classes) == 1


def test_anchor_choice_defaults_and_roles():
    a = DotAnchors.choose(P, P, (0, 1), (2, 3), (5, 7))
    assert (a.x1, a.y1) == (0, 8)
    assert (a.x2, a.y2) == (2, 9)
    b = DotAnchors.choose(P, P, (0, 1), (2, 3), (5, 7), x1=8)
    assert (b.x1, b.y1) == (8, 0)


@pytest.mark.parametrize(
    "e1, e2, e3, kw",
    [
        ((0, 1), (1, 2), (5, 7), {}),  # not independent
        ((0, 2), (3, 4), (5, 7), {}),  # e1 missing from G
        ((0, 1), (2, 3), (5, 6), {}),  # e3 missing from H
        ((0, 1), (2, 3), (5, 7), {"x1": 7}),  # x1 is the edge mate
    ],
)
def test_invalid_anchors(e1, e2, e3, kw):
    with pytest.raises(InvalidAnchors):
        DotAnchors.choose(P, P, e1, e2, e3, **kw)


def test_triangle_needs_neighbor_c():
    with pytest.raises(InvalidAnchors):
        TriangleAnchors.choose_triangle(P, P, (0, 1), (2, 3), (5, 7), c=9)
    a = TriangleAnchors.choose_triangle(P, P, (0, 1), (2, 3), (5, 7), c=6)
    assert a.d == 2
    with pytest.raises(InvalidAnchors):
        triangle(P, P, DotAnchors.choose(P, P, (0, 1), (2, 3), (5, 7)))


def test_bullet_variant_checked():
    with pytest.raises(ValueError):
        bullet(P, P, DotAnchors.choose(P, P, (0, 1), (2, 3), (5, 7)), 4)


def test_vertex_counts_and_numbering():
    a = DotAnchors.choose(P, P, (0, 1), (2, 3), (5, 7))
    t = TriangleAnchors.choose_triangle(P, P, (0, 1), (2, 3), (5, 7), c=6)
    assert bullet(P, P, a, 1).n == 20
    assert bullet(P, P, a, 2).n == 20
    assert bullet(P, P, a, 3).n == 22
    assert triangle(P, P, t).n == 20
    out = bullet(P, P, a, 3)
    # untouched edges of G keep their labels
    for e in P.edges:
        if e not in {(0, 1), (2, 3)}:
            assert out.has_edge(*e)
    # the new vertices h1, j1, h2, j2 come last
    assert out.has_edge(0, 18) and out.has_edge(18, 19) and out.has_edge(19, 1)
    assert out.has_edge(2, 20) and out.has_edge(20, 21) and out.has_edge(21, 3)


def test_some_surgeries_certify():
    anchors = list(itertools.islice(iter_dot_anchors(P, P), 0, 72000, 9000))
    for a in anchors:
        for out in (dot_product(P, P, a), bullet(P, P, a, 1), bullet(P, P, a, 3)):
            assert certify_snark(out).is_snark
    for t in itertools.islice(iter_triangle_anchors(P, P), 0, 144000, 24000):
        assert certify_snark(triangle(P, P, t)).is_snark


def test_union_disjoint_profile():
    x = cons.union_disjoint(fixture("P10"), fixture("P10"), certify=True)
    assert x.n == 22 and x.profile == (6, 6) == recomputed_profile(x)


def test_union_merge_profile():
    x = cons.union_merge(fixture("P10"), 6, fixture("P10"), 6, certify=True)
    assert x.n == 20 and x.profile == (11,) == recomputed_profile(x)


def test_union_merge_mixed_inputs():
    x = cons.union_merge(fixture("T(5,7)"), 5, fixture("P10"), 6, certify=True)
    assert x.profile == (7, 10) == recomputed_profile(x)


def test_reduce_i_profile():
    x = cons.reduce_i(fixture("P10"), 6, certify=True)
    assert x.n == 18 and x.profile == (10,) == recomputed_profile(x)


def test_reduce_ii_profile():
    x = cons.reduce_ii(fixture("P10"), certify=True)
    assert x.n == 20 and x.profile == (5, 6) == recomputed_profile(x)


def test_reduce_iii_profile():
    x = cons.reduce_iii(fixture("P10"), certify=True)
    assert x.n == 22 and x.profile == (6, 6) == recomputed_profile(x)


def test_reduce_iv_profile():
    x = cons.reduce_iv(fixture("P10"), 6, certify=True)
    assert x.n == 28 and x.profile == (7, 8) == recomputed_profile(x)


def test_reductions_on_two_cycle_input():
    base = fixture("T(5,5)")
    assert cons.reduce_i(base, 5).profile == (5, 9)
    assert cons.reduce_iv(base, 5).profile == (5, 7, 7)


def test_missing_element():
    with pytest.raises(ElementAbsent):
        cons.reduce_i(fixture("P10"), 5)
    with pytest.raises(ElementAbsent):
        cons.union_merge(fixture("P10"), 6, fixture("P10"), 7)
    with pytest.raises(ElementAbsent):
        cons.reduce_iv(fixture("P10"), 8)


def test_first_valid_reports_failures():
    with pytest.raises(NoValidAnchors):
        cons._first_valid("x", [], lambda c: c)

    def fail(c):
        raise VerificationFailed("nope")

    with pytest.raises(VerificationFailed, match="all 2 anchor candidates"):
        cons._first_valid("x", [1, 2], fail)


def test_provenance_round_trip():
    x = cons.reduce_iii(cons.reduce_ii(fixture("P10")))
    assert x.provenance.steps() == ["fixture:P10", "reduce_ii", "fixture:P10", "reduce_iii"]
    assert Provenance.from_json(x.provenance.to_json()) == x.provenance
    assert x.provenance.graph_digest == x.graph.digest()
    assert x.provenance.anchors["new_h1"] >= 0


def test_constructions_are_deterministic():
    a = cons.reduce_iv(fixture("P10"), 6)
    b = cons.reduce_iv(fixture("P10"), 6)
    assert a.graph == b.graph and a.hist == b.hist
