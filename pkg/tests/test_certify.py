import pytest
from hypothesis import given, settings, strategies as st

from snarklab import certify as cert
from snarklab.certify import (
    certify_snark,
    cyclic_edge_connectivity_at_least,
    find_cyclic_cut,
    find_cyclic_cut_bruteforce,
    girth,
    is_proper_edge_coloring,
    is_three_edge_colorable,
)
from snarklab.errors import SizeCapExceeded
from snarklab.fixtures import fixture
from snarklab.graph import connected_components, contains_cycle, cut_edges, from_edges
from snarklab.named import blanusa, petersen

from oracles import (
    k4,
    matching_colorable,
    naive_colorable,
    naive_cyclic_cut_size,
    naive_girth,
    prism,
    random_connected_cubic,
)


def two_k4_minus_edge():
    """Two copies of K4 minus an edge, joined by two edges: a cyclic 2-edge cut."""
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    edges += [(a + 4, b + 4) for a, b in edges]
    edges += [(0, 4), (3, 7)]
    return from_edges(8, edges)


def bridged_graph():
    """Two 5-vertex blobs (K4 with a subdivided edge) joined by a bridge; not colorable."""
    blob = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]
    edges = blob + [(a + 5, b + 5) for a, b in blob] + [(4, 9)]
    return from_edges(10, edges)


@pytest.mark.parametrize("g, expected", [(k4(), 3), (prism(4), 4), (petersen(), 5), (prism(3), 3)])
def test_girth_small(g, expected):
    assert girth(g) == expected == naive_girth(g)


def test_girth_of_three_octagon_fixture():
    g = fixture("T888").graph
    assert girth(g) == 5 == naive_girth(g)


def test_two_edge_cyclic_cut_found():
    g = two_k4_minus_edge()
    ok, cut = cyclic_edge_connectivity_at_least(g, 4)
    assert not ok
    assert sorted(cut) == [(0, 4), (3, 7)]
    side = connected_components(g, cut)[0]
    assert contains_cycle(g, side) and contains_cycle(g, set(range(8)) - side)
    assert sorted(cut_edges(g, side)) == sorted(cut)


def test_prism_cyclic_cuts():
    ok, cut = cyclic_edge_connectivity_at_least(prism(3), 4)
    assert not ok and len(cut) == 3
    # the pentagonal prism has a cyclic 4-cut around a square, but none smaller
    assert cyclic_edge_connectivity_at_least(prism(5), 4) == (True, None)
    ok, cut = cyclic_edge_connectivity_at_least(prism(5), 5)
    assert not ok and len(cut) == 4 == naive_cyclic_cut_size(prism(5), 4)


def test_trivial_three_cuts_are_not_cyclic():
    # every 3-cut of K4 and the Petersen graph isolates a vertex or a forest
    assert cyclic_edge_connectivity_at_least(k4(), 4) == (True, None)
    assert cyclic_edge_connectivity_at_least(petersen(), 4) == (True, None)


def test_cyclic_connectivity_five():
    assert cyclic_edge_connectivity_at_least(petersen(), 5) == (True, None)
    ok, cut = cyclic_edge_connectivity_at_least(blanusa(), 5)
    assert not ok and len(cut) == 4
    assert cyclic_edge_connectivity_at_least(blanusa(), 4) == (True, None)


def test_cyclic_connectivity_rejects_other_k():
    with pytest.raises(ValueError):
        cyclic_edge_connectivity_at_least(petersen(), 3)


def test_disconnected_input_is_not_a_snark():
    g = from_edges(20, list(petersen().edges) + [(a + 10, b + 10) for a, b in petersen().edges])
    c = certify_snark(g)
    assert not c.connected and not c.is_snark
    assert c.cyclic_cut == ()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([6, 8, 10, 12]), st.integers(min_value=0, max_value=10**6))
def test_cyclic_cut_matches_bruteforce_and_networkx(n, seed):
    g = random_connected_cubic(n, seed)
    fast = find_cyclic_cut(g, 3)
    slow = find_cyclic_cut_bruteforce(g, 3)
    ref = naive_cyclic_cut_size(g, 3)
    assert (fast is None) == (slow is None) == (ref is None)
    if fast is not None:
        assert len(fast) == len(slow) == ref
    # monotone in k
    if cyclic_edge_connectivity_at_least(g, 5)[0]:
        assert cyclic_edge_connectivity_at_least(g, 4)[0]


def test_k5_is_stronger_than_k4_on_fixtures():
    for name in ("P10", "B18", "T(5,5)", "X1"):
        g = fixture(name).graph
        if cyclic_edge_connectivity_at_least(g, 5)[0]:
            assert cyclic_edge_connectivity_at_least(g, 4)[0]


def test_coloring_witness_is_proper():
    ok, colors = is_three_edge_colorable(prism(5))
    assert ok and is_proper_edge_coloring(prism(5), colors)
    assert not is_proper_edge_coloring(prism(5), [1] * 15)
    assert not is_proper_edge_coloring(prism(5), [1, 2])


def test_petersen_and_bridge_not_colorable():
    assert is_three_edge_colorable(petersen()) == (False, None)
    assert is_three_edge_colorable(bridged_graph()) == (False, None)
    assert not matching_colorable(bridged_graph())


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([4, 6, 8]), st.integers(min_value=0, max_value=10**6))
def test_coloring_matches_naive_oracle(n, seed):
    g = random_connected_cubic(n, seed)
    ok, colors = is_three_edge_colorable(g)
    assert ok == naive_colorable(g)
    if ok:
        assert is_proper_edge_coloring(g, colors)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([10, 12, 14, 16, 20]), st.integers(min_value=0, max_value=10**6))
def test_frontier_program_agrees_with_backtracking(n, seed):
    g = random_connected_cubic(n, seed)
    a = cert._frontier_coloring(g)
    b = cert._EdgeColorer(g).solve()
    assert (a is None) == (b is None) == (not matching_colorable(g))
    if a is not None:
        assert is_proper_edge_coloring(g, a)


def test_frontier_program_on_snarks():
    for name in ("P10", "B18", "X1", "T888"):
        assert cert._frontier_coloring(fixture(name).graph) is None


def test_zero_budget_forces_frontier_path():
    assert is_three_edge_colorable(petersen(), budget=0) == (False, None)
    ok, colors = is_three_edge_colorable(prism(7), budget=0)
    assert ok and is_proper_edge_coloring(prism(7), colors)


def test_size_cap_and_environment_override(monkeypatch):
    with pytest.raises(SizeCapExceeded):
        certify_snark(petersen(), max_vertices=8)
    monkeypatch.setenv("SNARKLAB_MAX_VERTICES", "9")
    with pytest.raises(SizeCapExceeded):
        is_three_edge_colorable(petersen())
    monkeypatch.setenv("SNARKLAB_MAX_VERTICES", "10")
    assert is_three_edge_colorable(petersen())[0] is False


def test_certificate_fields():
    c = certify_snark(petersen())
    assert c.is_snark and c.girth == 5 and c.cyclically_4_edge_connected
    assert c.coloring is None and c.cyclic_cut is None
    d = c.to_dict()
    assert d["is_snark"] is True and d["checks_run"] == ["connectivity", "girth", "cyclic_connectivity", "coloring"]
    c2 = certify_snark(prism(5))
    assert not c2.is_snark and c2.three_edge_colorable and c2.girth == 4
