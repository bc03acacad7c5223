import dataclasses

import networkx as nx
import pytest

from snarklab import fixtures as fx
from snarklab.certify import certify_snark, cyclic_edge_connectivity_at_least
from snarklab.errors import FixtureCorrupt, UnknownFixture
from snarklab.fixtures import ALL_NAMES, CATALOG, HIST_SNARKS, HistFreeSnark, canonical_name, fixture, hist_snark
from snarklab.hist import check_hist, outer_cycles
from snarklab.named import loupekine

from oracles import naive_girth, to_nx

EXPECTED = {
    "P10": ((6,), 10), "B18": ((10,), 18), "L22": ((12,), 22),
    "T(5,5)": ((5, 5), 18), "T(5,7)": ((5, 7), 22), "T(5,8)": ((5, 8), 24),
    "T(6,7)": ((6, 7), 24), "T(6,8)": ((6, 8), 26), "T(7,7)": ((7, 7), 26),
    "T(8,8)": ((8, 8), 30), "T(13)": ((13,), 24), "T(8,8,8)": ((8, 8, 8), 46),
}


@pytest.mark.parametrize("name", HIST_SNARKS)
def test_hist_snark_fixture(name):
    x = fixture(name)
    prof, n = EXPECTED[name]
    assert x.n == n
    assert x.profile == prof
    hist = check_hist(x.graph, x.hist.tree_edges)
    assert outer_cycles(x.graph, hist)[1] == prof
    assert sum(prof) == n // 2 + 1
    assert naive_girth(x.graph) == 5


@pytest.mark.parametrize("name", ["X1", "X2"])
def test_hist_free_fixture(name):
    x = fixture(name)
    assert isinstance(x, HistFreeSnark)
    assert x.n == 38
    assert certify_snark(x.graph).is_snark


def test_aliases():
    assert canonical_name("T888") == "T(8,8,8)"
    assert canonical_name("t55") == "T(5,5)"
    assert canonical_name("T(5, 8)") == "T(5,8)"
    assert canonical_name("p10") == "P10"
    assert fixture("T888") is fixture("T(8,8,8)")


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture("T(9,9)")
    with pytest.raises(KeyError):
        fixture("nope")


def test_hist_snark_rejects_hist_free():
    with pytest.raises(FixtureCorrupt):
        hist_snark("X1")


def test_blanusa_five_five_hist_is_derived():
    x = fixture("B18", (5, 5))
    assert x.profile == (5, 5)
    assert x.graph == fixture("B18").graph


def test_one_24_vertex_graph_carries_three_profiles():
    a, b, c = fixture("T(5,8)"), fixture("T(6,7)"), fixture("T(13)")
    assert a.graph == b.graph == c.graph
    assert len({a.hist, b.hist, c.hist}) == 3


def test_loupekine_is_a_22_vertex_snark():
    g = loupekine()
    assert certify_snark(g).is_snark
    # both Loupekine snarks on 22 vertices are cyclically 5-edge-connected
    assert cyclic_edge_connectivity_at_least(g, 5) == (True, None)
    assert nx.edge_connectivity(to_nx(g)) == 3


def test_corrupt_entry_is_rejected(monkeypatch):
    entry = CATALOG["T(5,5)"]
    monkeypatch.setitem(CATALOG, "T(5,5)", dataclasses.replace(entry, expected_profile=(4, 6)))
    fx._load.cache_clear()
    try:
        with pytest.raises(FixtureCorrupt):
            fixture("T(5,5)")
        monkeypatch.setitem(CATALOG, "T(5,5)", dataclasses.replace(entry, outer_cycles="[10,15,14,17,16]"))
        fx._load.cache_clear()
        with pytest.raises(FixtureCorrupt):
            fixture("T(5,5)")
        monkeypatch.setitem(CATALOG, "T(5,5)", dataclasses.replace(entry, adjacency="0(1,2,3)1(2)"))
        fx._load.cache_clear()
        with pytest.raises(FixtureCorrupt):
            fixture("T(5,5)")
        monkeypatch.setitem(CATALOG, "T(5,5)", dataclasses.replace(entry, outer_cycles=None))
        fx._load.cache_clear()
        with pytest.raises(FixtureCorrupt, match="Hist exists"):
            fixture("T(5,5)")
    finally:
        fx._load.cache_clear()


def test_every_name_loads():
    assert len(ALL_NAMES) == 14
    for name in ALL_NAMES:
        assert fixture(name).graph.n % 2 == 0
