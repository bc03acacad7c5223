import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from snarklab.errors import (
    DuplicateEdge,
    MalformedGraph6,
    NonAdjacentPair,
    NotCubic,
    OverlappingCycles,
    PaperSyntaxError,
)
from snarklab.fixtures import fixture
from snarklab.formats import (
    decode_graph6,
    emit_dot,
    emit_graph6,
    emit_paper_adjacency,
    encode_graph6,
    looks_like_paper_format,
    parse_graph6,
    parse_outer_cycle_declaration,
    parse_paper_adjacency,
    parse_paper_edges,
)
from snarklab.graph import from_edges
from snarklab.hist import outer_cycles
from snarklab.named import petersen

from oracles import k4, random_connected_cubic, to_nx


def _nx_graph6(g) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_k4_graph6_is_the_textbook_string():
    assert emit_graph6(k4()) == "C~"
    assert parse_graph6("C~") == [k4()]


def test_petersen_graph6_matches_networkx_writer():
    assert emit_graph6(petersen()) == _nx_graph6(petersen())


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2, max_value=40), st.integers(min_value=0, max_value=10**6))
def test_graph6_round_trip_against_networkx(half, seed):
    g = random_connected_cubic(2 * half, seed)
    text = emit_graph6(g)
    assert text == _nx_graph6(g)
    assert parse_graph6(text) == [g]
    back = nx.from_graph6_bytes(text.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges()) == list(g.edges)


def test_graph6_long_size_field():
    # 64 vertices need the four-byte size prefix
    g = random_connected_cubic(64, 7)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert text == _nx_graph6(g)
    assert parse_graph6(text)[0] == g


def test_graph6_header_and_blank_lines():
    data = ">>graph6<<C~\n\n" + emit_graph6(petersen()) + "\n"
    assert parse_graph6(data) == [k4(), petersen()]


def test_graph6_rejects_garbage():
    with pytest.raises(MalformedGraph6):
        parse_graph6("C~~")
    with pytest.raises(MalformedGraph6):
        decode_graph6("C\x01")
    with pytest.raises(MalformedGraph6):
        decode_graph6("")


def test_graph6_non_cubic_strict_and_lenient():
    path = encode_graph6(3, [(0, 1), (1, 2)])
    with pytest.raises(NotCubic):
        parse_graph6(path)
    assert parse_graph6(path + "\nC~\n", strict=False) == [k4()]


def test_paper_adjacency_round_trip():
    g = petersen()
    text = emit_paper_adjacency(g)
    assert parse_paper_adjacency(text) == g
    assert text.startswith("0(1,4,5)")


def test_paper_adjacency_tolerates_latex_breaks():
    text = "0(1,2,3)\\\\ 1(2,3)\n2(3)"
    assert parse_paper_adjacency(text) == k4()


def test_paper_adjacency_duplicate_edge():
    with pytest.raises(DuplicateEdge):
        parse_paper_edges("0(1,2,3)1(0,2,3)2(3)")


def test_paper_adjacency_syntax_error():
    with pytest.raises(PaperSyntaxError):
        parse_paper_adjacency("0(1,2,3)1(2,3")
    with pytest.raises(PaperSyntaxError):
        parse_paper_adjacency("hello")


def test_paper_adjacency_non_cubic():
    with pytest.raises(NotCubic):
        parse_paper_adjacency("0(1,2)1(2)")


def test_outer_cycle_declaration_checks():
    g = petersen()
    cycles = parse_outer_cycle_declaration("[5,7,9,6,8]", g)
    assert len(cycles) == 1 and len(cycles[0]) == 5
    with pytest.raises(NonAdjacentPair):
        parse_outer_cycle_declaration("[0,1,2,3,5]", g)
    with pytest.raises(OverlappingCycles):
        parse_outer_cycle_declaration("[0,1,2,3,4][0,5,7,2,1]", g)
    with pytest.raises(PaperSyntaxError):
        parse_outer_cycle_declaration("0,1,2", g)


def test_format_sniffing():
    assert looks_like_paper_format("0(1,2,3)1(2,3)2(3)")
    assert looks_like_paper_format("[0,1,2]")
    assert not looks_like_paper_format("C~")
    assert not looks_like_paper_format(emit_graph6(petersen()))


def test_dot_dashes_outer_cycles():
    x = fixture("P10")
    cycles, _ = outer_cycles(x.graph, x.hist)
    dot = emit_dot(x.graph, x.hist, cycles)
    assert dot.count("style=dashed") == 6
    assert dot.count("style=bold") == 9
    assert dot.count(" -- ") == 15


def test_dot_for_three_outer_octagons():
    x = fixture("T888")
    cycles, prof = outer_cycles(x.graph, x.hist)
    assert prof == (8, 8, 8)
    assert emit_dot(x.graph, x.hist, cycles).count("style=dashed") == 24


def test_dot_plain_graph_has_no_styles():
    dot = emit_dot(k4(), name="K 4")
    assert dot.startswith("graph K_4 {")
    assert "style" not in dot
