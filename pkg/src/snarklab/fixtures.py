"""Catalog of named Hist-snarks and Hist-free snarks.

Every entry is validated when first loaded; a failed check raises
FixtureCorrupt instead of being repaired.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache

from . import named
from .certify import certify_snark
from .constructions import HistSnark, Provenance
from .errors import FixtureCorrupt, FormatError, GraphError, NotAHist, UnknownFixture
from .formats import parse_outer_cycle_declaration, parse_paper_adjacency
from .graph import CubicGraph
from .hist import Hist, Profile, check_hist, find_hist, iter_hists, profile_of

# One 24-vertex list carries three different Hists.
_T24 = (
    "0(12,14,16)1(6,20,22)2(4,19,23)3(7,15,16)4(5,10)5(17,20)6(7,8)7(19)"
    "8(9,12)9(11,23)10(14,21)11(18,21)12(13)13(15,17)14(15)16(17)18(19,22)20(21)22(23)"
)


@dataclass(frozen=True)
class FixtureEntry:
    name: str
    adjacency: str
    outer_cycles: str | None
    expected_profile: Profile | None
    expected_n: int


CATALOG: dict[str, FixtureEntry] = {
    e.name: e
    for e in (
        FixtureEntry(
            "T(5,5)",
            "0(4,8,12)1(5,6,14)2(4,7,9)3(5,7,8)4(5)6(7,16)8(9)9(11)10(11,15,16)11(13)"
            "12(13,15)13(17)14(15,17)16(17)",
            "[10,15,14,17,16][2,7,3,8,9]",
            (5, 5),
            18,
        ),
        FixtureEntry(
            "T(5,7)",
            "0(12,14,16)1(5,6,20)2(4,19,21)3(7,15,16)4(5,10)5(17)6(7,8)7(19)8(9,12)"
            "9(11,21)10(11,14)11(18)12(13)13(15,17)14(15)16(17)18(19,20)20(21)",
            "[3,15,13,17,16][10,4,2,21,20,18,11]",
            (5, 7),
            22,
        ),
        FixtureEntry("T(5,8)", _T24, "[3,15,13,17,16][10,4,2,23,22,18,11,21]", (5, 8), 24),
        FixtureEntry("T(6,7)", _T24, "[1,6,7,19,18,22][4,5,17,13,15,14,10]", (6, 7), 24),
        FixtureEntry(
            "T(6,8)",
            "0(3,10,22)1(5,13,16)2(4,7,9)3(5,7)4(5,10)6(7,8,24)8(9,12)9(15)10(11)"
            "11(13,20)12(17,25)13(25)14(19,21,22)15(18,21)16(17,24)17(19)18(19,23)"
            "20(21,23)22(23)24(25)",
            "[18,19,14,21,20,23][1,5,4,2,7,6,24,16]",
            (6, 8),
            26,
        ),
        FixtureEntry(
            "T(7,7)",
            "0(12,14,16)1(6,20,22)2(4,19,23)3(7,15,16)4(5,10)5(20,24)6(7,8)7(19)"
            "8(9,12)9(11,23)10(14,25)11(18,21)12(13)13(15,17)14(15)16(17)17(24)"
            "18(19,22)20(21)21(25)22(23)24(25)",
            "[17,13,15,14,10,25,24][1,6,7,19,2,23,22]",
            (7, 7),
            26,
        ),
        FixtureEntry(
            "T(8,8)",
            "0(8,10,14)1(5,9,11)2(7,16,18)3(13,19,22)4(5,7,28)5(13)6(7,11,29)8(9,29)"
            "9(12)10(11,28)12(13,17)14(15,23)15(17,18)16(17,20)18(21)19(23,26)"
            "20(21,27)21(24)22(25,27)23(25)24(25,26)26(27)28(29)",
            "[12,9,8,29,28,4,5,13][14,15,18,21,24,26,19,23]",
            (8, 8),
            30,
        ),
        FixtureEntry("T(13)", _T24, "[2,19,7,3,15,13,17,5,20,21,11,9,23]", (13,), 24),
        FixtureEntry(
            "T(8,8,8)",
            "0(3,21,24)1(2,6,24)2(15,25)3(4,25)4(7,26)5(6,8,26)6(27)7(18,27)8(11,28)"
            "9(10,14,28)10(23,29)11(12,29)12(15,30)13(14,16,30)14(31)15(31)16(19,32)"
            "17(18,22,32)18(33)19(20,33)20(23,34)21(22,34)22(35)23(35)24(36)25(36)"
            "26(37)27(37)28(38)29(38)30(39)31(39)32(40)33(40)34(41)35(41)36(42)37(42)"
            "38(43)39(43)40(44)41(44)42(45)43(45)44(45)",
            "[0,3,4,7,18,17,22,21][1,2,15,12,11,8,5,6][9,10,23,20,19,16,13,14]",
            (8, 8, 8),
            46,
        ),
        FixtureEntry(
            "X1",
            "0(8,12,18)1(5,9,13)2(4,14,20)3(5,7,8)4(5,12)6(7,10,13)7(14)8(15)9(19,22)"
            "10(18,24)11(26,34,36)12(16)13(16)14(17)15(17,19)16(17)18(21)19(21)"
            "20(25,36)21(27)22(30,34)23(25,28,31)24(26,37)25(35)26(32)27(29,31)"
            "28(29,30)29(32)30(33)31(33)32(33)34(35)35(37)36(37)",
            None,
            None,
            38,
        ),
        FixtureEntry(
            "X2",
            "0(8,12,18)1(5,9,13)2(4,14,20)3(5,7,8)4(5,12)6(7,10,13)7(14)8(15)9(19,22)"
            "10(18,24)11(26,34,36)12(16)13(16)14(17)15(17,19)16(17)18(21)19(21)"
            "20(28,34)21(27)22(26,37)23(27,30,32)24(25,36)25(30,35)26(33)27(29)"
            "28(31,32)29(31,33)30(31)32(33)34(35)35(37)36(37)",
            None,
            None,
            38,
        ),
    )
}

# Entries without a printed Hist: graph from the named module, Hist by search.
DERIVED = {"P10": (6,), "B18": (10,), "L22": (12,)}

HIST_SNARKS = ("P10", "B18", "L22", "T(5,5)", "T(5,7)", "T(5,8)", "T(6,7)", "T(6,8)",
               "T(7,7)", "T(8,8)", "T(13)", "T(8,8,8)")
HIST_FREE = ("X1", "X2")
ALL_NAMES = HIST_SNARKS + HIST_FREE


@dataclass(frozen=True)
class HistFreeSnark:
    name: str
    graph: CubicGraph

    @property
    def n(self) -> int:
        return self.graph.n


def _key(name: str) -> str:
    return re.sub(r"[\s(),\[\]]", "", name).upper()


_ALIASES = {_key(n): n for n in ALL_NAMES}


def canonical_name(name: str) -> str:
    try:
        return _ALIASES[_key(name)]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(ALL_NAMES)}") from None


def _derived_graph(name: str) -> CubicGraph:
    return {"P10": named.petersen, "B18": named.blanusa, "L22": named.loupekine}[name]()


def _hist_with_profile(g: CubicGraph, want: Profile) -> Hist | None:
    for h in iter_hists(g):
        if HistSnark.from_hist("", g, h).profile == want:
            return h
    return None


@cache
def _load(name: str, want: Profile | None) -> HistSnark | HistFreeSnark:
    if name in DERIVED:
        g = _derived_graph(name)
        target = want or DERIVED[name]
        if name != "P10" and not certify_snark(g).is_snark:
            raise FixtureCorrupt(f"{name}: embedded graph is not a snark")
        hist = _hist_with_profile(g, target)
        if hist is None:
            raise FixtureCorrupt(f"{name}: no Hist with profile {target}")
        x = HistSnark.from_hist(name, g, hist)
        return HistSnark(x.graph, x.hist, x.profile, Provenance(f"fixture:{name}", g.digest()))

    entry = CATALOG[name]
    try:
        g = parse_paper_adjacency(entry.adjacency)
    except (FormatError, GraphError) as exc:
        raise FixtureCorrupt(f"{name}: adjacency list does not parse: {exc}") from exc
    if g.n != entry.expected_n:
        raise FixtureCorrupt(f"{name}: expected {entry.expected_n} vertices, parsed {g.n}")
    if entry.outer_cycles is None:
        if find_hist(g) is not None:
            raise FixtureCorrupt(f"{name}: declared Hist-free but a Hist exists")
        return HistFreeSnark(name, g)
    if want is not None and want != entry.expected_profile:
        hist = _hist_with_profile(g, want)
        if hist is None:
            raise FixtureCorrupt(f"{name}: no Hist with profile {want}")
    else:
        try:
            cycles = parse_outer_cycle_declaration(entry.outer_cycles, g)
            hist = check_hist(g, set(g.edges) - set().union(*cycles))
        except (FormatError, NotAHist) as exc:
            raise FixtureCorrupt(f"{name}: declared outer cycles are invalid: {exc}") from exc
    x = HistSnark.from_hist(name, g, hist)
    if want is None and x.profile != entry.expected_profile:
        raise FixtureCorrupt(f"{name}: profile {x.profile} != declared {entry.expected_profile}")
    return HistSnark(x.graph, x.hist, x.profile, Provenance(f"fixture:{name}", g.digest()))


def fixture(name: str, profile: tuple[int, ...] | None = None) -> HistSnark | HistFreeSnark:
    """Load a catalog entry by name (``T(5,5)``, ``T55``, ``T888``, ``P10``, ``X1``...).

    ``profile`` selects a different Hist of the same graph, e.g.
    ``fixture("B18", (5, 5))``.
    """
    return _load(canonical_name(name), profile_of(profile) if profile else None)


def hist_snark(name: str, profile: tuple[int, ...] | None = None) -> HistSnark:
    x = fixture(name, profile)
    if not isinstance(x, HistSnark):
        raise FixtureCorrupt(f"{name} has no Hist")
    return x
