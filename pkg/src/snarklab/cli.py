"""Command-line front end.

Exit codes:
    0  success (snark confirmed, Hist found, construction done)
    1  negative answer: not a snark, no Hist, no CDC, or an inadmissible multiset
    2  bad input: parse errors, unknown fixtures, invalid anchors, usage errors
    3  a size cap was exceeded
    4  a construction could not be verified
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import constructions as cons
from .certify import ENV_MAX_VERTICES, certify_snark
from .constructions import DotAnchors, HistSnark, TriangleAnchors
from .errors import (
    ConstructionFailed,
    ElementAbsent,
    FormatError,
    GraphError,
    InvalidAnchors,
    NoValidAnchors,
    NotAdmissible,
    SizeCapExceeded,
    SnarkLabError,
    UnknownFixture,
    VerificationFailed,
)
from .fixtures import ALL_NAMES, HistFreeSnark, canonical_name, fixture
from .formats import (
    emit_dot,
    emit_graph6,
    emit_paper_adjacency,
    iter_graph6,
    looks_like_paper_format,
    parse_graph6,
    parse_paper_adjacency,
)
from .graph import CubicGraph, Edge
from .hist import (
    DEFAULT_CDC_CAP,
    DEFAULT_MAX_VERTICES as HIST_MAX_VERTICES,
    Hist,
    cdc_with_outer_cycles,
    enumerate_hists,
    find_hist,
    format_profile,
    outer_cycle_vertices,
    profile,
)
from .realizer import plan, realize, scan_for_hists

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAP, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(SnarkLabError):
    pass


# -- input helpers ------------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii", errors="replace") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _parse_graph(text: str, fmt: str) -> CubicGraph:
    if fmt == "auto":
        fmt = "paper" if looks_like_paper_format(text) else "graph6"
    if fmt == "paper":
        return parse_paper_adjacency(text)
    if fmt == "graph6":
        graphs = parse_graph6(text)
        if len(graphs) != 1:
            raise UsageError(f"expected exactly one graph, found {len(graphs)}")
        return graphs[0]
    raise UsageError(f"cannot read graphs in {fmt!r} format")


def _load_input(args: argparse.Namespace) -> tuple[CubicGraph, Hist | None]:
    """The graph named by ``--fixture`` or read from ``input``; fixtures bring their Hist."""
    if args.fixture:
        x = fixture(args.fixture)
        return x.graph, (None if isinstance(x, HistFreeSnark) else x.hist)
    if not args.input:
        raise UsageError("give an input file (or '-') or --fixture NAME")
    return _parse_graph(_read_text(args.input), args.format), None


def _load_hist_snark(spec: str, hist_cap: int | None) -> HistSnark:
    """A fixture name or a file; files get their first Hist by search."""
    try:
        name = canonical_name(spec)
    except UnknownFixture:
        if not os.path.exists(spec):
            raise
        g = _parse_graph(_read_text(spec), "auto")
        h = find_hist(g, max_vertices=hist_cap)
        if h is None:
            raise UsageError(f"{spec} has no Hist")
        return HistSnark.from_hist(spec, g, h)
    x = fixture(name)
    if isinstance(x, HistFreeSnark):
        raise UsageError(f"{name} has no Hist")
    return x


def _load_graph(spec: str) -> CubicGraph:
    try:
        return fixture(canonical_name(spec)).graph
    except UnknownFixture:
        if not os.path.exists(spec):
            raise
        return _parse_graph(_read_text(spec), "auto")


def _hist_cap(args: argparse.Namespace) -> int:
    if args.max_vertices is not None:
        return args.max_vertices
    env = os.environ.get(ENV_MAX_VERTICES)
    return int(env) if env else HIST_MAX_VERTICES


def _edge_arg(text: str) -> Edge:
    try:
        u, v = (int(x) for x in text.replace("-", ",").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an edge like 3,7; got {text!r}") from None
    return u, v


def _multiset_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace("{", "").replace("}", "").split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers; got {text!r}") from None


# -- output helpers -----------------------------------------------------------------


def _emit(g: CubicGraph, fmt: str, hist: Hist | None = None, name: str = "G") -> str:
    if fmt == "paper":
        return emit_paper_adjacency(g) + "\n"
    if fmt == "dot":
        cycles = None
        if hist is not None:
            cycles = [
                [(c[i], c[(i + 1) % len(c)]) for i in range(len(c))] for c in outer_cycle_vertices(g, hist)
            ]
        return emit_dot(g, hist, cycles, name=name)
    return emit_graph6(g) + "\n"


def _write_graph(args: argparse.Namespace, g: CubicGraph, hist: Hist | None, name: str) -> None:
    text = _emit(g, args.emit, hist, name)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _cycles_text(g: CubicGraph, h: Hist) -> str:
    return "".join("[" + ",".join(map(str, c)) + "]" for c in outer_cycle_vertices(g, h))


# -- commands -------------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    g, _ = _load_input(args)
    cert = certify_snark(g, max_vertices=args.max_vertices)
    print(f"n: {cert.n}")
    print(f"connected: {_bool(cert.connected)}")
    print(f"girth: {cert.girth if cert.girth <= g.n else 'acyclic'}")
    print(f"cyclically_4_edge_connected: {_bool(cert.cyclically_4_edge_connected)}")
    if cert.cyclic_cut:
        print("cyclic_cut: " + " ".join(f"{u}-{v}" for u, v in cert.cyclic_cut))
    print(f"three_edge_colorable: {_bool(cert.three_edge_colorable)}")
    print(f"is_snark: {_bool(cert.is_snark)}")
    return EXIT_OK if cert.is_snark else EXIT_NEGATIVE


def cmd_hist(args: argparse.Namespace) -> int:
    g, _ = _load_input(args)
    cap = _hist_cap(args)
    if args.all:
        hists = enumerate_hists(g, args.limit, max_vertices=cap)
    else:
        h = find_hist(g, max_vertices=cap)
        hists = [h] if h is not None else []
    if not hists:
        print("no Hist (exhaustive)")
        return EXIT_NEGATIVE
    for i, h in enumerate(hists):
        edges = " ".join(f"{u}-{v}" for u, v in h.sorted_edges())
        print(f"hist {i}: profile {format_profile(profile(g, h))}")
        print(f"  tree: {edges}")
    if args.all:
        seen = sorted({profile(g, h) for h in hists})
        print(f"profiles: {' '.join(format_profile(p) for p in seen)}")
        if len(hists) == args.limit:
            print(f"stopped at limit {args.limit}")
    return EXIT_OK


def cmd_oc(args: argparse.Namespace) -> int:
    g, h = _load_input(args)
    if h is None:
        h = find_hist(g, max_vertices=_hist_cap(args))
    if h is None:
        print("no Hist (exhaustive)")
        return EXIT_NEGATIVE
    print(f"profile: {format_profile(profile(g, h))}")
    print(f"outer_cycles: {_cycles_text(g, h)}")
    return EXIT_OK


def cmd_cdc(args: argparse.Namespace) -> int:
    g, h = _load_input(args)
    if h is None:
        h = find_hist(g, max_vertices=_hist_cap(args))
    if h is None:
        print("no Hist (exhaustive)")
        return EXIT_NEGATIVE
    print(f"outer_cycles: {_cycles_text(g, h)}")
    cover = cdc_with_outer_cycles(g, h, cap=args.cdc_cap)
    if cover is None:
        print("no cycle double cover contains the outer cycles")
        return EXIT_NEGATIVE
    print(f"cover: {len(cover)} cycles")
    for c in cover:
        print("  " + " ".join(f"{u}-{v}" for u, v in sorted(c)))
    return EXIT_OK


def _surgery_anchors(args: argparse.Namespace, g: CubicGraph, h: CubicGraph) -> DotAnchors:
    if args.e1 is None or args.e2 is None or args.e3 is None:
        raise UsageError(f"{args.op} needs --e1, --e2 and --e3")
    if args.op == "triangle":
        if args.c is None:
            raise UsageError("triangle needs --c (a neighbor of b1 other than a1)")
        return TriangleAnchors.choose_triangle(g, h, args.e1, args.e2, args.e3, args.c, x1=args.x1)
    return DotAnchors.choose(g, h, args.e1, args.e2, args.e3, x1=args.x1, x2=args.x2)


def cmd_construct(args: argparse.Namespace) -> int:
    op = args.op
    cap = _hist_cap(args)
    if op in ("dot", "bullet1", "bullet2", "bullet3", "triangle"):
        if len(args.inputs) != 2:
            raise UsageError(f"{op} takes two inputs, G and H")
        g, h = (_load_graph(s) for s in args.inputs)
        a = _surgery_anchors(args, g, h)
        if op == "dot":
            out = cons.dot_product(g, h, a)
        elif op == "triangle":
            assert isinstance(a, TriangleAnchors)
            out = cons.triangle(g, h, a)
        else:
            out = cons.bullet(g, h, a, int(op[-1]))
        print(f"# construction: {op}")
        print(f"# anchors: {json.dumps(a.to_dict(), sort_keys=True)}")
        print(f"# n: {out.n}")
        if args.certify:
            print(f"# is_snark: {_bool(certify_snark(out).is_snark)}")
        _write_graph(args, out, None, op)
        return EXIT_OK

    two = op in ("union", "merge")
    if len(args.inputs) != (2 if two else 1):
        raise UsageError(f"{op} takes {'two inputs' if two else 'one input'}")
    xs = [_load_hist_snark(s, cap) for s in args.inputs]
    if op in ("merge", "reduce-i", "reduce-iv") and args.k is None:
        raise UsageError(f"{op} needs --k")
    if op == "merge" and args.l is None:
        raise UsageError("merge needs --l")
    if op == "union":
        res = cons.union_disjoint(xs[0], xs[1], certify=args.certify)
    elif op == "merge":
        res = cons.union_merge(xs[0], args.k, xs[1], args.l, certify=args.certify)
    elif op == "reduce-i":
        res = cons.reduce_i(xs[0], args.k, certify=args.certify)
    elif op == "reduce-ii":
        res = cons.reduce_ii(xs[0], certify=args.certify)
    elif op == "reduce-iii":
        res = cons.reduce_iii(xs[0], certify=args.certify)
    else:
        res = cons.reduce_iv(xs[0], args.k, certify=args.certify)
    _report_hist_snark(res, args.certify)
    _write_graph(args, res.graph, res.hist, op)
    return EXIT_OK


def _report_hist_snark(x: HistSnark, certified: bool) -> None:
    print(f"# n: {x.n}")
    print(f"# profile: {format_profile(x.profile)}")
    print(f"# outer_cycles: {_cycles_text(x.graph, x.hist)}")
    if certified:
        print("# is_snark: true")
    print(f"# provenance: {x.provenance.to_json()}")


def cmd_realize(args: argparse.Namespace) -> int:
    p = plan(args.multiset)
    x = realize(args.multiset, certify=args.certify)
    for line in p.render().splitlines():
        print(f"# plan: {line}")
    _report_hist_snark(x, args.certify)
    _write_graph(args, x.graph, x.hist, "realized")
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    text = _read_text(args.input)
    graphs = list(iter_graph6(text, strict=False))
    report = scan_for_hists(graphs, workers=args.workers, max_vertices=_hist_cap(args))
    if args.jsonl:
        sys.stdout.write(report.jsonl())
    sys.stdout.write(report.table())
    return EXIT_NEGATIVE if report.summary["snarks_without_hist"] else EXIT_OK


def cmd_fixtures(args: argparse.Namespace) -> int:
    if args.action == "list":
        for name in ALL_NAMES:
            x = fixture(name)
            prof = "none" if isinstance(x, HistFreeSnark) else format_profile(x.profile)
            print(f"{name:<10} n={x.graph.n:<3} hist={prof}")
        return EXIT_OK
    if not args.name:
        raise UsageError("fixtures emit needs a fixture name")
    x = fixture(args.name)
    hist = None if isinstance(x, HistFreeSnark) else x.hist
    fmt = "graph6" if args.format == "auto" else args.format
    sys.stdout.write(_emit(x.graph, fmt, hist, canonical_name(args.name)))
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph file ('-' for stdin)")
    p.add_argument("--fixture", help="use a catalog entry instead of a file")
    p.add_argument("--format", choices=("auto", "graph6", "paper"), default="auto")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--emit", choices=("graph6", "paper", "dot"), default="graph6",
                   help="format of the emitted graph")
    p.add_argument("-o", "--output", help="write the graph here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="snarklab", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--max-vertices", type=int, default=None,
                        help=f"size cap (default: ${ENV_MAX_VERTICES} or the module default)")
    parser.add_argument("--hist-limit", dest="limit", type=int, default=1000,
                        help="maximum number of Hists listed by 'hist --all'")
    parser.add_argument("--cdc-cap", type=int, default=DEFAULT_CDC_CAP)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="certify a graph as a snark")
    _add_input(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hist", help="search for Hists")
    _add_input(p)
    p.add_argument("--all", action="store_true", help="enumerate Hists up to --limit")
    p.add_argument("--limit", type=int, default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_hist)

    p = sub.add_parser("oc", help="outer cycles and profile of a Hist")
    _add_input(p)
    p.set_defaults(func=cmd_oc)

    p = sub.add_parser("cdc", help="look for a cycle double cover containing the outer cycles")
    _add_input(p)
    p.set_defaults(func=cmd_cdc)

    p = sub.add_parser("construct", help="apply a surgery or a Hist-carrying construction")
    p.add_argument("op", choices=("dot", "bullet1", "bullet2", "bullet3", "triangle", "union", "merge",
                                  "reduce-i", "reduce-ii", "reduce-iii", "reduce-iv"))
    p.add_argument("inputs", nargs="+", help="fixture names or graph files")
    p.add_argument("--e1", type=_edge_arg)
    p.add_argument("--e2", type=_edge_arg)
    p.add_argument("--e3", type=_edge_arg)
    p.add_argument("--x1", type=int)
    p.add_argument("--x2", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--certify", action="store_true")
    _add_output(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("realize", help="build a Hist-snark with the given outer-cycle lengths")
    p.add_argument("multiset", type=_multiset_arg, help="e.g. 5,6,7")
    p.add_argument("--certify", action="store_true")
    _add_output(p)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("scan", help="certify and Hist-search every graph in a graph6 stream")
    p.add_argument("input", help="graph6 file ('-' for stdin)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--jsonl", action="store_true", help="also print one JSON record per graph")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("fixtures", help="list or emit catalog entries")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    p.add_argument("--format", choices=("auto", "graph6", "paper", "dot"), default="auto")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except NotAdmissible as exc:
        print(f"not admissible: {exc.reason}", file=sys.stderr)
        return EXIT_NEGATIVE
    except SizeCapExceeded as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (VerificationFailed, ConstructionFailed, NoValidAnchors) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (FormatError, GraphError, InvalidAnchors, UnknownFixture, UsageError, ElementAbsent) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
