"""Command-line front door: one verb per library operation.

Graphs come in as ``--g6 <string>`` (repeatable), ``--file <path>`` with one
graph6 string per line, or ``--json <graph-json>``; results that encode a
graph are printed as graph6.  ``--format json`` switches every subcommand to
machine output.  Exit codes: 0 success (including "no coloring exists" --
that is a result, not an error), 1 domain errors, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

import numpy as np

from .census import census
from .doubling import extract_base, rainbow_double
from .graphs import (
    Coloring,
    Graph,
    find_isomorphism,
    canonical_form,
    graph6_decode,
    graph6_encode,
    seidel_of_graph,
)
from .puzzle import serve
from .rainbow import find_rainbow_coloring, is_rainbow_coloring, monochromatic_matching
from .signedperm import SignedMatrix, fold_permutation, integrate, switching_witness
from .switching import (
    are_switching_equivalent,
    switch_subset,
    switching_canonical_form,
)

__all__ = ["main", "run"]


def _add_graph_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", action="append", default=[], metavar="G6",
                   help="graph as a graph6 string (repeatable)")
    p.add_argument("--file", action="append", default=[], metavar="PATH",
                   help="file with one graph6 string per line (repeatable)")
    p.add_argument("--json", dest="graph_json", action="append", default=[],
                   metavar="JSON", help='graph as {"n": ..., "edges": [[u, v], ...]}')


def _gather_graphs(args) -> list[Graph]:
    graphs = [graph6_decode(s) for s in args.g6]
    for path in args.file:
        with open(path) as handle:
            for line in handle:
                line = line.strip()
                if line:
                    graphs.append(graph6_decode(line))
    for blob in args.graph_json:
        graphs.append(Graph.from_json(json.loads(blob)))
    if not graphs:
        raise ValueError("no input graphs (use --g6, --file or --json)")
    return graphs


def _parse_ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowlab",
        description="rainbow colorings, switching classes, and their bijection",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text",
                        help="output format (default: text)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name: str, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("psi", help="double a graph into its rainbow form")
    _add_graph_inputs(p)

    p = add_parser("extract", help="invert the doubling on a rainbow witness")
    p.add_argument("--json", dest="witness_json", required=True, metavar="JSON",
                   help='{"graph": ..., "coloring": ...}')
    p.add_argument("--transversal", metavar="V,V,...",
                   help="one vertex per color (default: lower vertex of each class)")

    p = add_parser("switch", help="switch a subset of vertices")
    _add_graph_inputs(p)
    p.add_argument("--vertices", required=True, metavar="V,V,...")

    p = add_parser("switch-equiv", help="are two graphs switching equivalent?")
    _add_graph_inputs(p)

    p = add_parser("switch-canon", help="canonical switching-class representative")
    _add_graph_inputs(p)

    p = add_parser("canon", help="canonical form under relabeling")
    _add_graph_inputs(p)

    p = add_parser("rainbow-color", help="search for a rainbow coloring")
    _add_graph_inputs(p)
    p.add_argument("--k", type=int, required=True, help="number of colors")

    p = add_parser("rainbow-check", help="verify a rainbow coloring")
    _add_graph_inputs(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--colors", required=True, metavar="C,C,...")

    p = add_parser("matching", help="monochromatic perfect matching of a rainbow coloring")
    _add_graph_inputs(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--colors", required=True, metavar="C,C,...")

    p = add_parser("integrate", help="integrate a signed half-permutation")
    p.add_argument("--json", dest="matrix_json", required=True, metavar="JSON",
                   help='{"m": ..., "doubled_entries": [[...], ...]}')

    p = add_parser("z-matrix", help="fold a permutation of a doubled graph")
    p.add_argument("--perm", metavar="P,P,...",
                   help="images of 0..2n-1 (row i has its 1 in column p[i])")
    p.add_argument("--json", dest="perm_json", metavar="JSON",
                   help="permutation matrix as a JSON array")

    p = add_parser("witness", help="signed permutation conjugating one graph's "
                                       "edge-sign matrix onto the other's")
    _add_graph_inputs(p)
    p.add_argument("--trials", type=int, metavar="N",
                   help="instead: run N random self-check trials")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=6)

    p = add_parser("census", help="switching / even / rainbow class counts")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--no-rainbow", action="store_true",
                   help="skip the rainbow column (allows n up to 7)")
    p.add_argument("--cache-dir", metavar="DIR")

    p = add_parser("puzzle-serve", help="serve the pebble puzzle API")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--host", default="127.0.0.1")

    return parser


def _cmd_psi(args) -> int:
    for g in _gather_graphs(args):
        witness = rainbow_double(g)
        canon = canonical_form(witness.graph)
        payload = {
            "graph6": graph6_encode(witness.graph),
            "canonical_graph6": graph6_encode(canon),
            "coloring": witness.coloring.to_json(),
        }
        _emit(args, payload,
              f"{payload['graph6']} (canonical {payload['canonical_graph6']}) "
              f"coloring {json.dumps(payload['coloring'])}")
    return 0


def _cmd_extract(args) -> int:
    obj = json.loads(args.witness_json)
    graph = Graph.from_json(obj["graph"])
    coloring = Coloring.from_json(obj["coloring"])
    transversal = _parse_ints(args.transversal) if args.transversal else None
    base = extract_base(graph, coloring, transversal=transversal)
    _emit(args, {"graph6": graph6_encode(base), "graph": base.to_json()},
          graph6_encode(base))
    return 0


def _cmd_switch(args) -> int:
    subset = _parse_ints(args.vertices)
    for g in _gather_graphs(args):
        out = switch_subset(g, subset)
        _emit(args, {"graph6": graph6_encode(out)}, graph6_encode(out))
    return 0


def _cmd_switch_equiv(args) -> int:
    graphs = _gather_graphs(args)
    if len(graphs) != 2:
        raise ValueError(f"switch-equiv needs exactly two graphs, got {len(graphs)}")
    verdict = are_switching_equivalent(graphs[0], graphs[1])
    _emit(args, {"equivalent": verdict}, "true" if verdict else "false")
    return 0


def _cmd_switch_canon(args) -> int:
    for g in _gather_graphs(args):
        out = switching_canonical_form(g)
        _emit(args, {"graph6": graph6_encode(out)}, graph6_encode(out))
    return 0


def _cmd_canon(args) -> int:
    for g in _gather_graphs(args):
        out = canonical_form(g)
        _emit(args, {"graph6": graph6_encode(out)}, graph6_encode(out))
    return 0


def _cmd_rainbow_color(args) -> int:
    for g in _gather_graphs(args):
        coloring = find_rainbow_coloring(g, args.k)
        if coloring is None:
            _emit(args, {"coloring": None}, "none")
        else:
            assert is_rainbow_coloring(g, coloring)
            _emit(args, {"coloring": coloring.to_json()},
                  json.dumps(coloring.to_json()))
    return 0


def _coloring_from_args(args) -> Coloring:
    return Coloring(args.k, tuple(_parse_ints(args.colors)))


def _cmd_rainbow_check(args) -> int:
    coloring = _coloring_from_args(args)
    for g in _gather_graphs(args):
        verdict = is_rainbow_coloring(g, coloring)
        _emit(args, {"rainbow": verdict}, "true" if verdict else "false")
    return 0


def _cmd_matching(args) -> int:
    coloring = _coloring_from_args(args)
    for g in _gather_graphs(args):
        edges = monochromatic_matching(g, coloring)
        _emit(args, {"matching": [list(e) for e in edges]},
              " ".join(f"{u}-{v}" for u, v in edges))
    return 0


def _cmd_integrate(args) -> int:
    matrix = SignedMatrix.from_json(json.loads(args.matrix_json))
    out = integrate(matrix)
    _emit(args, out.to_json(), repr(out))
    return 0


def _cmd_z_matrix(args) -> int:
    if (args.perm is None) == (args.perm_json is None):
        raise ValueError("pass exactly one of --perm and --json")
    if args.perm is not None:
        images = _parse_ints(args.perm)
        m = len(images)
        if sorted(images) != list(range(m)):
            raise ValueError("--perm must list each of 0..2n-1 once")
        p = np.zeros((m, m), dtype=np.int64)
        for i, j in enumerate(images):
            p[i, j] = 1
    else:
        p = np.array(json.loads(args.perm_json), dtype=np.int64)
    out = fold_permutation(p)
    _emit(args, out.to_json(), repr(out))
    return 0


def _cmd_witness(args) -> int:
    if args.trials is not None:
        return _witness_trials(args)
    graphs = _gather_graphs(args)
    if len(graphs) != 2:
        raise ValueError(f"witness needs exactly two graphs, got {len(graphs)}")
    g, h = graphs
    doubled_g, doubled_h = rainbow_double(g).graph, rainbow_double(h).graph
    iso = find_isomorphism(doubled_h, doubled_g)
    if iso is None:
        raise ValueError("the doubled graphs are not isomorphic; "
                         "the inputs are not switching equivalent")
    p = np.zeros((2 * g.n, 2 * g.n), dtype=np.int64)
    for i, j in enumerate(iso):
        p[j, i] = 1
    a, b = seidel_of_graph(g), seidel_of_graph(h)
    q = switching_witness(a, b, p)
    # re-verify before printing anything
    if not np.array_equal(q.doubled @ b.entries @ q.doubled.T, 4 * a.entries):
        raise AssertionError("witness verification failed")
    _emit(args, {"q": q.to_json(), "verified": True}, repr(q))
    return 0


def _witness_trials(args) -> int:
    rng = random.Random(args.seed)
    for trial in range(args.trials):
        n = rng.randint(1, max(1, args.max_n))
        g = _random_graph(rng, n)
        subset = [v for v in range(n) if rng.random() < 0.5]
        relabel = list(range(n))
        rng.shuffle(relabel)
        h = switch_subset(g, subset).relabel(relabel)
        iso = find_isomorphism(rainbow_double(h).graph, rainbow_double(g).graph)
        assert iso is not None
        p = np.zeros((2 * n, 2 * n), dtype=np.int64)
        for i, j in enumerate(iso):
            p[j, i] = 1
        a, b = seidel_of_graph(g), seidel_of_graph(h)
        q = switching_witness(a, b, p)
        if not np.array_equal(q.doubled @ b.entries @ q.doubled.T, 4 * a.entries):
            raise AssertionError(f"trial {trial} failed")
    _emit(args, {"trials": args.trials, "failures": 0},
          f"{args.trials} trials, 0 failures")
    return 0


def _random_graph(rng: random.Random, n: int) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _cmd_census(args) -> int:
    rows = census(args.max_n, with_rainbow=not args.no_rainbow,
                  cache_dir=args.cache_dir)
    if args.format == "json":
        print(json.dumps([row.to_json() for row in rows]))
        return 0
    header = f"{'n':>2} {'graphs':>7} {'switching':>9} {'even':>5} {'rainbow':>8}"
    print(header)
    for row in rows:
        rainbow = "-" if row.rainbow_classes is None else str(row.rainbow_classes)
        print(f"{row.n:>2} {row.graph_classes:>7} {row.switching_classes:>9} "
              f"{row.even_classes:>5} {rainbow:>8}")
    return 0


def _cmd_puzzle_serve(args) -> int:
    print(f"serving pebble puzzle API on http://{args.host}:{args.port}", flush=True)
    serve(args.port, args.host)
    return 0


_COMMANDS = {
    "psi": _cmd_psi,
    "extract": _cmd_extract,
    "switch": _cmd_switch,
    "switch-equiv": _cmd_switch_equiv,
    "switch-canon": _cmd_switch_canon,
    "canon": _cmd_canon,
    "rainbow-color": _cmd_rainbow_color,
    "rainbow-check": _cmd_rainbow_check,
    "matching": _cmd_matching,
    "integrate": _cmd_integrate,
    "z-matrix": _cmd_z_matrix,
    "witness": _cmd_witness,
    "census": _cmd_census,
    "puzzle-serve": _cmd_puzzle_serve,
}


def run(argv: list[str]) -> int:
    """Parse and dispatch; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
