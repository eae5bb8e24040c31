"""Command-line interface.

Exit status: 0 success, 1 usage error, 2 parse error, 3 internal invariant
violation, 4 oracle mismatch.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .bench import BenchConfig, bench_csv, bench_rows, write_csv
from .blocks import ALGORITHMS, block_forest, oracle_two_twinless_blocks, two_twinless_blocks
from .connectivity import BlockFamily
from .errors import InvariantError, OracleBudgetError, ParseError
from .graph import (
    Digraph,
    fig1_fixture,
    parse_edge_list,
    random_digraph,
    random_tsc_digraph,
    remove_vertex,
    to_edge_list,
)
from .strong import oracle_two_strong_blocks, strong_articulation_points, two_strong_blocks
from .twinless import (
    is_two_vertex_twinless_connected,
    oracle_twinless_sccs,
    twinless_articulation_points,
    twinless_sccs,
)

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INVARIANT, EXIT_MISMATCH = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _natural(label: str):
    return (0, int(label), "") if re.fullmatch(r"-?\d+", label) else (1, 0, label)


def _names(G: Digraph, vertices) -> list[str]:
    return sorted((G.labels[v] for v in vertices), key=_natural)


def _sets(G: Digraph, sets) -> list[list[str]]:
    named = [_names(G, s) for s in sets]
    return sorted(named, key=lambda s: [_natural(x) for x in s])


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _lines(sets) -> str:
    return "".join(" ".join(s) + "\n" for s in sets)


def _blocks_out(G: Digraph, fam: BlockFamily, algorithm: str, fmt: str) -> str:
    blocks = _sets(G, fam)
    if fmt == "json":
        return _dump({"n": G.n, "m": G.m, "algorithm": algorithm, "blocks": blocks})
    return _lines(blocks)


def forest_dot(G: Digraph, fam: BlockFamily) -> str:
    forest = block_forest(fam)
    out = ["graph block_forest {"]
    for i, b in enumerate(forest.blocks):
        label = "{" + ",".join(_names(G, b)) + "}"
        out.append(f'  b{i} [label="{label}", shape=box, style=filled, fillcolor=lightblue];')
    for v in forest.cut_vertices:
        out.append(f'  v{v} [label="{G.labels[v]}", shape=circle, style=filled, fillcolor=lightyellow];')
    for i, v in forest.edges:
        out.append(f"  b{i} -- v{v};")
    out.append("}")
    return "\n".join(out) + "\n"


def _read_graph(args) -> Digraph:
    if args.input is None:
        raise UsageError("--input is required")
    path = Path(args.input)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


def _fig1_report(fmt: str) -> str:
    G = fig1_fixture()
    strong = _sets(G, two_strong_blocks(G))
    twinless = {algo: _sets(G, two_twinless_blocks(G, algo)) for algo in ALGORITHMS}
    H = remove_vertex(G, G.vertex(13))
    P = twinless_sccs(H).relabel(H.origin)
    separated = not P.same_class(G.vertex(12), G.vertex(17))
    if fmt == "json":
        return _dump({
            "n": G.n,
            "m": G.m,
            "two_strong_blocks": strong,
            "two_twinless_blocks": twinless,
            "tsccs": _sets(G, twinless_sccs(G)),
            "separated_12_17_without_13": separated,
        })
    lines = [f"n={G.n} m={G.m}", f"twinless components: {_sets(G, twinless_sccs(G))}", f"2-strong blocks: {strong}"]
    lines += [f"2-twinless blocks ({algo}): {b}" for algo, b in twinless.items()]
    lines.append(f"12 and 17 separated in G - 13: {separated}")
    return "\n".join(lines) + "\n"


def _oracle_checks(G: Digraph) -> dict:
    checks = {
        "tsccs": twinless_sccs(G) == oracle_twinless_sccs(G),
        "blocks2s": two_strong_blocks(G) == oracle_two_strong_blocks(G),
    }
    expected = oracle_two_twinless_blocks(G)
    for algo in ALGORITHMS:
        checks[f"blocks2t[{algo}]"] = two_twinless_blocks(G, algo) == expected
    return checks


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", help="edge-list file")
    common.add_argument("--format", choices=("json", "text", "dot"), default="json")
    common.add_argument("--algo", choices=ALGORITHMS, default="basic")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget-ms", type=float, default=None)

    parser = _Parser(prog="twinblocks", description="2-twinless blocks and related connectivity of digraphs")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name, help_ in [
        ("tsccs", "twinless strongly connected components"),
        ("taps", "twinless articulation points"),
        ("saps", "strong articulation points"),
        ("blocks2s", "2-strong blocks"),
        ("blocks2t", "2-twinless blocks"),
        ("forest", "2-twinless block forest"),
        ("check2vtc", "test 2-vertex-twinless connectivity"),
        ("oracle", "compare fast paths with brute-force oracles"),
    ]:
        sub.add_parser(name, parents=[common], help=help_)
    gen = sub.add_parser("gen", parents=[common], help="emit a random edge list")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int, required=True)
    gen.add_argument("--tsc", action="store_true", help="Hamiltonian cycle plus m - n random arcs")
    fig = sub.add_parser("fig1", parents=[common], help="reproduce the 20-vertex example")
    fig.add_argument("--edges", action="store_true", help="print the example's edge list instead")
    bench = sub.add_parser("bench", parents=[common], help="benchmark the algorithms, CSV output")
    bench.add_argument("--sizes", default="50,100,200,300")
    bench.add_argument("--seeds", type=int, default=1, help="graphs per size")
    bench.add_argument("--algos", default=",".join(ALGORITHMS))
    bench.add_argument("--output", help="write CSV here instead of stdout")
    return parser


def _dispatch(args) -> tuple[int, str]:
    cmd, fmt = args.command, args.format
    if cmd == "gen":
        try:
            if args.tsc:
                G = random_tsc_digraph(args.n, max(0, args.m - args.n), args.seed)
            else:
                G = random_digraph(args.n, args.m, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return EXIT_OK, to_edge_list(G)
    if cmd == "fig1":
        return EXIT_OK, to_edge_list(fig1_fixture()) if args.edges else _fig1_report(fmt)
    if cmd == "bench":
        try:
            sizes = tuple(int(s) for s in args.sizes.split(","))
        except ValueError:
            raise UsageError(f"bad --sizes {args.sizes!r}") from None
        algos = tuple(args.algos.split(","))
        if any(a not in ALGORITHMS for a in algos):
            raise UsageError(f"bad --algos {args.algos!r}")
        config = BenchConfig(sizes, tuple(range(args.seed, args.seed + args.seeds)), algos, budget_ms=args.budget_ms)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                write_csv(bench_rows(config), fh)
            return EXIT_OK, ""
        return EXIT_OK, bench_csv(config)

    G = _read_graph(args)
    if cmd == "tsccs":
        classes = _sets(G, twinless_sccs(G))
        return EXIT_OK, _dump({"n": G.n, "m": G.m, "classes": classes}) if fmt == "json" else _lines(classes)
    if cmd in ("taps", "saps"):
        found = twinless_articulation_points(G) if cmd == "taps" else strong_articulation_points(G)
        names = _names(G, found)
        return EXIT_OK, _dump({"n": G.n, "m": G.m, "vertices": names}) if fmt == "json" else " ".join(names) + "\n"
    if cmd == "blocks2s":
        return EXIT_OK, _blocks_out(G, two_strong_blocks(G), "2-strong", fmt)
    if cmd == "blocks2t":
        return EXIT_OK, _blocks_out(G, two_twinless_blocks(G, args.algo), args.algo, fmt)
    if cmd == "forest":
        fam = two_twinless_blocks(G, args.algo)
        if fmt == "dot":
            return EXIT_OK, forest_dot(G, fam)
        forest = block_forest(fam)
        blocks = [_names(G, b) for b in forest.blocks]
        if fmt == "json":
            return EXIT_OK, _dump({
                "n": G.n,
                "m": G.m,
                "algorithm": args.algo,
                "blocks": blocks,
                "cut_vertices": _names(G, forest.cut_vertices),
                "edges": [[i, G.labels[v]] for i, v in forest.edges],
            })
        return EXIT_OK, "".join(f"{' '.join(b)} -- {G.labels[v]}\n" for b, v in ((blocks[i], v) for i, v in forest.edges))
    if cmd == "check2vtc":
        ok = is_two_vertex_twinless_connected(G)
        return EXIT_OK, _dump({"n": G.n, "m": G.m, "two_vertex_twinless_connected": ok}) if fmt == "json" else f"{str(ok).lower()}\n"
    if cmd == "oracle":
        try:
            checks = _oracle_checks(G)
        except OracleBudgetError as exc:
            raise UsageError(str(exc)) from None
        verdicts = {k: "MATCH" if v else "MISMATCH" for k, v in checks.items()}
        status = EXIT_OK if all(checks.values()) else EXIT_MISMATCH
        text = _dump({"checks": verdicts}) if fmt == "json" else "".join(f"{k} {v}\n" for k, v in verdicts.items())
        return status, text
    raise UsageError(f"unknown command {cmd!r}")


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        status, text = _dispatch(args)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except InvariantError as exc:
        err.write(f"internal invariant violated: {exc}\n")
        return EXIT_INVARIANT
    out.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
