"""Twinless strong connectivity.

A digraph is twinless strongly connected (TSC) when some strongly connected
spanning subgraph avoids every antiparallel pair.  Inside a strongly
connected graph this happens exactly when the underlying undirected graph
has no bridge, so the twinless components are computed as the
2-edge-connected classes of each SCC's underlying graph.
"""
from __future__ import annotations

from itertools import combinations, product
from typing import Sequence

from .connectivity import Partition, is_strongly_connected, scc_labels, two_edge_cc_labels
from .errors import InvariantError, OracleBudgetError
from .graph import Digraph, induced_subgraph, remove_vertex

ORACLE_PAIR_BUDGET = 20
ORACLE_TSCC_MAX_N = 12


def tscc_labels(n: int, out_adj: Sequence[Sequence[int]], skip: int = -1) -> list[int]:
    """Twinless component id per vertex (``-1`` for ``skip``)."""
    scc = scc_labels(n, out_adj, skip)
    und: list[set] = [set() for _ in range(n)]
    for u in range(n):
        if u == skip:
            continue
        for v in out_adj[u]:
            if v != skip and scc[u] == scc[v]:
                und[u].add(v)
                und[v].add(u)
    return two_edge_cc_labels(n, [sorted(a) for a in und], skip)


def twinless_sccs(G: Digraph) -> Partition:
    return Partition.from_labels(tscc_labels(G.n, G.out_adj))


def is_twinless_strongly_connected(G: Digraph) -> bool:
    return G.n >= 1 and twinless_sccs(G).count == 1


def twinless_articulation_points(G: Digraph) -> list[int]:
    """Vertices whose removal increases the number of twinless components."""
    if G.n <= 1:
        return []
    base = len(set(tscc_labels(G.n, G.out_adj)))
    taps = []
    for v in range(G.n):
        after = len(set(tscc_labels(G.n, G.out_adj, skip=v))) - 1  # drop the -1 of v
        if after > base:
            taps.append(v)
    return taps


def is_two_vertex_twinless_connected(G: Digraph) -> bool:
    return G.n >= 3 and is_twinless_strongly_connected(G) and not twinless_articulation_points(G)


# -- definitional oracles -------------------------------------------------------------


def oracle_twinless_witness(G: Digraph, budget: int = ORACLE_PAIR_BUDGET) -> frozenset | None:
    """An arc set without antiparallel pairs whose spanning subgraph is strongly connected.

    Unpaired arcs are always kept.  Each antiparallel pair keeps one of its
    two arcs; dropping both never helps since adding arcs cannot break strong
    connectivity, so that choice is not searched.  Returns ``None`` when no
    such arc set exists.
    """
    pairs = G.antiparallel_pairs()
    if len(pairs) > budget:
        raise OracleBudgetError(f"{len(pairs)} antiparallel pairs exceed the budget of {budget}")
    if not is_strongly_connected(G):
        return None
    paired = {a for u, v in pairs for a in ((u, v), (v, u))}
    fixed = [a for a in G.arcs if a not in paired]
    for choice in product((0, 1), repeat=len(pairs)):
        arcs = fixed + [(u, v) if c == 0 else (v, u) for (u, v), c in zip(pairs, choice)]
        if is_strongly_connected(Digraph(G.n, frozenset(arcs))):
            return frozenset(arcs)
    return None


def oracle_is_tsc(G: Digraph) -> bool:
    return oracle_twinless_witness(G) is not None


def oracle_twinless_sccs(G: Digraph) -> Partition:
    """Maximal vertex sets with a TSC induced subgraph, by exhaustive subset search."""
    if G.n > ORACLE_TSCC_MAX_N:
        raise OracleBudgetError(f"n={G.n} exceeds the oracle limit of {ORACLE_TSCC_MAX_N}")
    found: list[frozenset] = []
    for size in range(G.n, 0, -1):
        for subset in combinations(range(G.n), size):
            s = frozenset(subset)
            if any(s <= f for f in found):
                continue
            if oracle_is_tsc(induced_subgraph(G, subset)):
                found.append(s)
    try:
        part = Partition.of(found)
    except ValueError as exc:
        raise InvariantError(f"maximal TSC sets do not partition V: {exc}") from None
    if part.members() != frozenset(range(G.n)):
        raise InvariantError("maximal TSC sets do not cover V")
    return part


def oracle_twinless_articulation_points(G: Digraph) -> list[int]:
    if G.n <= 1:
        return []
    base = oracle_twinless_sccs(G).count
    return [v for v in range(G.n) if oracle_twinless_sccs(remove_vertex(G, v)).count > base]
