"""Strong articulation points and 2-strong blocks."""
from __future__ import annotations

from itertools import combinations

from .connectivity import EMPTY_FAMILY, BlockFamily, Partition, scc_labels, strongly_connected_components
from .errors import OracleBudgetError
from .graph import Digraph, induced_subgraph, remove_vertex
from .relation import PairMatrix, blocks_from_matrix

ORACLE_MAX_N = 10


def strong_articulation_points(G: Digraph) -> list[int]:
    """Vertices whose removal increases the number of SCCs."""
    if G.n <= 1:
        return []
    base = len(set(scc_labels(G.n, G.out_adj)))
    saps = []
    for v in range(G.n):
        after = len(set(scc_labels(G.n, G.out_adj, skip=v))) - 1
        if after > base:
            saps.append(v)
    return saps


def _strong_blocks_of_component(H: Digraph, check: bool) -> BlockFamily:
    S = PairMatrix.full(range(H.n))
    for z in strong_articulation_points(H):
        S.separate(scc_labels(H.n, H.out_adj, skip=z), z)
    return blocks_from_matrix(S, check=check)


def two_strong_blocks(G: Digraph, check: bool = True) -> BlockFamily:
    """Maximal vertex sets (size >= 2) whose pairs stay strongly connected after any one removal.

    Each SCC is handled on its own: start with every pair related, and for
    each strong articulation point of the component clear the pairs it
    separates.  Pairs in different SCCs are never related.
    """
    blocks = []
    for comp in strongly_connected_components(G):
        if len(comp) < 2:
            continue
        H = induced_subgraph(G, comp)
        blocks.extend(_strong_blocks_of_component(H, check).relabel(comp))
    return BlockFamily.of(blocks) if blocks else EMPTY_FAMILY


def maximal_cliques_brute(n: int, related) -> BlockFamily:
    """Maximal cliques of size >= 2 of the relation ``related(u, v)`` by subset enumeration."""
    edges = {(u, v) for u, v in combinations(range(n), 2) if related(u, v)}
    found: list[frozenset] = []
    for size in range(n, 1, -1):
        for subset in combinations(range(n), size):
            s = frozenset(subset)
            if any(s <= f for f in found):
                continue
            if all(pair in edges for pair in combinations(subset, 2)):
                found.append(s)
    return BlockFamily.of(found, check=False)


def oracle_two_strong_blocks(G: Digraph) -> BlockFamily:
    """2-strong blocks straight from the definition (``n <= 10``)."""
    if G.n > ORACLE_MAX_N:
        raise OracleBudgetError(f"n={G.n} exceeds the oracle limit of {ORACLE_MAX_N}")
    base = strongly_connected_components(G)
    after = {}
    for u in range(G.n):
        H = remove_vertex(G, u)
        after[u] = strongly_connected_components(H).relabel(H.origin)

    def related(x, y):
        if not base.same_class(x, y):
            return False
        return all(after[u].same_class(x, y) for u in range(G.n) if u not in (x, y))

    return maximal_cliques_brute(G.n, related)

