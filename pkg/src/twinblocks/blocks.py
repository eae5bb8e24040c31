"""2-twinless blocks.

Two distinct vertices ``x, y`` are related when, for every other vertex
``w``, they remain in one twinless strongly connected component of
``G - w``.  The 2-twinless blocks are the maximal sets (size >= 2) of
pairwise related vertices.

Three interchangeable algorithms work on a twinless strongly connected
input:

``basic``
    all pairs start related; each twinless articulation point clears the
    pairs it separates; the answer is the blocks of the surviving pairs.
``improved``
    pairs start related only inside a common 2-strong block, and the
    matrix lives on the union of those blocks.
``refine``
    keeps the 2-strong blocks as an explicit family and splits it by the
    twinless components of ``G - z`` for each articulation point ``z``.

:func:`two_twinless_blocks` runs any of them on each twinless component of a
general digraph.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .connectivity import EMPTY_FAMILY, BlockFamily, Partition
from .errors import InvariantError, NotTwinlessError, OracleBudgetError
from .graph import Digraph, induced_subgraph, remove_vertex
from .relation import PairMatrix, blocks_from_matrix
from .strong import maximal_cliques_brute, two_strong_blocks
from .twinless import (
    is_twinless_strongly_connected,
    tscc_labels,
    twinless_articulation_points,
    twinless_sccs,
)

ALGORITHMS = ("basic", "improved", "refine")
ORACLE_MAX_N = 10


@dataclass
class RunStats:
    """Work counters filled in by the block algorithms.

    ``pair_updates`` counts pairs examined by the refinement loop (for
    ``refine``: block members examined).  ``init_cells`` counts matrix cells
    written at initialisation.
    """

    n: int = 0
    m: int = 0
    t: int = 0
    s: int = 0
    pair_updates: int = 0
    init_cells: int = 0
    gated: bool = False
    taps: list = field(default_factory=list)

    def merge(self, other: "RunStats") -> None:
        self.t += other.t
        self.s += other.s
        self.pair_updates += other.pair_updates
        self.init_cells += other.init_cells
        self.taps.extend(other.taps)


def _require_tsc(G: Digraph) -> None:
    if not is_twinless_strongly_connected(G):
        raise NotTwinlessError("input graph is not twinless strongly connected")


def _ordered(taps: list[int], tap_seed: int | None) -> list[int]:
    if tap_seed is None:
        return taps
    taps = list(taps)
    random.Random(tap_seed).shuffle(taps)
    return taps


def relation_matrix(
    G: Digraph,
    domain: Iterable[int] | None = None,
    seed: BlockFamily | None = None,
    *,
    taps: Sequence[int] | None = None,
    stats: RunStats | None = None,
) -> PairMatrix:
    """Pair matrix after clearing every pair some twinless articulation point separates.

    ``seed=None`` starts from all pairs related; a :class:`BlockFamily` seed
    starts from the pairs sharing one of its blocks.  ``taps`` fixes the
    iteration order (default: the articulation points in ascending order).
    """
    _require_tsc(G)
    domain = range(G.n) if domain is None else domain
    if seed is None:
        S = PairMatrix.full(domain)
        init = len(S.domain) ** 2
    else:
        S, init = PairMatrix.from_blocks(domain, seed)
    if taps is None:
        taps = twinless_articulation_points(G)
    updates = 0
    for z in taps:
        updates += S.separate(tscc_labels(G.n, G.out_adj, skip=z), z)
    if stats is not None:
        stats.init_cells += init
        stats.pair_updates += updates
    return S


def _gate(G: Digraph, taps: list[int], stats: RunStats | None) -> BlockFamily | None:
    if stats is not None:
        stats.n, stats.m, stats.t = G.n, G.m, len(taps)
        stats.taps = list(taps)
    if G.n >= 3 and not taps:
        if stats is not None:
            stats.gated = True
        return BlockFamily.of([range(G.n)])
    return None


def two_twinless_blocks_basic(G: Digraph, *, tap_seed=None, stats=None, check=True) -> BlockFamily:
    _require_tsc(G)
    taps = twinless_articulation_points(G)
    gated = _gate(G, taps, stats)
    if gated is not None:
        return gated
    if stats is not None:
        stats.s = G.n
    S = relation_matrix(G, taps=_ordered(taps, tap_seed), stats=stats)
    return blocks_from_matrix(S, check=check)


def two_twinless_blocks_improved(G: Digraph, *, tap_seed=None, stats=None, check=True) -> BlockFamily:
    _require_tsc(G)
    taps = twinless_articulation_points(G)
    gated = _gate(G, taps, stats)
    if gated is not None:
        return gated
    strong = two_strong_blocks(G, check=check)
    A = strong.vertices()
    if stats is not None:
        stats.s = len(A)
    if not A:
        return EMPTY_FAMILY
    S = relation_matrix(G, A, strong, taps=_ordered(taps, tap_seed), stats=stats)
    return blocks_from_matrix(S, check=check)


def refine_family(F: BlockFamily, P: Partition, z: int) -> BlockFamily:
    """Split every block of ``F`` by the classes of ``P``, a partition of ``V - z``.

    A block containing ``z`` keeps ``z`` in each of its pieces.  Pieces with
    fewer than two vertices vanish, and pieces contained in another piece
    are dropped.
    """
    cls = P.class_map
    if z in cls:
        raise ValueError(f"partition must not contain the removed vertex {z}")
    pieces = []
    for block in F:
        groups: dict[int, list[int]] = {}
        for v in block:
            if v == z:
                continue
            if v not in cls:
                raise ValueError(f"vertex {v} is not covered by the partition")
            groups.setdefault(cls[v], []).append(v)
        extra = [z] if z in block else []
        for g in groups.values():
            piece = g + extra
            if len(piece) >= 2:
                pieces.append(frozenset(piece))
    pieces = set(pieces)
    maximal = [p for p in pieces if not any(p < q for q in pieces)]
    return BlockFamily.of(maximal)


def two_twinless_blocks_refine(G: Digraph, *, tap_seed=None, stats=None, check=True) -> BlockFamily:
    _require_tsc(G)
    taps = twinless_articulation_points(G)
    gated = _gate(G, taps, stats)
    if gated is not None:
        return gated
    F = two_strong_blocks(G, check=check)
    if stats is not None:
        stats.s = len(F.vertices())
    for z in _ordered(taps, tap_seed):
        if not F:
            break
        P = Partition.from_labels(tscc_labels(G.n, G.out_adj, skip=z))
        if stats is not None:
            stats.pair_updates += sum(len(b) for b in F)
        F = refine_family(F, P, z)
    return F


_RUNNERS = {
    "basic": two_twinless_blocks_basic,
    "improved": two_twinless_blocks_improved,
    "refine": two_twinless_blocks_refine,
}


def two_twinless_blocks(
    G: Digraph, algo: str = "basic", *, tap_seed=None, stats: RunStats | None = None, check=True
) -> BlockFamily:
    """2-twinless blocks of an arbitrary digraph, computed per twinless component."""
    try:
        run = _RUNNERS[algo]
    except KeyError:
        raise ValueError(f"unknown algorithm {algo!r}; expected one of {', '.join(ALGORITHMS)}") from None
    if stats is not None:
        stats.n, stats.m = G.n, G.m
    blocks = []
    for comp in twinless_sccs(G):
        if len(comp) < 3:
            continue
        H = induced_subgraph(G, comp)
        sub = RunStats() if stats is not None else None
        fam = run(H, tap_seed=tap_seed, stats=sub, check=check)
        if sub is not None:
            sub.taps = [comp[v] for v in sub.taps]
            stats.merge(sub)
        blocks.extend(fam.relabel(comp))
    return BlockFamily.of(blocks) if blocks else EMPTY_FAMILY


# -- block forest ---------------------------------------------------------------------


@dataclass(frozen=True)
class BlockForest:
    """Bipartite graph joining each block to the vertices it shares with other blocks.

    Block nodes are numbered by position in ``blocks``; ``edges`` holds
    ``(block_index, vertex)`` pairs.
    """

    blocks: tuple
    cut_vertices: tuple
    edges: tuple

    def node_count(self) -> int:
        return len(self.blocks) + len(self.cut_vertices)


def block_forest(blocks: BlockFamily) -> BlockForest:
    owners: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for v in b:
            owners.setdefault(v, []).append(i)
    cut = sorted(v for v, bs in owners.items() if len(bs) >= 2)
    edges = tuple((i, v) for v in cut for i in owners[v])
    forest = BlockForest(tuple(blocks), tuple(cut), tuple(sorted(edges)))
    _assert_acyclic(forest)
    return forest


def _assert_acyclic(forest: BlockForest) -> None:
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, v in forest.edges:
        a, b = find(("b", i)), find(("v", v))
        if a == b:
            raise InvariantError(f"block forest has a cycle through block {forest.blocks[i]} and vertex {v}")
        parent[a] = b


# -- definitional oracle --------------------------------------------------------------


def twinless_relation_oracle(G: Digraph):
    """``related(x, y)`` straight from the definition, using explicit vertex removal."""
    base = twinless_sccs(G)
    after = {}
    for w in range(G.n):
        H = remove_vertex(G, w)
        after[w] = twinless_sccs(H).relabel(H.origin)

    def related(x, y):
        if x == y or not base.same_class(x, y):
            return False
        return all(after[w].same_class(x, y) for w in range(G.n) if w not in (x, y))

    return related


def oracle_two_twinless_blocks(G: Digraph) -> BlockFamily:
    """2-twinless blocks by exhaustive search (``n <= 10``)."""
    if G.n > ORACLE_MAX_N:
        raise OracleBudgetError(f"n={G.n} exceeds the oracle limit of {ORACLE_MAX_N}")
    return maximal_cliques_brute(G.n, twinless_relation_oracle(G))
