"""Directed and undirected graph values, edge-list I/O, subgraphs and generators.

Vertices are the integers ``0..n-1``.  Every graph carries a tuple of
external labels (the names read from an edge list) and, when it was cut
out of a larger graph, an ``origin`` tuple mapping each vertex back to its
index in that parent.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ParseError


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset
    labels: tuple = None
    origin: tuple = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={self.n}")
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        elif len(self.labels) != self.n:
            raise ValueError("one label per vertex required")

    @classmethod
    def from_arcs(cls, n, arcs, labels=None):
        """Build a graph, silently dropping self-loops and repeated arcs."""
        return cls(n, frozenset((u, v) for u, v in arcs if u != v), tuple(labels) if labels else None)

    @property
    def m(self):
        return len(self.arcs)

    @cached_property
    def out_adj(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            adj[u].append(v)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def in_adj(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def _index(self):
        return {name: i for i, name in enumerate(self.labels)}

    def vertex(self, label) -> int:
        """Internal index of the vertex named ``label``."""
        return self._index[str(label)]

    def antiparallel_pairs(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v in self.arcs if u < v and (v, u) in self.arcs)

    def degree(self, v) -> int:
        return len(self.out_adj[v]) + len(self.in_adj[v])


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n, edges):
        return cls(n, frozenset((min(u, v), max(u, v)) for u, v in edges if u != v))

    @property
    def m(self):
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    def has_edge(self, u, v) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def parse_edge_list(text: str, stats: dict | None = None) -> Digraph:
    """Read ``"<u> <v>"`` lines into a :class:`Digraph`.

    Names get indices in order of first appearance.  Blank lines and lines
    starting with ``#`` are skipped.  If ``stats`` is given it receives the
    number of dropped self-loops and duplicate arcs.
    """
    index: dict[str, int] = {}
    arcs = set()
    loops = duplicates = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex names, got {len(tokens)} tokens", lineno)
        u, v = (index.setdefault(t, len(index)) for t in tokens)
        if u == v:
            loops += 1
        elif (u, v) in arcs:
            duplicates += 1
        else:
            arcs.add((u, v))
    if stats is not None:
        stats["loops_dropped"] = loops
        stats["duplicates_dropped"] = duplicates
    return Digraph(len(index), frozenset(arcs), tuple(index))


def to_edge_list(G: Digraph) -> str:
    return "".join(f"{G.labels[u]} {G.labels[v]}\n" for u, v in sorted(G.arcs))


def labeled_arcs(G: Digraph) -> frozenset:
    return frozenset((G.labels[u], G.labels[v]) for u, v in G.arcs)


FIG1_ARCS = (
    (1, 5), (2, 3), (2, 1), (7, 4), (5, 7), (7, 6), (9, 2), (7, 4), (4, 15), (15, 2),
    (10, 7), (3, 8), (6, 9), (8, 10), (7, 17), (17, 7), (17, 18), (20, 17), (19, 12),
    (12, 19), (12, 13), (13, 12), (13, 16), (16, 17), (17, 14), (14, 13), (18, 19),
    (19, 11), (11, 20),
)


def fig1_fixture() -> Digraph:
    """The 20-vertex example graph; vertex ``k`` has index ``k - 1`` and label ``str(k)``."""
    return Digraph.from_arcs(20, ((u - 1, v - 1) for u, v in FIG1_ARCS), [str(k) for k in range(1, 21)])


def induced_subgraph(G: Digraph, S: Iterable[int]) -> Digraph:
    keep = sorted(set(S))
    for v in keep:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range for n={G.n}")
    new = {v: i for i, v in enumerate(keep)}
    arcs = frozenset((new[u], new[v]) for u, v in G.arcs if u in new and v in new)
    return Digraph(len(keep), arcs, tuple(G.labels[v] for v in keep), tuple(keep))


def remove_vertex(G: Digraph, v: int) -> Digraph:
    """``G`` without ``v``; ``origin`` maps the survivors back to their indices in ``G``."""
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range for n={G.n}")
    return induced_subgraph(G, (u for u in range(G.n) if u != v))


def underlying_undirected(G: Digraph) -> UndirectedGraph:
    return UndirectedGraph.from_edges(G.n, G.arcs)


def random_digraph(n: int, m: int, seed: int) -> Digraph:
    """Uniformly random graph with exactly ``m`` distinct non-loop arcs."""
    slots = n * (n - 1)
    if m > slots:
        raise ValueError(f"m={m} exceeds the {slots} possible arcs on {n} vertices")
    rng = random.Random(seed)
    arcs = []
    for k in rng.sample(range(slots), m):
        u, r = divmod(k, n - 1)
        arcs.append((u, r if r < u else r + 1))
    return Digraph(n, frozenset(arcs))


def random_tsc_digraph(n: int, extra: int, seed: int, twin_bias: float = 0.2) -> Digraph:
    """Random twinless strongly connected graph on ``n >= 3`` vertices.

    A directed Hamiltonian cycle through a random permutation is twinless
    strongly connected on its own; ``extra`` further arcs are then added.
    With probability ``twin_bias`` an extra arc reverses an existing one,
    which produces the antiparallel pairs the twinless notions care about.
    """
    if n < 3:
        raise ValueError("a twinless strongly connected graph on more than one vertex needs n >= 3")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    arcs = {(perm[i], perm[(i + 1) % n]) for i in range(n)}
    target = min(len(arcs) + extra, n * (n - 1))
    while len(arcs) < target:
        if rng.random() < twin_bias:
            u, v = rng.choice(sorted(arcs))
            arc = (v, u)
        else:
            u, v = rng.sample(range(n), 2)
            arc = (u, v)
        arcs.add(arc)
    return Digraph(n, frozenset(arcs))


def bidirected_complete(n: int) -> Digraph:
    return Digraph(n, frozenset((u, v) for u in range(n) for v in range(n) if u != v))


def directed_cycle(n: int) -> Digraph:
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)) if n > 1 else frozenset())


def disjoint_union(graphs: Sequence[Digraph]) -> Digraph:
    arcs = []
    labels = []
    offset = 0
    for k, H in enumerate(graphs):
        arcs.extend((u + offset, v + offset) for u, v in H.arcs)
        labels.extend(f"{k}.{name}" for name in H.labels)
        offset += H.n
    return Digraph(offset, frozenset(arcs), tuple(labels))
