"""Classical connectivity routines: SCCs, 2-edge-connected components,
biconnected blocks, chordality and maximal cliques of chordal graphs.

All traversals are iterative.  The ``*_labels`` functions work directly on
adjacency tuples and accept a ``skip`` vertex treated as deleted, which lets
the articulation-point loops avoid materialising ``G - v`` each time.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvariantError
from .graph import Digraph, UndirectedGraph


@dataclass(frozen=True)
class Partition:
    """Disjoint cover of a vertex set, classes ordered by their minimum."""

    classes: tuple

    @classmethod
    def of(cls, classes: Iterable[Iterable[int]]) -> "Partition":
        cl = [tuple(sorted(c)) for c in classes]
        if any(not c for c in cl):
            raise ValueError("partition classes must be non-empty")
        seen = set()
        for c in cl:
            if seen.intersection(c):
                raise ValueError("partition classes overlap")
            seen.update(c)
        return cls(tuple(sorted(cl)))

    @classmethod
    def from_labels(cls, labels: Sequence[int], vertices: Sequence[int] | None = None) -> "Partition":
        """Group ``vertices`` (default ``range(len(labels))``) by label; negative labels are skipped."""
        groups: dict[int, list[int]] = {}
        for i, lab in enumerate(labels):
            if lab >= 0:
                groups.setdefault(lab, []).append(i if vertices is None else vertices[i])
        return cls.of(groups.values())

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    @property
    def count(self) -> int:
        return len(self.classes)

    def members(self) -> frozenset:
        return frozenset(v for c in self.classes for v in c)

    @cached_property
    def class_map(self) -> dict:
        return {v: k for k, c in enumerate(self.classes) for v in c}

    def same_class(self, u, v) -> bool:
        cm = self.class_map
        return u in cm and v in cm and cm[u] == cm[v]

    def relabel(self, mapping: Sequence[int]) -> "Partition":
        return Partition.of([mapping[v] for v in c] for c in self.classes)


@dataclass(frozen=True)
class BlockFamily:
    """Vertex sets of size >= 2 pairwise sharing at most one vertex, in canonical order."""

    blocks: tuple

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], check: bool = True) -> "BlockFamily":
        fam = cls(tuple(sorted({tuple(sorted(set(b))) for b in blocks})))
        if check:
            fam.validate()
        return fam

    def validate(self) -> None:
        for b in self.blocks:
            if len(b) < 2:
                raise InvariantError(f"block {b} has fewer than two vertices")
        sets = [frozenset(b) for b in self.blocks]
        for i, j in combinations(range(len(sets)), 2):
            common = sets[i] & sets[j]
            if len(common) > 1:
                raise InvariantError(
                    f"blocks {self.blocks[i]} and {self.blocks[j]} share {len(common)} vertices"
                )

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def as_sets(self) -> set:
        return {frozenset(b) for b in self.blocks}

    def vertices(self) -> list[int]:
        return sorted({v for b in self.blocks for v in b})

    def relabel(self, mapping: Sequence[int]) -> "BlockFamily":
        return BlockFamily.of(([mapping[v] for v in b] for b in self.blocks), check=False)


EMPTY_FAMILY = BlockFamily(())


# -- strongly connected components -------------------------------------------------


def scc_labels(n: int, out_adj: Sequence[Sequence[int]], skip: int = -1) -> list[int]:
    """Tarjan's algorithm.  Returns a component id per vertex, ``-1`` for ``skip``."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if root == skip or index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]
        while work:
            v, i = work[-1]
            nbrs = out_adj[v]
            if i < len(nbrs):
                work[-1] = (v, i + 1)
                w = nbrs[i]
                if w == skip:
                    continue
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                p = work[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def strongly_connected_components(G: Digraph) -> Partition:
    return Partition.from_labels(scc_labels(G.n, G.out_adj))


def is_strongly_connected(G: Digraph) -> bool:
    return G.n >= 1 and strongly_connected_components(G).count == 1


# -- 2-edge-connected components ----------------------------------------------------


def two_edge_cc_labels(n: int, adj: Sequence[Sequence[int]], skip: int = -1) -> list[int]:
    """Component id per vertex for the classes left after deleting all bridges.

    Single low-link pass: a vertex whose low value equals its own preorder
    number closes a class.  Assumes a simple graph (no parallel edges).
    """
    pre = [-1] * n
    low = [0] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if root == skip or pre[root] != -1:
            continue
        pre[root] = low[root] = counter
        counter += 1
        stack.append(root)
        work = [(root, -1, 0)]
        while work:
            v, parent, i = work[-1]
            nbrs = adj[v]
            if i < len(nbrs):
                work[-1] = (v, parent, i + 1)
                w = nbrs[i]
                if w == skip or w == parent:
                    continue
                if pre[w] == -1:
                    pre[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    work.append((w, v, 0))
                elif pre[w] < low[v]:
                    low[v] = pre[w]
                continue
            work.pop()
            if parent != -1 and low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] == pre[v]:
                while True:
                    w = stack.pop()
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def two_edge_connected_components(U: UndirectedGraph) -> Partition:
    return Partition.from_labels(two_edge_cc_labels(U.n, U.adj))


def bridges(U: UndirectedGraph) -> list[tuple[int, int]]:
    lab = two_edge_cc_labels(U.n, U.adj)
    return sorted(e for e in U.edges if lab[e[0]] != lab[e[1]])


# -- biconnected blocks -------------------------------------------------------------


def biconnected_blocks(U: UndirectedGraph) -> BlockFamily:
    """Vertex sets of the biconnected components that contain at least one edge."""
    n = U.n
    adj = U.adj
    pre = [-1] * n
    low = [0] * n
    counter = 0
    blocks = []
    for root in range(n):
        if pre[root] != -1 or not adj[root]:
            continue
        pre[root] = low[root] = counter
        counter += 1
        edge_stack: list[tuple[int, int]] = []
        work = [(root, -1, 0)]
        while work:
            v, parent, i = work[-1]
            nbrs = adj[v]
            if i < len(nbrs):
                work[-1] = (v, parent, i + 1)
                w = nbrs[i]
                if w == parent:
                    continue
                if pre[w] == -1:
                    pre[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    work.append((w, v, 0))
                elif pre[w] < pre[v]:
                    edge_stack.append((v, w))
                    if pre[w] < low[v]:
                        low[v] = pre[w]
                continue
            work.pop()
            if parent == -1:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] >= pre[parent]:
                block = set()
                while True:
                    a, b = edge_stack.pop()
                    block.add(a)
                    block.add(b)
                    if (a, b) == (parent, v):
                        break
                blocks.append(block)
    return BlockFamily.of(blocks)


# -- chordal graphs -----------------------------------------------------------------


def lex_bfs(U: UndirectedGraph) -> list[int]:
    """Lexicographic breadth-first search by partition refinement; returns the visit order."""
    if U.n == 0:
        return []
    parts: list[list[int]] = [list(range(U.n))]
    order = []
    visited = [False] * U.n
    while parts:
        head = parts[0]
        v = head.pop(0)
        if not head:
            parts.pop(0)
        visited[v] = True
        order.append(v)
        nbrs = {w for w in U.adj[v] if not visited[w]}
        if not nbrs:
            continue
        refined = []
        for part in parts:
            inside = [w for w in part if w in nbrs]
            outside = [w for w in part if w not in nbrs]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        parts = refined
    return order


def _later_neighbours(U: UndirectedGraph, peo: Sequence[int]):
    pos = {v: i for i, v in enumerate(peo)}
    later = {}
    for v in peo:
        later[v] = sorted((w for w in U.adj[v] if pos[w] > pos[v]), key=pos.__getitem__)
    return pos, later


def _is_peo(U: UndirectedGraph, peo: Sequence[int]) -> bool:
    # each vertex's later neighbours, minus the first one, must be adjacent to that first one
    _, later = _later_neighbours(U, peo)
    for v in peo:
        if len(later[v]) < 2:
            continue
        p = later[v][0]
        nbrs_p = set(U.adj[p])
        if any(w not in nbrs_p for w in later[v][1:]):
            return False
    return True


def perfect_elimination_ordering(U: UndirectedGraph) -> list[int] | None:
    """A perfect elimination ordering of ``U``, or ``None`` if ``U`` is not chordal."""
    peo = lex_bfs(U)[::-1]
    return peo if _is_peo(U, peo) else None


def is_chordal(U: UndirectedGraph) -> bool:
    return perfect_elimination_ordering(U) is not None


def maximal_cliques_chordal(U: UndirectedGraph) -> BlockFamily:
    """Maximal cliques of size >= 2 of a chordal graph via its elimination ordering.

    The candidate clique of ``v`` is ``v`` plus its later neighbours.  It fails
    to be maximal exactly when some earlier ``u`` has ``v`` as first later
    neighbour and a candidate one larger.
    """
    peo = perfect_elimination_ordering(U)
    if peo is None:
        raise ValueError("graph is not chordal")
    _, later = _later_neighbours(U, peo)
    dominated = set()
    for u in peo:
        if later[u]:
            p = later[u][0]
            if len(later[u]) == len(later[p]) + 1:
                dominated.add(p)
    cliques = [[v, *later[v]] for v in peo if v not in dominated and later[v]]
    return BlockFamily.of(cliques, check=False)
