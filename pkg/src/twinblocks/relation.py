"""Symmetric pair matrices and the extraction of blocks from them.

Both the 2-strong and the 2-twinless computations start from a boolean
matrix over a vertex domain, clear every pair that some single-vertex
removal separates, and read the answer off the blocks of the graph formed
by the surviving pairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .connectivity import BlockFamily, biconnected_blocks, maximal_cliques_chordal, perfect_elimination_ordering
from .errors import InvariantError
from .graph import UndirectedGraph


@dataclass
class PairMatrix:
    """Boolean relation over ``domain`` (host-graph vertex indices).

    ``bits[i, j]`` refers to the pair ``domain[i], domain[j]``; the matrix is
    kept symmetric and its diagonal is always false.
    """

    domain: tuple
    bits: np.ndarray

    @classmethod
    def full(cls, domain: Iterable[int]) -> "PairMatrix":
        domain = tuple(sorted(domain))
        bits = np.ones((len(domain), len(domain)), dtype=bool)
        np.fill_diagonal(bits, False)
        return cls(domain, bits)

    @classmethod
    def from_blocks(cls, domain: Iterable[int], blocks: Iterable[Sequence[int]]) -> tuple["PairMatrix", int]:
        """Matrix true exactly on pairs inside a common block; also returns the cells written."""
        domain = tuple(sorted(domain))
        pos = {v: i for i, v in enumerate(domain)}
        bits = np.zeros((len(domain), len(domain)), dtype=bool)
        touched = 0
        for b in blocks:
            idx = np.array([pos[v] for v in b])
            bits[np.ix_(idx, idx)] = True
            touched += len(idx) * len(idx)
        np.fill_diagonal(bits, False)
        return cls(domain, bits), touched

    def __getitem__(self, pair) -> bool:
        u, v = pair
        pos = self.index()
        return bool(self.bits[pos[u], pos[v]])

    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.domain)}

    def true_pairs(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.bits, 1))
        return [(self.domain[i], self.domain[j]) for i, j in zip(iu.tolist(), ju.tolist())]

    def separate(self, labels: Sequence[int], removed: int) -> int:
        """Clear every pair whose members carry different ``labels``.

        ``labels`` is indexed by host vertex.  Pairs involving ``removed`` are
        left alone.  Returns the number of unordered pairs examined.
        """
        k = len(self.domain)
        if k == 0:
            return 0
        lab = np.asarray(labels)[list(self.domain)]
        same = lab[:, None] == lab[None, :]
        pos = self.index().get(removed)
        if pos is not None:
            same[pos, :] = True
            same[:, pos] = True
            k -= 1
        self.bits &= same
        return k * (k - 1) // 2

    def relation_graph(self) -> UndirectedGraph:
        """Graph on ``0..len(domain)-1`` with an edge per true pair."""
        iu, ju = np.nonzero(np.triu(self.bits, 1))
        return UndirectedGraph(len(self.domain), frozenset(zip(iu.tolist(), ju.tolist())))


def blocks_from_matrix(S: PairMatrix, check: bool = True) -> BlockFamily:
    """Blocks of size >= 2 of the relation graph, mapped to host indices.

    With ``check`` the relation graph must be chordal and its blocks must
    coincide with its maximal cliques; otherwise :class:`InvariantError`.
    """
    if not np.array_equal(S.bits, S.bits.T):
        raise InvariantError("pair matrix is not symmetric")
    gb = S.relation_graph()
    blocks = biconnected_blocks(gb)
    if check:
        if perfect_elimination_ordering(gb) is None:
            raise InvariantError("relation graph is not chordal")
        cliques = maximal_cliques_chordal(gb)
        if cliques != blocks:
            raise InvariantError(f"relation graph blocks {blocks.blocks} differ from its maximal cliques {cliques.blocks}")
    return blocks.relabel(S.domain)
