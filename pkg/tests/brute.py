"""Brute-force reference computations used only by the tests.

Nothing here imports the package's traversal code, so agreement with the
fast paths is an independent check.
"""
from itertools import combinations


def reachability(n, arcs):
    reach = [[i == j for j in range(n)] for i in range(n)]
    for u, v in arcs:
        reach[u][v] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return reach


def scc_classes(n, arcs):
    reach = reachability(n, arcs)
    seen, classes = set(), []
    for v in range(n):
        if v in seen:
            continue
        cls = {w for w in range(n) if reach[v][w] and reach[w][v]}
        seen |= cls
        classes.append(tuple(sorted(cls)))
    return sorted(classes)


def connected_classes(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, classes = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, todo = {s}, [s]
        while todo:
            x = todo.pop()
            for y in adj[x] - comp:
                comp.add(y)
                todo.append(y)
        seen |= comp
        classes.append(tuple(sorted(comp)))
    return sorted(classes)


def brute_bridges(n, edges):
    edges = set(edges)
    base = len(connected_classes(n, edges))
    return sorted(e for e in edges if len(connected_classes(n, edges - {e})) > base)


def two_edge_classes(n, edges):
    return connected_classes(n, set(edges) - set(brute_bridges(n, edges)))


def _induced(edges, S):
    return [(u, v) for u, v in edges if u in S and v in S]


def _biconnected(S, edges):
    S = sorted(S)
    sub = _induced(edges, set(S))
    idx = {v: i for i, v in enumerate(S)}
    relabeled = [(idx[u], idx[v]) for u, v in sub]
    if len(S) == 2:
        return len(sub) == 1
    if len(connected_classes(len(S), relabeled)) != 1:
        return False
    for cut in range(len(S)):
        rest = [(u if u < cut else u - 1, v if v < cut else v - 1) for u, v in relabeled if cut not in (u, v)]
        if len(connected_classes(len(S) - 1, rest)) != 1:
            return False
    return True


def brute_blocks(n, edges):
    """Maximal vertex sets inducing a biconnected subgraph (an edge counts)."""
    found = []
    for size in range(n, 1, -1):
        for S in combinations(range(n), size):
            s = frozenset(S)
            if any(s <= f for f in found):
                continue
            if _biconnected(S, edges):
                found.append(s)
    return sorted(tuple(sorted(f)) for f in found)


def brute_max_cliques(n, edges):
    es = {frozenset(e) for e in edges}
    found = []
    for size in range(n, 1, -1):
        for S in combinations(range(n), size):
            s = frozenset(S)
            if any(s <= f for f in found):
                continue
            if all(frozenset(p) in es for p in combinations(S, 2)):
                found.append(s)
    return sorted(tuple(sorted(f)) for f in found)


def has_chordless_cycle(n, edges):
    es = {frozenset(e) for e in edges}
    for size in range(4, n + 1):
        for S in combinations(range(n), size):
            deg = {v: sum(frozenset((v, w)) in es for w in S if w != v) for v in S}
            if any(d != 2 for d in deg.values()):
                continue
            sub = [(S.index(u), S.index(v)) for u, v in combinations(S, 2) if frozenset((u, v)) in es]
            if len(connected_classes(size, sub)) == 1:
                return True
    return False
