"""Labelled tree enumeration and canonical forms of charge-decorated trees."""
from __future__ import annotations

from itertools import product

from .lattice import Charge

MAX_TREE_VERTICES = 7

Edge = tuple[int, int]


def enumerate_labelled_trees(n: int) -> list[list[Edge]]:
    """All labelled trees on vertices 0..n-1 via Prufer sequences."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n > MAX_TREE_VERTICES:
        raise ValueError(f"tree size {n} exceeds bound {MAX_TREE_VERTICES}")
    if n == 1:
        return [[]]
    if n == 2:
        return [[(0, 1)]]
    out = []
    for seq in product(range(n), repeat=n - 2):
        out.append(tree_from_prufer(list(seq), n))
    return out


def tree_from_prufer(seq: list[int], n: int) -> list[Edge]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges: list[Edge] = []
    leaves = sorted(i for i in range(n) if degree[i] == 1)
    import heapq
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v) if leaf < v else (v, leaf))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v) if u < v else (v, u))
    return edges


def adjacency(n: int, edges: list[Edge]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def centroids(n: int, edges: list[Edge]) -> list[int]:
    if n == 1:
        return [0]
    adj = adjacency(n, edges)
    deg = [len(a) for a in adj]
    leaves = [i for i in range(n) if deg[i] == 1]
    removed = [False] * n
    count = n
    while count > 2:
        nxt = []
        for leaf in leaves:
            removed[leaf] = True
            count -= 1
            for u in adj[leaf]:
                if not removed[u]:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        leaves = nxt
    return [i for i in range(n) if not removed[i]]


def _encode(root: int, parent: int, adj: list[list[int]],
            charges: list[Charge], arrows: dict[Edge, bool] | None) -> str:
    parts = []
    for child in adj[root]:
        if child == parent:
            continue
        sub = _encode(child, root, adj, charges, arrows)
        if arrows is not None:
            away = arrows[(root, child)] if (root, child) in arrows else not arrows[(child, root)]
            sub = ("o" if away else "i") + sub
        parts.append(sub)
    parts.sort()
    label = ",".join(str(x) for x in charges[root])
    return f"({label}|{';'.join(parts)})"


def canon_unoriented(n: int, edges: list[Edge], charges: list[Charge]) -> str:
    """Canonical string of an unoriented charge-labelled tree."""
    adj = adjacency(n, edges)
    return min(_encode(c, -1, adj, charges, None) for c in centroids(n, edges))


def canon_oriented(n: int, arcs: list[Edge], charges: list[Charge]) -> str:
    """Canonical string of an edge-oriented charge-labelled tree.

    `arcs` are directed (tail, head) pairs; the underlying tree is used
    for rooting so that equal decorated digraphs get equal strings.
    """
    adj = adjacency(n, arcs)
    arrows = {(a, b): True for a, b in arcs}
    return min(_encode(c, -1, adj, charges, arrows) for c in centroids(n, arcs))


def tree_shape(spec) -> tuple[list[Charge], list[Edge]]:
    """Build (charges, edges) from a nested [charge, [children...]] literal."""
    charges: list[Charge] = []
    edges: list[Edge] = []

    def walk(node, parent):
        charge, children = node
        idx = len(charges)
        charges.append(tuple(charge))
        if parent is not None:
            edges.append((parent, idx))
        for ch in children:
            walk(ch, idx)

    walk(spec, None)
    return charges, edges
