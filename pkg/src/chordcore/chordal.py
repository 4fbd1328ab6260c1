"""Chordality recognition, simplicial/peeling vertices, chordal generators."""

from __future__ import annotations

import random
from itertools import combinations
from typing import TYPE_CHECKING, Iterator

from .graph import Graph, bits, mask_of

if TYPE_CHECKING:
    from .treemodel import TreeModel

LABELED_ENUM_LIMIT = 9


def mcs_order(G: Graph) -> list[int]:
    """Maximum cardinality search visit order, ties to the lowest id.

    The reverse of the returned order is a perfect elimination ordering
    whenever ``G`` is chordal.
    """
    weight = [0] * G.n
    visited = [False] * G.n
    order = []
    for _ in range(G.n):
        best = -1
        for v in range(G.n):
            if not visited[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        visited[best] = True
        order.append(best)
        for w in G.adj[best]:
            if not visited[w]:
                weight[w] += 1
    return order


def is_perfect_elimination_order(G: Graph, peo: list[int]) -> bool:
    pos = {v: i for i, v in enumerate(peo)}
    masks = G.masks
    for v in peo:
        later = [w for w in G.adj[v] if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=pos.__getitem__)
        rest = mask_of(later) & ~(1 << parent)
        if rest & ~masks[parent]:
            return False
    return True


def is_chordal(G: Graph) -> bool:
    return is_perfect_elimination_order(G, mcs_order(G)[::-1])


def has_long_induced_cycle(G: Graph) -> bool:
    """Brute force: some vertex subset of size >= 4 induces a cycle."""
    masks = G.masks
    for size in range(4, G.n + 1):
        for subset in combinations(range(G.n), size):
            sub = mask_of(subset)
            if any(bin(masks[v] & sub).count("1") != 2 for v in subset):
                continue
            # 2-regular: a cycle iff connected
            seen = 1 << subset[0]
            frontier = seen
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= masks[v] & sub
                frontier = nxt & ~seen
                seen |= nxt
            if seen == sub:
                return True
    return False


def _is_clique_mask(G: Graph, mask: int) -> bool:
    masks = G.masks
    return all(mask & ~(1 << v) & ~masks[v] == 0 for v in bits(mask))


def simplicial_vertices(G: Graph, within: int | None = None) -> frozenset[int]:
    """Vertices whose neighborhood (inside ``within``) is a clique."""
    alive = G.all_mask if within is None else within
    return frozenset(v for v in bits(alive) if _is_clique_mask(G, G.masks[v] & alive))


def peeling_vertices(G: Graph, within: int | None = None) -> frozenset[int]:
    alive = G.all_mask if within is None else within
    simp = mask_of(simplicial_vertices(G, alive))
    return frozenset(u for u in bits(alive) if G.masks[u] & simp)


def random_chordal(n: int, fill: float = 0.5, seed: int = 0) -> tuple[Graph, TreeModel]:
    """Random chordal graph together with a tree model witnessing it.

    A random tree on ``max(n, 1)`` nodes is drawn; each vertex occupies a
    connected subtree grown from a random node, each growth step accepted
    with probability ``fill``. Edges are read off shared bags.
    """
    from .treemodel import TreeModel

    rng = random.Random(seed)
    k = max(n, 1)
    tree_nbrs: list[list[int]] = [[] for _ in range(k)]
    tree_edges = []
    for node in range(1, k):
        parent = rng.randrange(node)
        tree_edges.append((parent, node))
        tree_nbrs[parent].append(node)
        tree_nbrs[node].append(parent)
    bags: list[set[int]] = [set() for _ in range(k)]
    for v in range(n):
        start = rng.randrange(k)
        sub = {start}
        boundary = list(tree_nbrs[start])
        while boundary and rng.random() < fill:
            nxt = boundary.pop(rng.randrange(len(boundary)))
            if nxt in sub:
                continue
            sub.add(nxt)
            boundary.extend(w for w in tree_nbrs[nxt] if w not in sub)
        for node in sub:
            bags[node].add(v)
    edges = set()
    for bag in bags:
        for u, v in combinations(sorted(bag), 2):
            edges.add((u, v))
    G = Graph.from_edges(n, sorted(edges))
    return G, TreeModel(tuple(frozenset(b) for b in bags), tuple(tree_edges))


def random_forest(n: int, rng: random.Random, edge_prob: float = 0.7) -> Graph:
    """Random forest: each vertex joins a random earlier vertex with ``edge_prob``."""
    edges = [(rng.randrange(v), v) for v in range(1, n) if rng.random() < edge_prob]
    return Graph.from_edges(n, edges)


def enumerate_chordal(n_max: int) -> Iterator[Graph]:
    """Every labeled chordal graph on ``0..n-1`` for ``n = 0..n_max``, once each.

    Brute force over edge bitmasks; the cost is ``2^(n(n-1)/2)`` per ``n``,
    practical up to about ``n = 6``. Use
    :func:`chordcore.enumeration.chordal_classes` beyond that.
    """
    if n_max > LABELED_ENUM_LIMIT:
        raise ValueError(f"n_max must be <= {LABELED_ENUM_LIMIT}")
    for n in range(n_max + 1):
        yield from _labeled_graphs(n, chordal_only=True)


def labeled_chordal_counts(n_max: int) -> list[int]:
    counts = [0] * (n_max + 1)
    for G in enumerate_chordal(n_max):
        counts[G.n] += 1
    return counts


def _labeled_graphs(n: int, chordal_only: bool = False) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        masks = [0] * n
        for i in bits(code):
            u, v = pairs[i]
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        G = Graph.from_masks(masks)
        if not chordal_only or is_chordal(G):
            yield G


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    return _labeled_graphs(n)
