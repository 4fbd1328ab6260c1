"""Simple undirected graphs on dense vertex ids ``0..n-1``.

Adjacency is kept both as frozensets (readable) and as integer bitmasks
(fast subset tests); every other module builds on the predicates here.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

ISO_LIMIT = 12


class GraphFormatError(ValueError):
    """Raised when an edge-list file is malformed."""


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency must have exactly n entries")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"self-loop at {v}")
            for w in nbrs:
                if not 0 <= w < self.n:
                    raise ValueError(f"neighbor {w} of {v} out of range")
                if v not in self.adj[w]:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = list(masks)
        return cls(len(masks), tuple(frozenset(bits(m)) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in nbrs) for nbrs in self.adj)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


class GoodPair(NamedTuple):
    """Ordered pair ``(x, y)`` with ``N(x) ⊆ N(y)``; removing ``y`` dismantles Ind(G)."""

    x: int
    y: int


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise IndexError(f"vertex {v} out of range for n={G.n}")


def open_neighborhood(G: Graph, v: int) -> frozenset[int]:
    _check_vertex(G, v)
    return G.adj[v]


def closed_neighborhood(G: Graph, v: int) -> frozenset[int]:
    _check_vertex(G, v)
    return G.adj[v] | {v}


def complement(G: Graph) -> Graph:
    full = G.all_mask
    return Graph.from_masks((full & ~m) & ~(1 << v) for v, m in enumerate(G.masks))


def induced_subgraph(G: Graph, W: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[W]`` relabeled densely, with the old->new id map.

    New ids follow the increasing order of the old ones.
    """
    keep = sorted(set(W))
    for v in keep:
        _check_vertex(G, v)
    index = {old: new for new, old in enumerate(keep)}
    adj = tuple(frozenset(index[w] for w in G.adj[v] if w in index) for v in keep)
    return Graph(len(keep), adj), index


def relabel(G: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(G.n, ((perm[u], perm[v]) for u, v in G.edges()))


def random_relabel(G: Graph, rng: random.Random) -> tuple[Graph, list[int]]:
    perm = list(range(G.n))
    rng.shuffle(perm)
    return relabel(G, perm), perm


def component_masks(G: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as bitmasks, ordered by smallest vertex."""
    remaining = G.all_mask if within is None else within
    masks = G.masks
    out = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= masks[v]
            grow &= remaining & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        remaining &= ~comp
    return out


def connected_components(G: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in component_masks(G)]


def is_connected(G: Graph) -> bool:
    return len(component_masks(G)) <= 1


def is_matching(G: Graph) -> int | None:
    """Number of edges if every component is a single edge, else ``None``.

    The graph with no vertices counts as the matching with zero edges.
    """
    if any(len(nbrs) != 1 for nbrs in G.adj):
        return None
    return G.n // 2


def is_good_pair(G: Graph, x: int, y: int) -> bool:
    _check_vertex(G, x)
    _check_vertex(G, y)
    if x == y:
        return False
    mx = G.masks[x]
    return mx & ~G.masks[y] == 0


def enumerate_good_pairs(G: Graph) -> list[GoodPair]:
    """All good pairs, sorted by ``(y, x)``."""
    masks = G.masks
    return [
        GoodPair(x, y)
        for y in range(G.n)
        for x in range(G.n)
        if x != y and masks[x] & ~masks[y] == 0
    ]


def is_dominated_in_graph(G: Graph, u: int, u2: int) -> bool:
    """Closed-neighborhood domination ``N[u] ⊆ N[u2]`` (the cop-win notion)."""
    _check_vertex(G, u)
    _check_vertex(G, u2)
    if u == u2:
        raise ValueError("a vertex cannot dominate itself")
    closed_u = G.masks[u] | (1 << u)
    closed_u2 = G.masks[u2] | (1 << u2)
    return closed_u & ~closed_u2 == 0


def graph_dismantle_core(
    G: Graph, rng: random.Random | None = None
) -> tuple[Graph, list[int]]:
    """Remove closed-neighborhood-dominated vertices until none is left.

    The lowest-id dominated vertex goes first unless ``rng`` is given, in
    which case a uniformly random dominated vertex is removed. Returns the
    remaining induced subgraph (relabeled densely) and the removal order in
    original ids.
    """
    masks = list(G.masks)
    alive = G.all_mask
    removed: list[int] = []
    while True:
        dominated = []
        for u in bits(alive):
            cu = (masks[u] & alive) | (1 << u)
            for w in bits(alive & ~(1 << u)):
                if cu & ~((masks[w] & alive) | (1 << w)) == 0:
                    dominated.append(u)
                    break
            if dominated and rng is None:
                break
        if not dominated:
            break
        u = dominated[0] if rng is None else rng.choice(dominated)
        removed.append(u)
        alive &= ~(1 << u)
    core, _ = induced_subgraph(G, bits(alive))
    return core, removed


def is_cop_win(G: Graph) -> bool:
    core, _ = graph_dismantle_core(G)
    return core.n == 1


# -- isomorphism (small graphs only) -------------------------------------------


def fingerprint(G: Graph) -> tuple:
    """Isomorphism invariant: (n, m, sorted per-vertex (degree, neighbor degrees, triangles))."""
    masks = G.masks
    degs = [len(a) for a in G.adj]
    local = []
    for v in range(G.n):
        tri = sum(bin(masks[v] & masks[w]).count("1") for w in G.adj[v]) // 2
        local.append((degs[v], tuple(sorted(degs[w] for w in G.adj[v])), tri))
    return (G.n, G.m, tuple(sorted(local)))


def _vertex_signatures(G: Graph) -> list[tuple]:
    degs = [len(a) for a in G.adj]
    return [(degs[v], tuple(sorted(degs[w] for w in G.adj[v]))) for v in range(G.n)]


def _isomorphisms(G: Graph, H: Graph) -> Iterator[list[int]]:
    """Yield every edge-preserving bijection ``G -> H`` as a list ``phi[v]``."""
    if G.n != H.n or G.m != H.m:
        return
    sig_g = _vertex_signatures(G)
    sig_h = _vertex_signatures(H)
    if sorted(sig_g) != sorted(sig_h):
        return
    n = G.n
    # high-degree, constrained vertices first, then follow adjacency
    order: list[int] = []
    placed = 0
    while len(order) < n:
        best = max(
            (v for v in range(n) if not placed >> v & 1),
            key=lambda v: (bin(G.masks[v] & placed).count("1"), sig_g[v][0], -v),
        )
        order.append(best)
        placed |= 1 << best
    candidates = [[w for w in range(n) if sig_h[w] == sig_g[v]] for v in range(n)]
    phi = [-1] * n
    used = 0
    gm, hm = G.masks, H.masks

    def extend(i: int) -> Iterator[list[int]]:
        nonlocal used
        if i == n:
            yield list(phi)
            return
        v = order[i]
        for w in candidates[v]:
            if used >> w & 1:
                continue
            ok = True
            for j in range(i):
                a = order[j]
                if (gm[v] >> a & 1) != (hm[w] >> phi[a] & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            yield from extend(i + 1)
            used &= ~(1 << w)
            phi[v] = -1

    yield from extend(0)


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n > ISO_LIMIT or H.n > ISO_LIMIT:
        raise ValueError(f"isomorphism test limited to {ISO_LIMIT} vertices")
    return next(_isomorphisms(G, H), None) is not None


def automorphism_count(G: Graph) -> int:
    if G.n > ISO_LIMIT:
        raise ValueError(f"isomorphism test limited to {ISO_LIMIT} vertices")
    return sum(1 for _ in _isomorphisms(G, G))


def degree_multiset(G: Graph) -> tuple[int, ...]:
    return tuple(sorted(Counter(len(a) for a in G.adj).elements()))


# -- small named graphs --------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def matching_graph(k: int) -> Graph:
    return Graph.from_edges(2 * k, ((2 * i, 2 * i + 1) for i in range(k)))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges())
        offset += H.n
    return Graph.from_edges(offset, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(
        n, ((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p)
    )


# -- edge-list text format -----------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines are comments."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("missing header line 'n m'")
    lineno, head = rows[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected 'n m', got {' '.join(head)!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative counts")
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, toks in body:
        try:
            u, v = (int(t) for t in toks)
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected 'u v'") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range [0, {n})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"
