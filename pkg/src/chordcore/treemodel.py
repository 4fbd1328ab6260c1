"""Tree models of chordal graphs, rooted variants, and the rooted good-pair search.

A tree model is a tree of bags; each graph vertex occupies a connected set
of nodes and two vertices are adjacent exactly when some bag holds both.
Bags keep the labels of the graph they model, so restricted and contracted
models are validated against ``G`` together with the surviving vertex set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .graph import Graph, GoodPair, bits, component_masks, induced_subgraph, is_good_pair


class TreeModelFormatError(ValueError):
    pass


@dataclass(frozen=True)
class TreeModel:
    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.bags)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in self.bags]
        for a, b in self.tree_edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return tuple(tuple(sorted(x)) for x in nbrs)

    def nodes_of(self, v: int) -> list[int]:
        """The ``v``-nodes: indices of bags containing ``v``."""
        return [i for i, bag in enumerate(self.bags) if v in bag]

    def labels(self) -> frozenset[int]:
        return frozenset().union(*self.bags) if self.bags else frozenset()


@dataclass(frozen=True)
class RootedTreeModel:
    model: TreeModel
    root: int

    def __post_init__(self) -> None:
        if not 0 <= self.root < self.model.size:
            raise ValueError(f"root {self.root} is not a node of the model")

    @cached_property
    def parent(self) -> tuple[int, ...]:
        """BFS parent pointers toward the root (root maps to itself)."""
        par = [-1] * self.model.size
        par[self.root] = self.root
        queue = deque([self.root])
        while queue:
            a = queue.popleft()
            for b in self.model.neighbors[a]:
                if par[b] < 0:
                    par[b] = a
                    queue.append(b)
        return tuple(par)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        dist = [-1] * self.model.size
        dist[self.root] = 0
        queue = deque([self.root])
        while queue:
            a = queue.popleft()
            for b in self.model.neighbors[a]:
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    queue.append(b)
        return tuple(dist)

    def path_to_root(self, node: int) -> list[int]:
        path = [node]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        return path


def tree_model_violation(
    T: TreeModel, G: Graph, vertices: Iterable[int] | None = None
) -> str | None:
    """First violated tree-model condition, or ``None`` if ``T`` models ``G[vertices]``."""
    k = T.size
    if k == 0:
        return "tree has no nodes"
    if len(T.tree_edges) != k - 1:
        return f"tree has {len(T.tree_edges)} edges for {k} nodes"
    for a, b in T.tree_edges:
        if not (0 <= a < k and 0 <= b < k) or a == b:
            return f"bad tree edge {a}-{b}"
    seen = {0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b in T.neighbors[a]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    if len(seen) != k:
        return "node adjacency is not connected"
    keep = set(range(G.n)) if vertices is None else set(vertices)
    stray = T.labels() - keep
    if stray:
        return f"bags mention vertices outside the graph: {sorted(stray)}"
    for v in sorted(keep):
        nodes = T.nodes_of(v)
        if not nodes:
            return f"vertex {v} appears in no bag"
        node_set = set(nodes)
        reach = {nodes[0]}
        queue = deque([nodes[0]])
        while queue:
            a = queue.popleft()
            for b in T.neighbors[a]:
                if b in node_set and b not in reach:
                    reach.add(b)
                    queue.append(b)
        if reach != node_set:
            return f"nodes of vertex {v} do not form a subtree"
    shared = set()
    for bag in T.bags:
        shared.update(combinations(sorted(bag), 2))
    for u, v in combinations(sorted(keep), 2):
        if G.has_edge(u, v) != ((u, v) in shared):
            if G.has_edge(u, v):
                return f"edge {u}-{v} has no common node"
            return f"non-edge {u}-{v} shares a node"
    return None


def validate_tree_model(T: TreeModel, G: Graph, vertices: Iterable[int] | None = None) -> bool:
    return tree_model_violation(T, G, vertices) is None


def clique_tree(G: Graph) -> TreeModel:
    """Clique tree of a chordal graph.

    Bags are the maximal cliques, joined by a maximum-weight spanning tree
    on intersection sizes. Components are linked through one empty connector
    bag appended at the end.
    """
    from .chordal import is_chordal, mcs_order

    if not is_chordal(G):
        raise ValueError("clique tree requires a chordal graph")
    if G.n == 0:
        return TreeModel((frozenset(),), ())
    peo = mcs_order(G)[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    candidates = {
        frozenset([v, *(w for w in G.adj[v] if pos[w] > pos[v])]) for v in peo
    }
    cliques = [c for c in candidates if not any(c < d for d in candidates)]
    cliques.sort(key=lambda c: sorted(c))
    k = len(cliques)
    weighted = sorted(
        (-len(cliques[i] & cliques[j]), i, j)
        for i, j in combinations(range(k), 2)
        if cliques[i] & cliques[j]
    )
    leader = list(range(k))

    def find(a: int) -> int:
        while leader[a] != a:
            leader[a] = leader[leader[a]]
            a = leader[a]
        return a

    edges = []
    for _, i, j in weighted:
        ri, rj = find(i), find(j)
        if ri != rj:
            leader[max(ri, rj)] = min(ri, rj)
            edges.append((i, j))
    roots = sorted({find(i) for i in range(k)})
    bags = list(cliques)
    if len(roots) > 1:
        hub = len(bags)
        bags.append(frozenset())
        edges.extend((r, hub) for r in roots)
    return TreeModel(tuple(bags), tuple(edges))


def restrict(T: TreeModel, W: Iterable[int]) -> TreeModel:
    keep = frozenset(W)
    return TreeModel(tuple(bag & keep for bag in T.bags), T.tree_edges)


def contract(T: TreeModel, u: int, G: Graph) -> RootedTreeModel:
    """Merge all ``u``-nodes into one empty root node and erase ``N_G[u]``.

    The merged node gets index 0; the other nodes keep their relative order.
    """
    u_nodes = set(T.nodes_of(u))
    if not u_nodes:
        raise ValueError(f"vertex {u} appears in no bag")
    erase = G.adj[u] | {u}
    index = {}
    bags = [frozenset()]
    for i, bag in enumerate(T.bags):
        if i in u_nodes:
            index[i] = 0
        else:
            index[i] = len(bags)
            bags.append(bag - erase)
    edges = set()
    for a, b in T.tree_edges:
        na, nb = index[a], index[b]
        if na != nb:
            edges.add((min(na, nb), max(na, nb)))
    return RootedTreeModel(TreeModel(tuple(bags), tuple(sorted(edges))), 0)


def min_depth(T: RootedTreeModel, v: int) -> int:
    """Smallest tree distance from a ``v``-node to the root."""
    nodes = T.model.nodes_of(v)
    if not nodes:
        raise ValueError(f"vertex {v} appears in no bag")
    return min(T.depth[i] for i in nodes)


def is_tr_good(T: RootedTreeModel, G: Graph, x: int, y: int) -> bool:
    """Good pair whose every ``x``-node reaches the root through a ``y``-node."""
    if not is_good_pair(G, x, y):
        return False
    bags = T.model.bags
    for node in T.model.nodes_of(x):
        if not any(y in bags[a] for a in T.path_to_root(node)):
            return False
    return True


def enumerate_tr_good_pairs(
    T: RootedTreeModel, G: Graph, vertices: Iterable[int] | None = None
) -> list[GoodPair]:
    """All rooted-good pairs of ``G[vertices]``, sorted by ``(y, x)``."""
    sub, index = induced_subgraph(G, range(G.n) if vertices is None else vertices)
    back = {new: old for old, new in index.items()}
    relabeled = RootedTreeModel(_relabel_model(T.model, index), T.root)
    out = []
    for y in range(sub.n):
        for x in range(sub.n):
            if x != y and is_tr_good(relabeled, sub, x, y):
                out.append(GoodPair(back[x], back[y]))
    return out


def find_tr_good_pair(G: Graph, T: RootedTreeModel) -> GoodPair:
    """Rooted-good pair in a connected chordal graph with contractible Ind(G).

    Peeling vertex ``u`` closest to the root (ties to the lowest id); among
    the components of ``G - N[u]`` pick the first with contractible
    independence complex; an isolated one yields ``(x, u)``, a larger one is
    searched recursively under the contracted, restricted model.
    """
    from .chordal import is_chordal
    from .dismantle import is_contractible_chordal

    if G.n < 2:
        raise ValueError("need at least two vertices")
    if len(component_masks(G)) != 1:
        raise ValueError("graph must be connected")
    if not is_chordal(G):
        raise ValueError("graph must be chordal")
    if not is_contractible_chordal(G):
        raise ValueError("independence complex is not contractible")
    return _search(G, G.all_mask, T)


def _search(G: Graph, alive: int, T: RootedTreeModel) -> GoodPair:
    from .chordal import peeling_vertices
    from .dismantle import is_contractible_chordal

    peeling = peeling_vertices(G, alive)
    if not peeling:
        raise RuntimeError("connected chordal graph without a peeling vertex")
    u = min(peeling, key=lambda v: (min_depth(T, v), v))
    rest = alive & ~(G.masks[u] | (1 << u))
    for comp in component_masks(G, rest):
        sub, _ = induced_subgraph(G, bits(comp))
        if not is_contractible_chordal(sub):
            continue
        if comp & (comp - 1) == 0:
            return GoodPair(comp.bit_length() - 1, u)
        inner = contract(T.model, u, G)
        return _search(G, comp, RootedTreeModel(restrict(inner.model, bits(comp)), inner.root))
    raise RuntimeError(
        f"no component of G - N[{u}] has contractible independence complex; "
        "the input violates the preconditions or the search is broken"
    )


def _relabel_model(T: TreeModel, index: dict[int, int]) -> TreeModel:
    return TreeModel(
        tuple(frozenset(index[v] for v in bag if v in index) for bag in T.bags),
        T.tree_edges,
    )


# -- text format ---------------------------------------------------------------


def parse_tree_model(text: str) -> TreeModel:
    """Node count, one bag per line (``-`` for empty), then ``k-1`` edge lines."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise TreeModelFormatError("missing node count")
    try:
        k = int(lines[0])
    except ValueError:
        raise TreeModelFormatError(f"bad node count {lines[0]!r}") from None
    if k < 1 or len(lines) != 1 + k + (k - 1):
        raise TreeModelFormatError(f"expected {k} bag lines and {k - 1} edge lines")
    bags = []
    for line in lines[1 : 1 + k]:
        if line == "-":
            bags.append(frozenset())
        else:
            try:
                bags.append(frozenset(int(t) for t in line.split()))
            except ValueError:
                raise TreeModelFormatError(f"bad bag line {line!r}") from None
    edges = []
    for line in lines[1 + k :]:
        try:
            a, b = (int(t) for t in line.split())
        except ValueError:
            raise TreeModelFormatError(f"bad edge line {line!r}") from None
        edges.append((a, b))
    return TreeModel(tuple(bags), tuple(edges))


def format_tree_model(T: TreeModel) -> str:
    out = [str(T.size)]
    out.extend(" ".join(map(str, sorted(bag))) if bag else "-" for bag in T.bags)
    out.extend(f"{a} {b}" for a, b in T.tree_edges)
    return "\n".join(out) + "\n"
