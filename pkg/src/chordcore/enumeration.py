"""Exhaustive small-graph catalogs up to isomorphism.

Classes on ``n`` vertices are grown from the classes on ``n - 1``: every
graph arises by adding one vertex to an induced subgraph, and every chordal
graph by adding a simplicial vertex (a new vertex joined to a clique).
Candidates are bucketed by :func:`fingerprint` and deduplicated with the
backtracking isomorphism test.

Each class records its orbit size ``n!/|Aut|``, the number of labeled graphs
it stands for, so a sweep over classes is a sweep over all labeled graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

from .graph import Graph, are_isomorphic, automorphism_count, bits, fingerprint

CLASS_LIMIT = 8

# labeled chordal graphs on n vertices, n = 0..8 (OEIS A058862, with n = 0 added)
LABELED_CHORDAL_COUNTS = (1, 1, 2, 8, 61, 822, 18154, 617675, 30888596)


@dataclass(frozen=True)
class GraphClass:
    graph: Graph
    automorphisms: int

    @property
    def labeled_count(self) -> int:
        return factorial(self.graph.n) // self.automorphisms


def _cliques(G: Graph) -> Iterator[int]:
    """Every clique of ``G`` as a bitmask, the empty one included."""
    masks = G.masks

    def grow(current: int, allowed: int) -> Iterator[int]:
        yield current
        for v in bits(allowed):
            allowed &= ~(1 << v)
            yield from grow(current | (1 << v), allowed & masks[v])

    yield from grow(0, G.all_mask)


def _extend(G: Graph, nbr_mask: int) -> Graph:
    n = G.n
    masks = [m | ((nbr_mask >> v & 1) << n) for v, m in enumerate(G.masks)]
    masks.append(nbr_mask)
    return Graph.from_masks(masks)


def _dedupe(candidates: Iterator[Graph]) -> list[Graph]:
    buckets: dict[tuple, list[Graph]] = {}
    out = []
    for H in candidates:
        bucket = buckets.setdefault(fingerprint(H), [])
        if any(are_isomorphic(H, K) for K in bucket):
            continue
        bucket.append(H)
        out.append(H)
    return out


@lru_cache(maxsize=None)
def _graph_reps(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    prev = _graph_reps(n - 1)
    return tuple(_dedupe(_extend(G, s) for G in prev for s in range(1 << G.n)))


@lru_cache(maxsize=None)
def _chordal_reps(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    prev = _chordal_reps(n - 1)
    return tuple(_dedupe(_extend(G, c) for G in prev for c in _cliques(G)))


def _classes(reps: tuple[Graph, ...]) -> list[GraphClass]:
    return [GraphClass(G, automorphism_count(G)) for G in reps]


def graph_classes(n: int) -> list[GraphClass]:
    """One representative per isomorphism class of graphs on ``n`` vertices."""
    if not 0 <= n <= CLASS_LIMIT:
        raise ValueError(f"n must be in [0, {CLASS_LIMIT}]")
    return _classes(_graph_reps(n))


def chordal_classes(n: int) -> list[GraphClass]:
    """One representative per isomorphism class of chordal graphs on ``n`` vertices."""
    if not 0 <= n <= CLASS_LIMIT:
        raise ValueError(f"n must be in [0, {CLASS_LIMIT}]")
    reps = _chordal_reps(n)
    return _classes(reps)


def chordal_classes_upto(n_max: int, n_min: int = 0) -> Iterator[GraphClass]:
    for n in range(n_min, n_max + 1):
        yield from chordal_classes(n)
