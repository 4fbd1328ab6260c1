"""Simplicial complexes stored by facets, with independence and clique complexes.

``SimplicialComplex(frozenset(), frozenset({frozenset()}))`` is the empty
complex {∅} (the (-1)-sphere); a complex with no facets at all is void.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, bits

EMPTY_FACET_TOKEN = "∅"


class ComplexFormatError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: frozenset[int]
    facets: frozenset[frozenset[int]]

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Complex generated by ``faces``; non-maximal ones are dropped."""
        facets = _maximal(frozenset(f) for f in faces)
        verts = frozenset().union(*facets) if facets else frozenset()
        return cls(verts, facets)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(frozenset(), frozenset({frozenset()}))

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(frozenset(), frozenset())

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(f)) for f in self.facets)

    def contains_face(self, face: Iterable[int]) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        return SimplicialComplex(
            frozenset(mapping[v] for v in self.vertices),
            frozenset(frozenset(mapping[v] for v in f) for f in self.facets),
        )

    def __repr__(self) -> str:
        return f"SimplicialComplex(facets={self.sorted_facets()})"


def _maximal(sets: Iterable[frozenset[int]]) -> frozenset[frozenset[int]]:
    by_size = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset[int]] = []
    for s in by_size:
        if not any(s <= t for t in kept):
            kept.append(s)
    return frozenset(kept)


def _maximal_compatible_sets(n: int, compatible: list[int]) -> list[int]:
    """Bron-Kerbosch with pivoting over a symmetric compatibility relation."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda w: bin(compatible[w] & p).count("1"))
        for v in bits(p & ~compatible[pivot]):
            expand(r | (1 << v), p & compatible[v], x & compatible[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, (1 << n) - 1, 0)
    return out


def clique_complex(G: Graph) -> SimplicialComplex:
    if G.n == 0:
        return SimplicialComplex.empty()
    facets = _maximal_compatible_sets(G.n, list(G.masks))
    return SimplicialComplex(
        frozenset(range(G.n)), frozenset(frozenset(bits(f)) for f in facets)
    )


def independence_complex(G: Graph) -> SimplicialComplex:
    """Complex of independent sets, facets = maximal independent sets."""
    if G.n == 0:
        return SimplicialComplex.empty()
    full = G.all_mask
    non_adjacent = [full & ~m & ~(1 << v) for v, m in enumerate(G.masks)]
    facets = _maximal_compatible_sets(G.n, non_adjacent)
    return SimplicialComplex(
        frozenset(range(G.n)), frozenset(frozenset(bits(f)) for f in facets)
    )


def _check_vertex(K: SimplicialComplex, v: int) -> None:
    if v not in K.vertices:
        raise ValueError(f"{v} is not a vertex of the complex")


def link(K: SimplicialComplex, v: int) -> SimplicialComplex:
    _check_vertex(K, v)
    return SimplicialComplex.from_faces(f - {v} for f in K.facets if v in f)


def delete(K: SimplicialComplex, v: int) -> SimplicialComplex:
    _check_vertex(K, v)
    return SimplicialComplex.from_faces(f - {v} for f in K.facets)


def is_dominated_in_complex(K: SimplicialComplex, u: int, u2: int) -> bool:
    """``lk(u)`` is a cone with apex ``u2``: every facet through ``u`` holds ``u2``."""
    if u == u2:
        raise ValueError("a vertex cannot dominate itself")
    _check_vertex(K, u)
    _check_vertex(K, u2)
    return all(u2 in f for f in K.facets if u in f)


def dominated_vertices(K: SimplicialComplex) -> list[tuple[int, int]]:
    """All ``(u, apex)`` with ``u`` dominated by ``apex``, sorted."""
    return [
        (u, w)
        for u in sorted(K.vertices)
        for w in sorted(K.vertices)
        if u != w and is_dominated_in_complex(K, u, w)
    ]


def complex_dismantle_core(K: SimplicialComplex) -> tuple[SimplicialComplex, list[int]]:
    """Delete dominated vertices (lowest first) until the complex is taut."""
    removed = []
    while True:
        dominated = dominated_vertices(K)
        if not dominated:
            return K, removed
        u = dominated[0][0]
        removed.append(u)
        K = delete(K, u)


def cross_polytope_boundary(k: int) -> SimplicialComplex:
    """Boundary of the ``k``-dimensional cross-polytope on vertices ``0..2k-1``.

    Antipodal pairs are ``{2i, 2i+1}``; a facet picks one vertex per pair.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    facets = []
    for choice in range(1 << k):
        facets.append(frozenset(2 * i + (choice >> i & 1) for i in range(k)))
    return SimplicialComplex(frozenset(range(2 * k)), frozenset(facets))


def parse_facets(text: str) -> SimplicialComplex:
    """One facet per line; ``∅`` marks the empty facet; ``#`` starts a comment."""
    faces = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == EMPTY_FACET_TOKEN:
            faces.append(frozenset())
            continue
        try:
            face = [int(t) for t in line.split()]
        except ValueError:
            raise ComplexFormatError(f"line {lineno}: bad facet {line!r}") from None
        if any(v < 0 for v in face) or len(set(face)) != len(face):
            raise ComplexFormatError(f"line {lineno}: bad facet {line!r}")
        faces.append(frozenset(face))
    return SimplicialComplex.from_faces(faces)


def format_facets(K: SimplicialComplex) -> str:
    lines = [" ".join(map(str, f)) if f else EMPTY_FACET_TOKEN for f in K.sorted_facets()]
    return "".join(line + "\n" for line in lines)
