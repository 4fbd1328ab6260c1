"""Reduced Betti numbers by brute-force linear algebra, and the peeling recursion.

The two routes share nothing with the dismantling engine: one ranks boundary
matrices of the full face poset, the other splits Ind(G) at peeling vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .chordal import is_chordal, peeling_vertices, simplicial_vertices
from .complex import SimplicialComplex
from .graph import Graph, bits

DEFAULT_FACE_BUDGET = 1 << 20


class FaceBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class HomotopySignature:
    """Reduced Betti numbers indexed from dimension -1 (trailing zeros trimmed).

    ``betti == ()`` means acyclic; for independence complexes of chordal
    graphs that is the same as contractible.
    """

    betti: tuple[int, ...]

    def __post_init__(self) -> None:
        b = tuple(self.betti)
        while b and b[-1] == 0:
            b = b[:-1]
        object.__setattr__(self, "betti", b)

    @classmethod
    def contractible(cls) -> "HomotopySignature":
        return cls(())

    @classmethod
    def sphere(cls, d: int) -> "HomotopySignature":
        """The ``d``-sphere, ``d >= -1``."""
        return cls((0,) * (d + 1) + (1,))

    @classmethod
    def from_nonneg(cls, betti: tuple[int, ...] | list[int], minus1: int = 0) -> "HomotopySignature":
        return cls((minus1, *betti))

    @property
    def kind(self) -> str:
        return "contractible" if not self.betti else "wedge"

    @property
    def is_contractible(self) -> bool:
        return not self.betti

    def reduced(self, d: int) -> int:
        i = d + 1
        return self.betti[i] if 0 <= i < len(self.betti) else 0

    @property
    def betti_nonneg(self) -> tuple[int, ...]:
        """Reduced Betti numbers from dimension 0 upward."""
        return self.betti[1:]

    @property
    def total(self) -> int:
        return sum(self.betti)

    def single_sphere_dim(self) -> int | None:
        """``d`` when the signature is exactly that of ``S^d``."""
        if self.total == 1:
            return self.betti.index(1) - 1
        return None

    def suspend(self) -> "HomotopySignature":
        if not self.betti:
            return self
        return HomotopySignature((0, *self.betti))

    def wedge(self, other: "HomotopySignature") -> "HomotopySignature":
        if self.reduced(-1) or other.reduced(-1):
            raise ValueError("wedge with the empty space is undefined")
        size = max(len(self.betti), len(other.betti))
        a = self.betti + (0,) * (size - len(self.betti))
        b = other.betti + (0,) * (size - len(other.betti))
        return HomotopySignature(tuple(x + y for x, y in zip(a, b)))

    def label(self) -> str:
        if not self.betti:
            return "contractible"
        parts = []
        for i, b in enumerate(self.betti):
            if b:
                sphere = f"S^{i - 1}"
                parts.append(sphere if b == 1 else f"{b}x{sphere}")
        return " v ".join(parts)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


def faces_by_dimension(
    K: SimplicialComplex, budget: int = DEFAULT_FACE_BUDGET
) -> list[list[tuple[int, ...]]]:
    """All faces (including the empty face) grouped by size, each group sorted."""
    by_size: list[set[tuple[int, ...]]] = [set() for _ in range(K.dimension + 2)]
    total = 0
    for facet in K.facets:
        f = tuple(sorted(facet))
        total += 1 << len(f)
        if total > 4 * budget:
            raise FaceBudgetExceeded("face enumeration over budget")
        for size in range(len(f) + 1):
            by_size[size].update(combinations(f, size))
    if sum(len(s) for s in by_size) > budget:
        raise FaceBudgetExceeded(f"complex has more than {budget} faces")
    return [sorted(s) for s in by_size]


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = [(v * inv) % p for v in rows[rank]]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            c = rows[i][col] % p
            if c:
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def boundary_rank(
    lower: list[tuple[int, ...]], upper: list[tuple[int, ...]], p: int = 2
) -> int:
    """Rank of the boundary map from faces ``upper`` to faces ``lower``."""
    if not lower or not upper:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    if p == 2:
        rows = []
        for f in upper:
            row = 0
            for j in range(len(f)):
                row |= 1 << index[f[:j] + f[j + 1 :]]
            rows.append(row)
        return kernels.gf2_rank(rows)
    dense = []
    for f in upper:
        row = [0] * len(lower)
        for j in range(len(f)):
            row[index[f[:j] + f[j + 1 :]]] = (-1) ** j % p
        dense.append(row)
    return _rank_mod_p(dense, p)


def reduced_betti(
    K: SimplicialComplex, field: int = 2, budget: int = DEFAULT_FACE_BUDGET
) -> HomotopySignature:
    """Reduced Betti numbers of ``K`` over GF(``field``).

    The augmented chain complex includes the empty face, so ``{∅}`` has
    ``b̃_{-1} = 1``.
    """
    if not _is_prime(field):
        raise ValueError(f"{field} is not prime")
    if K.is_void:
        raise ValueError("the void complex has no augmented chain complex")
    faces = faces_by_dimension(K, budget)
    # ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    ranks = [0] * (len(faces) + 1)
    for s in range(1, len(faces)):
        ranks[s] = boundary_rank(faces[s - 1], faces[s], field)
    betti = [len(faces[s]) - ranks[s] - ranks[s + 1] for s in range(len(faces))]
    return HomotopySignature(tuple(betti))


def wedge_decomposition(G: Graph) -> HomotopySignature:
    """Homotopy signature of Ind(G) for chordal ``G`` by splitting at peeling vertices.

    ``Ind(G) ≃ Ind(G - u) ∨ Σ Ind(G - N[u])`` for a peeling vertex ``u``;
    an isolated vertex makes Ind(G) a cone, no vertices gives ``S^-1``.
    """
    if not is_chordal(G):
        raise ValueError("wedge decomposition requires a chordal graph")
    return _peel(G, G.all_mask, {})


def _peel(G: Graph, alive: int, memo: dict[int, HomotopySignature]) -> HomotopySignature:
    hit = memo.get(alive)
    if hit is not None:
        return hit
    masks = G.masks
    if alive == 0:
        sig = HomotopySignature.sphere(-1)
    elif any(masks[v] & alive == 0 for v in bits(alive)):
        sig = HomotopySignature.contractible()
    else:
        u = min(peeling_vertices(G, alive))
        deleted = _peel(G, alive & ~(1 << u), memo)
        linked = _peel(G, alive & ~(masks[u] | (1 << u)), memo)
        sig = deleted.wedge(linked.suspend())
    memo[alive] = sig
    return sig


def wedge_via_simplicial(G: Graph, v: int) -> HomotopySignature:
    """``Ind(G) ≃ ⋁_{u ∈ N(v)} Σ Ind(G - N[u])`` for a simplicial ``v`` of degree >= 1."""
    if not is_chordal(G):
        raise ValueError("requires a chordal graph")
    if v not in simplicial_vertices(G) or not G.adj[v]:
        raise ValueError(f"{v} is not a simplicial vertex of positive degree")
    memo: dict[int, HomotopySignature] = {}
    masks = G.masks
    total = None
    for u in sorted(G.adj[v]):
        part = _peel(G, G.all_mask & ~(masks[u] | (1 << u)), memo).suspend()
        total = part if total is None else total.wedge(part)
    return total
