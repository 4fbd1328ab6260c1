"""Pure-Python kernels; same contract as the compiled ``_kernels`` module.

Vertex sets are Python integers used as bitsets.
"""

from __future__ import annotations


def _dominated_by(x: int, adj: list[int], alive: int) -> int:
    """Alive ``y != x`` with ``N(x) ⊆ N(y)``: the intersection of ``N(z)`` over ``z`` in ``N(x)``."""
    acc = alive
    nx = adj[x]
    while nx:
        low = nx & -nx
        acc &= adj[low.bit_length() - 1]
        nx ^= low
    return acc & ~(1 << x)


def dismantle_lex(masks: list[int]) -> list[tuple[int, int]]:
    """Greedy good-pair dismantling, always removing the smallest ``(y, x)``.

    Returns the steps as ``(removed, witness)``. Only witnesses adjacent to
    the removed vertex can gain new dominated vertices, so only those are
    recomputed after a step; every other witness just forgets ``y``.
    """
    n = len(masks)
    adj = list(masks)
    alive = (1 << n) - 1
    dom = [_dominated_by(x, adj, alive) for x in range(n)]
    steps = []
    while True:
        union = 0
        for x in range(n):
            union |= dom[x]
        if not union:
            return steps
        y = (union & -union).bit_length() - 1
        ybit = 1 << y
        x = 0
        while not dom[x] & ybit:
            x += 1
        steps.append((y, x))
        alive &= ~ybit
        nbrs = adj[y]
        dom[y] = 0
        adj[y] = 0
        for v in range(n):
            if dom[v] & ybit:
                dom[v] &= ~ybit
        rest = nbrs
        while rest:
            low = rest & -rest
            adj[low.bit_length() - 1] &= ~ybit
            rest ^= low
        rest = nbrs
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            dom[v] = _dominated_by(v, adj, alive)
            rest ^= low


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of a matrix given as row bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            basis = pivots.get(lead)
            if basis is None:
                pivots[lead] = row
                rank += 1
                break
            row ^= basis
    return rank
