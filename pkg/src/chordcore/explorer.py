"""Catalogs of taut chordal graphs, forest cores, and named fixture graphs."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .chordal import random_forest
from .complex import independence_complex
from .dismantle import core, is_taut
from .enumeration import CLASS_LIMIT, chordal_classes
from .graph import Graph, disjoint_union, complete_graph, is_matching, matching_graph, path_graph
from .homology import HomotopySignature, reduced_betti


def paper_fixtures() -> dict[str, Graph]:
    """Named fixture graphs available to every CLI subcommand via ``--fixture``."""
    fixtures = {
        "k1": complete_graph(1),
        "k3_k2": disjoint_union(complete_graph(3), complete_graph(2)),
        "triangle_chain_7": Graph.from_edges(
            7,
            [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)],
        ),
    }
    for k in range(1, 5):
        fixtures[f"m{k}"] = matching_graph(k)
    for n in range(2, 8):
        fixtures[f"p{n}"] = path_graph(n)
    return fixtures


def fixture(name: str) -> Graph:
    table = paper_fixtures()
    if name not in table:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(table))}")
    return table[name]


@dataclass
class CatalogEntry:
    signature: HomotopySignature
    graphs: list[Graph] = field(default_factory=list)
    labeled_count: int = 0

    @property
    def class_count(self) -> int:
        return len(self.graphs)


def taut_catalog(n_max: int) -> dict[HomotopySignature, CatalogEntry]:
    """Taut chordal graphs with at most ``n_max`` vertices, grouped by signature.

    Graphs are isomorphism-class representatives; ``labeled_count`` adds up
    the labeled graphs each class stands for. ``n = 0`` is included (its
    complex is ``S^-1``).
    """
    if n_max > CLASS_LIMIT:
        raise ValueError(f"n_max must be <= {CLASS_LIMIT}")
    catalog: dict[HomotopySignature, CatalogEntry] = {}
    for n in range(n_max + 1):
        for cls in chordal_classes(n):
            G = cls.graph
            if not is_taut(G):
                continue
            sig = reduced_betti(independence_complex(G))
            entry = catalog.setdefault(sig, CatalogEntry(sig))
            entry.graphs.append(G)
            entry.labeled_count += cls.labeled_count
    return dict(sorted(catalog.items(), key=lambda kv: (kv[0].total, len(kv[0].betti), kv[0].betti)))


def catalog_to_dict(catalog: dict[HomotopySignature, CatalogEntry]) -> list[dict]:
    return [
        {
            "signature": entry.signature.label(),
            "betti_minus1": entry.signature.reduced(-1),
            "betti": list(entry.signature.betti_nonneg),
            "classes": entry.class_count,
            "labeled": entry.labeled_count,
            "graphs": [{"n": G.n, "edges": [list(e) for e in G.edges()]} for G in entry.graphs],
        }
        for entry in catalog.values()
    ]


@dataclass
class ForestReport:
    trials: int
    outcomes: Counter
    violations: list[Graph]

    @property
    def ok(self) -> bool:
        return not self.violations


def forest_core_check(trials: int, n: int, seed: int) -> ForestReport:
    """Dismantle random forests on 1..n vertices; cores must be ``K_1`` or ``M_k``."""
    rng = random.Random(seed)
    outcomes: Counter = Counter()
    violations = []
    for _ in range(trials):
        F = random_forest(rng.randint(1, n), rng)
        c = core(F).core
        if c.n == 1:
            outcomes["K1"] += 1
            continue
        k = is_matching(c)
        if k is None:
            violations.append(F)
        else:
            outcomes[f"M{k}"] += 1
    return ForestReport(trials, outcomes, violations)


def s0_wedge_check(n_max: int) -> dict[int, list[Graph]]:
    """Taut chordal graphs whose complex is a wedge of ``m`` copies of ``S^0``.

    Keyed by ``m``; ``m = 0`` holds the contractible ones.
    """
    out: dict[int, list[Graph]] = {}
    for sig, entry in taut_catalog(n_max).items():
        if sig.is_contractible:
            out.setdefault(0, []).extend(entry.graphs)
        elif len(sig.betti) == 2 and sig.betti[0] == 0:
            out.setdefault(sig.betti[1], []).extend(entry.graphs)
    return dict(sorted(out.items()))
