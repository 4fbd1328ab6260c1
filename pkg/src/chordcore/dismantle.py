"""Good-pair dismantling of independence complexes: cores, certificates, decisions.

Removing ``y`` from a good pair ``(x, y)`` (``N(x) ⊆ N(y)``) is an elementary
dismantling of Ind(G). For chordal graphs the core decides contractibility
(a single vertex) and single-sphere type (a matching ``M_k``).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Any, NamedTuple

from . import kernels
from ._pykernels import _dominated_by
from .chordal import is_chordal
from .graph import (
    Graph,
    bits,
    component_masks,
    enumerate_good_pairs,
    induced_subgraph,
    is_matching,
)


class NotChordalError(ValueError):
    """The contractibility and sphere criteria are only valid for chordal graphs."""


class DismantleStep(NamedTuple):
    removed: int
    witness: int


@dataclass(frozen=True)
class DismantleCertificate:
    """Dismantling steps in original labels and the taut core they reach.

    ``core`` is relabeled densely; ``core_labels[i]`` is the original id of
    core vertex ``i``.
    """

    steps: tuple[DismantleStep, ...]
    core: Graph
    core_labels: tuple[int, ...]

    def core_edges(self) -> list[list[int]]:
        lab = self.core_labels
        return [[lab[u], lab[v]] for u, v in self.core.edges()]

    def to_dict(self) -> dict[str, Any]:
        return {
            "certificate": [{"removed": s.removed, "witness": s.witness} for s in self.steps],
            "core": {
                "n": self.core.n,
                "vertices": list(self.core_labels),
                "edges": self.core_edges(),
            },
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any], G: Graph) -> "DismantleCertificate":
        """Rebuild a certificate read from JSON; the core is induced from ``G``."""
        steps = tuple(DismantleStep(int(s["removed"]), int(s["witness"])) for s in data["certificate"])
        labels = tuple(int(v) for v in data["core"]["vertices"])
        if any(not 0 <= v < G.n for v in labels) or len(set(labels)) != len(labels):
            raise ValueError("core vertices out of range or repeated")
        core, _ = induced_subgraph(G, labels)
        claimed = sorted(tuple(sorted(e)) for e in data["core"].get("edges", []))
        lab = sorted(labels)
        actual = sorted((lab[u], lab[v]) for u, v in core.edges())
        if claimed != actual or int(data["core"].get("n", len(labels))) != len(labels):
            raise ValueError("core edges do not match the induced subgraph")
        return cls(steps, core, tuple(lab))


def _finish(G: Graph, steps: list[tuple[int, int]]) -> DismantleCertificate:
    removed = 0
    for y, _ in steps:
        removed |= 1 << y
    labels = tuple(bits(G.all_mask & ~removed))
    core_graph, _ = induced_subgraph(G, labels)
    return DismantleCertificate(
        tuple(DismantleStep(y, x) for y, x in steps), core_graph, labels
    )


def core(G: Graph, seed: int | None = None) -> DismantleCertificate:
    """Dismantle ``G`` until no good pair remains.

    With ``seed=None`` the smallest pair by ``(y, x)`` is taken each time
    (reproducible certificates, compiled kernel when available); with an
    integer seed each step picks uniformly among all current good pairs.
    """
    if seed is None:
        return _finish(G, kernels.dismantle_lex(list(G.masks)))
    return _finish(G, _dismantle_seeded(list(G.masks), random.Random(seed)))


def _dismantle_seeded(masks: list[int], rng: random.Random) -> list[tuple[int, int]]:
    n = len(masks)
    adj = list(masks)
    alive = (1 << n) - 1
    dom = [_dominated_by(x, adj, alive) for x in range(n)]
    steps = []
    while True:
        total = sum(bin(d).count("1") for d in dom)
        if total == 0:
            return steps
        pick = rng.randrange(total)
        for x in range(n):
            c = bin(dom[x]).count("1")
            if pick < c:
                y = list(bits(dom[x]))[pick]
                break
            pick -= c
        steps.append((y, x))
        ybit = 1 << y
        alive &= ~ybit
        nbrs = adj[y]
        adj[y] = 0
        dom[y] = 0
        for v in range(n):
            dom[v] &= ~ybit
        for v in bits(nbrs):
            adj[v] &= ~ybit
        for v in bits(nbrs):
            dom[v] = _dominated_by(v, adj, alive)


@dataclass
class CertificateCheck:
    ok: bool
    bad_step: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(G: Graph, cert: DismantleCertificate) -> CertificateCheck:
    """Replay ``cert`` on ``G``.

    ``bad_step`` is the index of the first invalid step, or ``len(steps)``
    when the steps are fine but the end state is wrong.
    """
    masks = G.masks
    alive = G.all_mask
    for i, (y, x) in enumerate(cert.steps):
        if not (0 <= x < G.n and 0 <= y < G.n) or x == y:
            return CertificateCheck(False, i, "vertex out of range or witness equals removed vertex")
        if not (alive >> x & 1 and alive >> y & 1):
            return CertificateCheck(False, i, "vertex already removed")
        if masks[x] & alive & ~masks[y]:
            return CertificateCheck(False, i, f"N({x}) is not contained in N({y})")
        alive &= ~(1 << y)
    end = len(cert.steps)
    if tuple(bits(alive)) != tuple(sorted(cert.core_labels)):
        return CertificateCheck(False, end, "remaining vertices differ from the stated core")
    expected, _ = induced_subgraph(G, bits(alive))
    if expected != cert.core:
        return CertificateCheck(False, end, "stated core graph differs from the induced subgraph")
    if enumerate_good_pairs(expected):
        return CertificateCheck(False, end, "core still has a good pair")
    return CertificateCheck(True)


def is_taut(G: Graph) -> bool:
    return not enumerate_good_pairs(G)


def _require_chordal(G: Graph) -> None:
    if not is_chordal(G):
        raise NotChordalError("input graph is not chordal")


def is_contractible_chordal(G: Graph, unsafe: bool = False) -> bool:
    """Ind(G) contractible, decided by dismantling to a single vertex.

    With ``unsafe=True`` non-chordal input is accepted and the answer only
    means "dismantlable".
    """
    if not unsafe:
        _require_chordal(G)
    return core(G).core.n == 1


def contractible_by_components(G: Graph) -> bool:
    """Same answer as :func:`is_contractible_chordal`, deciding each component on its own.

    Ind of a disjoint union is the join of the parts, contractible as soon
    as one part is.
    """
    _require_chordal(G)
    for comp in component_masks(G):
        sub, _ = induced_subgraph(G, bits(comp))
        if core(sub).core.n == 1:
            return True
    return False


@dataclass(frozen=True)
class SphereClassification:
    kind: str  # "contractible" | "sphere" | "other"
    k: int | None
    core_size: int

    def describe(self) -> str:
        if self.kind == "sphere":
            return f"S^{self.k - 1}"
        return self.kind


def classify_from_core(core_graph: Graph) -> SphereClassification:
    if core_graph.n == 1:
        return SphereClassification("contractible", None, 1)
    k = is_matching(core_graph)
    if k is not None:
        return SphereClassification("sphere", k, core_graph.n)
    return SphereClassification("other", None, core_graph.n)


def classify_sphere_chordal(G: Graph) -> SphereClassification:
    """Contractible, ``Ind(G) ≃ S^(k-1)`` (core is ``M_k``), or some other wedge."""
    _require_chordal(G)
    return classify_from_core(core(G).core)


@dataclass
class DecisionReport:
    chordal: bool
    classification: str
    k: int | None
    certificate: DismantleCertificate | None
    dismantlable: bool | None = None
    betti: list[int] | None = None
    betti_minus1: int | None = None
    timings_ms: dict[str, float] = field(default_factory=dict)

    def to_dict(self, timings: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {"chordal": self.chordal, "classification": self.classification}
        if self.k is not None:
            out["k"] = self.k
        if self.dismantlable is not None:
            out["dismantlable"] = self.dismantlable
        if self.certificate is not None:
            cert = self.certificate.to_dict()
            out["core"] = cert["core"]
            out["certificate"] = cert["certificate"]
        if self.betti is not None:
            out["betti"] = self.betti
            out["betti_minus1"] = self.betti_minus1
        if timings:
            out["elapsed_ms"] = round(sum(self.timings_ms.values()), 3)
            out["timings_ms"] = {k: round(v, 3) for k, v in self.timings_ms.items()}
        return out


def decide(
    G: Graph,
    seed: int | None = None,
    oracle: bool = False,
    unsafe: bool = False,
) -> DecisionReport:
    """Chordality check, dismantling certificate and classification in one report.

    Non-chordal graphs are reported as ``unknown(non-chordal)``; with
    ``unsafe`` they are still dismantled and only ``dismantlable`` is stated.
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    chordal = is_chordal(G)
    timings["chordality"] = (time.perf_counter() - t0) * 1e3
    cert = None
    kind, k, dismantlable = "unknown(non-chordal)", None, None
    if chordal or unsafe:
        t0 = time.perf_counter()
        cert = core(G, seed)
        timings["dismantle"] = (time.perf_counter() - t0) * 1e3
        if chordal:
            cls = classify_from_core(cert.core)
            kind, k = cls.kind, cls.k
        else:
            dismantlable = cert.core.n == 1
    report = DecisionReport(chordal, kind, k, cert, dismantlable, timings_ms=timings)
    if oracle:
        from .complex import independence_complex
        from .homology import reduced_betti

        t0 = time.perf_counter()
        sig = reduced_betti(independence_complex(G))
        timings["oracle"] = (time.perf_counter() - t0) * 1e3
        report.betti = list(sig.betti_nonneg)
        report.betti_minus1 = sig.reduced(-1)
    return report
