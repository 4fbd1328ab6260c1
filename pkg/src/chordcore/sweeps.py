"""Exhaustive and randomized verification suites.

Each suite returns a :class:`SweepResult`; ``ok`` means zero mismatches.
Exhaustive suites run over isomorphism-class representatives (each
standing for ``n!/|Aut|`` labeled graphs, totals recorded in ``details``)
plus random relabelings of every representative, and over every labeled
graph for small ``n``.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .chordal import enumerate_chordal, is_chordal, random_chordal, simplicial_vertices
from .complex import clique_complex, delete, independence_complex, link
from .dismantle import (
    DismantleCertificate,
    DismantleStep,
    classify_sphere_chordal,
    core,
    decide,
    is_contractible_chordal,
    is_taut,
    verify_certificate,
)
from .enumeration import LABELED_CHORDAL_COUNTS, chordal_classes, graph_classes
from .explorer import forest_core_check, paper_fixtures, taut_catalog
from .graph import (
    ISO_LIMIT,
    Graph,
    are_isomorphic,
    bits,
    component_masks,
    degree_multiset,
    induced_subgraph,
    is_cop_win,
    is_matching,
    random_graph,
    random_relabel,
)
from .homology import reduced_betti, wedge_decomposition, wedge_via_simplicial
from .treemodel import RootedTreeModel, clique_tree, find_tr_good_pair, is_tr_good


@dataclass
class SweepResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f", {len(self.failures)} failure(s)" if self.failures else ""
        return f"[{status}] {self.name}: {self.cases} cases{extra}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "ok": self.ok,
            "cases": self.cases,
            "failures": self.failures[:20],
            "details": self.details,
        }


def _pmap(func: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * jobs))))


def _graph_key(G: Graph) -> str:
    return f"n={G.n} edges={G.edges()}"


def _chordal_corpus(n_max: int, relabelings: int, seed: int, labeled_max: int) -> tuple[list[Graph], dict]:
    """Class representatives, their random relabelings, and all labeled graphs up to ``labeled_max``."""
    rng = random.Random(seed)
    graphs: list[Graph] = []
    classes = labeled = 0
    for n in range(n_max + 1):
        for cls in chordal_classes(n):
            classes += 1
            labeled += cls.labeled_count
            graphs.append(cls.graph)
            for _ in range(relabelings):
                graphs.append(random_relabel(cls.graph, rng)[0])
    exhaustive = 0
    for G in enumerate_chordal(labeled_max):
        graphs.append(G)
        exhaustive += 1
    details = {
        "n_max": n_max,
        "classes": classes,
        "labeled_graphs_covered": labeled,
        "labeled_expected": sum(LABELED_CHORDAL_COUNTS[: n_max + 1]),
        "relabelings_per_class": relabelings,
        "labeled_exhaustive_n_max": labeled_max,
        "labeled_exhaustive_graphs": exhaustive,
    }
    return graphs, details


def _coverage_failures(details: dict) -> list[str]:
    if details["labeled_graphs_covered"] != details["labeled_expected"]:
        return [
            f"class orbits cover {details['labeled_graphs_covered']} labeled graphs, "
            f"expected {details['labeled_expected']}"
        ]
    return []


# -- contractibility and spheres -----------------------------------------------


def _contractibility_case(G: Graph) -> str | None:
    decided = is_contractible_chordal(G)
    sig = reduced_betti(independence_complex(G))
    if decided != sig.is_contractible:
        return f"{_graph_key(G)}: dismantling says {decided}, betti {sig.betti}"
    return None


def contractibility_sweep(n_max: int = 8, relabelings: int = 1, seed: int = 0,
                          labeled_max: int = 6, jobs: int = 1) -> SweepResult:
    """Dismantlable to a point iff all reduced Betti numbers vanish."""
    graphs, details = _chordal_corpus(n_max, relabelings, seed, labeled_max)
    res = SweepResult("contractible <=> acyclic (chordal)", len(graphs), details=details)
    res.failures = _coverage_failures(details)
    res.failures += [f for f in _pmap(_contractibility_case, graphs, jobs) if f]
    return res


def _sphere_case(G: Graph) -> str | None:
    cls = classify_sphere_chordal(G)
    sig = reduced_betti(independence_complex(G))
    dim = sig.single_sphere_dim()
    says_sphere = cls.kind == "sphere"
    if says_sphere != (dim is not None) or (says_sphere and cls.k - 1 != dim):
        return f"{_graph_key(G)}: classified {cls}, betti {sig.betti}"
    if is_taut(G) and dim is not None and is_matching(G) is None:
        return f"{_graph_key(G)}: taut single sphere that is not a matching"
    return None


def sphere_sweep(n_max: int = 8, relabelings: int = 1, seed: int = 0,
                 labeled_max: int = 6, jobs: int = 1) -> SweepResult:
    """Core is ``M_k`` iff the complex has the homology of ``S^(k-1)``."""
    graphs, details = _chordal_corpus(n_max, relabelings, seed, labeled_max)
    res = SweepResult("sphere(k) <=> single Betti 1 in dim k-1; taut spheres are M_k",
                      len(graphs), details=details)
    res.failures = _coverage_failures(details)
    res.failures += [f for f in _pmap(_sphere_case, graphs, jobs) if f]
    return res


# -- taut catalog --------------------------------------------------------------


def taut_contractible_sweep(n_max: int = 8) -> SweepResult:
    """In the taut catalog the only contractible graph is ``K_1``."""
    catalog = taut_catalog(n_max)
    res = SweepResult("taut + contractible => K_1", sum(e.class_count for e in catalog.values()))
    res.details = {"signatures": len(catalog)}
    contractible = [G for sig, e in catalog.items() if sig.is_contractible for G in e.graphs]
    for G in contractible:
        if G.n != 1:
            res.failures.append(f"{_graph_key(G)} is taut with contractible complex")
    if not any(G.n == 1 for G in contractible):
        res.failures.append("K_1 missing from the catalog")
    return res


# -- rooted good pairs ---------------------------------------------------------


def _rooted_case(G: Graph) -> tuple[int, list[str]]:
    if G.n < 2 or len(component_masks(G)) != 1 or not is_contractible_chordal(G):
        return 0, []
    T = clique_tree(G)
    failures = []
    for root in range(T.size):
        rooted = RootedTreeModel(T, root)
        try:
            x, y = find_tr_good_pair(G, rooted)
        except Exception as exc:  # noqa: BLE001 - every failure is a finding
            failures.append(f"{_graph_key(G)} root {root}: {exc!r}")
            continue
        if not is_tr_good(rooted, G, x, y):
            failures.append(f"{_graph_key(G)} root {root}: pair ({x},{y}) not rooted-good")
    return T.size, failures


def rooted_good_pair_sweep(n_max: int = 8, relabelings: int = 1, seed: int = 0,
                           labeled_max: int = 6, jobs: int = 1) -> SweepResult:
    """Every root of every clique tree yields a verified rooted-good pair."""
    graphs, details = _chordal_corpus(n_max, relabelings, seed, labeled_max)
    res = SweepResult("rooted good pair exists for every root", details=details)
    res.failures = _coverage_failures(details)
    graphs_checked = 0
    for roots, fails in _pmap(_rooted_case, graphs, jobs):
        res.cases += roots
        graphs_checked += roots > 0
        res.failures += fails
    res.details["graphs_checked"] = graphs_checked
    return res


# -- core confluence -----------------------------------------------------------


def confluence_sweep(graphs: int = 500, n_max: int = 40, policies: int = 10, seed: int = 0) -> SweepResult:
    """Cores from different random dismantling orders are isomorphic."""
    rng = random.Random(seed)
    res = SweepResult("core confluence across seeded policies", graphs)
    flagged = 0
    largest = 0
    for i in range(graphs):
        n = rng.randint(1, n_max)
        G, _ = random_chordal(n, rng.choice((0.3, 0.5, 0.7, 0.9)), rng.randrange(1 << 30))
        cores = [core(G).core] + [core(G, seed=s).core for s in range(policies)]
        ref = cores[0]
        largest = max(largest, ref.n)
        for other in cores[1:]:
            if ref.n <= ISO_LIMIT and other.n <= ISO_LIMIT:
                if not are_isomorphic(ref, other):
                    res.failures.append(f"graph {i} ({_graph_key(G)}): non-isomorphic cores")
                    break
            else:
                same = (ref.n, ref.m, degree_multiset(ref)) == (other.n, other.m, degree_multiset(other))
                if not same:
                    flagged += 1
                    res.failures.append(f"graph {i}: large cores differ in invariants")
                    break
    res.details = {"policies": policies, "largest_core": largest, "flagged": flagged}
    return res


# -- link / deletion / wedge identities ----------------------------------------


def _eq1_failures(G: Graph) -> list[str]:
    out = []
    ind = independence_complex(G)
    cl = clique_complex(G)
    for u in range(G.n):
        rest = [v for v in range(G.n) if v != u]
        sub, index = induced_subgraph(G, rest)
        back = {new: old for old, new in index.items()}
        if delete(ind, u) != independence_complex(sub).relabel(back):
            out.append(f"{_graph_key(G)}: deletion identity fails at {u}")
        far = [v for v in range(G.n) if v != u and v not in G.adj[u]]
        sub, index = induced_subgraph(G, far)
        back = {new: old for old, new in index.items()}
        if link(ind, u) != independence_complex(sub).relabel(back):
            out.append(f"{_graph_key(G)}: Ind link identity fails at {u}")
        sub, index = induced_subgraph(G, G.adj[u])
        back = {new: old for old, new in index.items()}
        if link(cl, u) != clique_complex(sub).relabel(back):
            out.append(f"{_graph_key(G)}: Cl link identity fails at {u}")
    return out


def _peel_case(G: Graph) -> list[str]:
    out = []
    peeled = wedge_decomposition(G)
    brute = reduced_betti(independence_complex(G))
    if peeled != brute:
        out.append(f"{_graph_key(G)}: peeling {peeled.betti} vs homology {brute.betti}")
    for v in sorted(simplicial_vertices(G)):
        if G.adj[v] and wedge_via_simplicial(G, v) != peeled:
            out.append(f"{_graph_key(G)}: simplicial split at {v} disagrees")
    return out


def identities_sweep(random_graphs: int = 200, n_max: int = 7, seed: int = 0,
                     labeled_max: int = 6, jobs: int = 1) -> SweepResult:
    """Link/deletion identities on random graphs, peeling and simplicial wedges on chordal ones."""
    rng = random.Random(seed)
    res = SweepResult("link/deletion identities and wedge decompositions")
    for _ in range(random_graphs):
        G = random_graph(rng.randint(1, 10), rng.random(), rng)
        res.failures += _eq1_failures(G)
        res.cases += 1
    graphs, details = _chordal_corpus(n_max, 1, seed, labeled_max)
    res.details = details
    res.failures += _coverage_failures(details)
    for fails in _pmap(_peel_case, graphs, jobs):
        res.failures += fails
    res.cases += len(graphs)
    return res


# -- chordal <=> hereditary cop-win --------------------------------------------


def _hereditary_cop_win(G: Graph) -> bool:
    for sub_mask in range(1, 1 << G.n):
        if len(component_masks(G, sub_mask)) != 1:
            continue
        sub, _ = induced_subgraph(G, bits(sub_mask))
        if not is_cop_win(sub):
            return False
    return True


def _copwin_case(G: Graph) -> str | None:
    if is_chordal(G) != _hereditary_cop_win(G):
        return f"{_graph_key(G)}: chordal={is_chordal(G)} but hereditary cop-win disagrees"
    return None


def cop_win_sweep(n_max: int = 7, labeled_max: int = 5, jobs: int = 1) -> SweepResult:
    """Chordal iff every connected induced subgraph is cop-win, all graphs up to ``n_max``."""
    from .chordal import all_labeled_graphs

    graphs: list[Graph] = []
    covered = 0
    for n in range(n_max + 1):
        for cls in graph_classes(n):
            graphs.append(cls.graph)
            covered += cls.labeled_count
    for n in range(labeled_max + 1):
        graphs.extend(all_labeled_graphs(n))
    res = SweepResult("chordal <=> hereditary cop-win", len(graphs))
    expected = sum(2 ** (n * (n - 1) // 2) for n in range(n_max + 1))
    res.details = {"n_max": n_max, "labeled_graphs_covered": covered, "labeled_expected": expected}
    if covered != expected:
        res.failures.append(f"class orbits cover {covered} graphs, expected {expected}")
    res.failures += [f for f in _pmap(_copwin_case, graphs, jobs) if f]
    return res


# -- fixtures and forests ------------------------------------------------------


def fixtures_sweep(forests: int = 1000, forest_n: int = 50, seed: int = 0) -> SweepResult:
    res = SweepResult("S^1 v S^1 fixtures and forest cores")
    fx = paper_fixtures()
    for name in ("k3_k2", "triangle_chain_7"):
        G = fx[name]
        sig = reduced_betti(independence_complex(G))
        res.cases += 1
        if not is_chordal(G):
            res.failures.append(f"{name} is not chordal")
        if not is_taut(G):
            res.failures.append(f"{name} is not taut")
        if sig.betti_nonneg != (0, 2) or sig.reduced(-1):
            res.failures.append(f"{name} has betti {sig.betti}")
    report = forest_core_check(forests, forest_n, seed)
    res.cases += report.trials
    res.failures += [f"forest core violation: {_graph_key(F)}" for F in report.violations]
    res.details = {"forest_outcomes": dict(sorted(report.outcomes.items()))}
    return res


# -- performance ---------------------------------------------------------------


def performance_sweep(sizes: Iterable[int] = (250, 500, 1000), fill: float = 0.7,
                      seed: int = 0, repeats: int = 3, limit_s: float = 30.0) -> SweepResult:
    """Time ``decide`` on random chordal graphs against a cubic growth model.

    ``c`` is fitted by least squares to ``t = c n^3`` on all sizes but the
    largest; the largest must not exceed twice the prediction nor ``limit_s``.
    """
    from . import kernels

    sizes = list(sizes)
    times = []
    for n in sizes:
        G, _ = random_chordal(n, fill, seed)
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            report = decide(G)
            best = min(best, time.perf_counter() - t0)
        if report.certificate is None:
            raise RuntimeError("random chordal graph reported as non-chordal")
        times.append(best)
    fit_n, fit_t = sizes[:-1], times[:-1]
    c = sum(t * n**3 for n, t in zip(fit_n, fit_t)) / sum(n**6 for n in fit_n)
    predicted = c * sizes[-1] ** 3
    res = SweepResult("decide within cubic growth", len(sizes))
    res.details = {
        "backend": kernels.BACKEND,
        "sizes": sizes,
        "seconds": [round(t, 5) for t in times],
        "cubic_prediction_s": round(predicted, 5),
        "ratio_to_prediction": round(times[-1] / predicted, 4),
    }
    if times[-1] > 2 * predicted:
        res.failures.append(f"n={sizes[-1]} took {times[-1]:.3f}s, over twice the cubic fit {predicted:.3f}s")
    if times[-1] > limit_s:
        res.failures.append(f"n={sizes[-1]} took {times[-1]:.3f}s, over {limit_s}s")
    return res


# -- certificates --------------------------------------------------------------


def replay_naive(G: Graph, steps: Sequence[tuple[int, int]], core_labels: Sequence[int]) -> bool:
    """Set-based replay, kept separate from :func:`verify_certificate`."""
    alive = set(range(G.n))
    for y, x in steps:
        if x == y or x not in alive or y not in alive:
            return False
        if not (set(G.adj[x]) & alive) <= (set(G.adj[y]) & alive):
            return False
        alive.remove(y)
    if alive != set(core_labels):
        return False
    for a in alive:
        for b in alive:
            if a != b and (set(G.adj[a]) & alive) <= (set(G.adj[b]) & alive):
                return False
    return True


def _mutations(G: Graph, cert: DismantleCertificate, rng: random.Random) -> list[tuple[str, DismantleCertificate]]:
    steps = list(cert.steps)
    out = []
    if steps:
        i = rng.randrange(len(steps))
        for w in range(G.n):
            if w != steps[i].witness:
                bad = steps[:i] + [DismantleStep(steps[i].removed, w)] + steps[i + 1 :]
                out.append(("wrong witness", DismantleCertificate(tuple(bad), cert.core, cert.core_labels)))
        if len(steps) >= 2:
            j = rng.randrange(len(steps) - 1)
            swapped = steps[:j] + [steps[j + 1], steps[j]] + steps[j + 2 :]
            out.append(("swapped order", DismantleCertificate(tuple(swapped), cert.core, cert.core_labels)))
            rev = steps[::-1]
            out.append(("reversed order", DismantleCertificate(tuple(rev), cert.core, cert.core_labels)))
        out.append(("truncated", DismantleCertificate(tuple(steps[:-1]), cert.core, cert.core_labels)))
        kept = sorted(set(cert.core_labels) | {steps[-1].removed})
        sub, _ = induced_subgraph(G, kept)
        out.append(("truncated, core recomputed", DismantleCertificate(tuple(steps[:-1]), sub, tuple(kept))))
        dup = steps + [steps[-1]]
        out.append(("repeated step", DismantleCertificate(tuple(dup), cert.core, cert.core_labels)))
    return out


def certificate_sweep(graphs: int = 60, seed: int = 0, mutants: int = 20) -> SweepResult:
    """Produced certificates are accepted; a suite of invalid mutants is rejected.

    Ground truth for mutants comes from :func:`replay_naive`; at least
    ``mutants`` invalid ones (mixing every mutation kind) must be rejected,
    and every mutant's verdict must match the truth.
    """
    rng = random.Random(seed)
    corpus = list(paper_fixtures().values())
    while len(corpus) < graphs:
        G, _ = random_chordal(rng.randint(2, 25), rng.choice((0.4, 0.6, 0.8)), rng.randrange(1 << 30))
        corpus.append(G)
    res = SweepResult("certificate soundness")
    invalid_by_kind: dict[str, list] = {}
    agreed = 0
    for G in corpus:
        for policy in (None, rng.randrange(1000)):
            cert = core(G, seed=policy)
            res.cases += 1
            if not verify_certificate(G, cert):
                res.failures.append(f"{_graph_key(G)}: produced certificate rejected")
            if not replay_naive(G, [tuple(s) for s in cert.steps], cert.core_labels):
                res.failures.append(f"{_graph_key(G)}: produced certificate fails naive replay")
            for kind, mutant in _mutations(G, cert, rng):
                truth = replay_naive(G, [tuple(s) for s in mutant.steps], mutant.core_labels)
                verdict = bool(verify_certificate(G, mutant))
                if verdict != truth:
                    res.failures.append(f"{_graph_key(G)}: {kind} mutant verdict {verdict}, truth {truth}")
                else:
                    agreed += 1
                if not truth:
                    invalid_by_kind.setdefault(kind, []).append((G, mutant))
    # the fixed suite: round-robin over kinds until `mutants` invalid ones are chosen
    suite = []
    pools = [list(v) for _, v in sorted(invalid_by_kind.items())]
    while len(suite) < mutants and any(pools):
        for pool in pools:
            if pool and len(suite) < mutants:
                suite.append(pool.pop(0))
    if len(suite) < mutants:
        res.failures.append(f"only {len(suite)} invalid mutants generated")
    rejected = sum(1 for G, m in suite if not verify_certificate(G, m))
    if rejected != len(suite):
        res.failures.append(f"{len(suite) - rejected} of {len(suite)} invalid mutants accepted")
    res.details = {
        "graphs": len(corpus),
        "mutant_suite": len(suite),
        "mutant_suite_rejected": rejected,
        "mutant_kinds": sorted(invalid_by_kind),
        "mutants_agreeing_with_truth": agreed,
    }
    return res


SUITES: dict[str, Callable[..., SweepResult]] = {
    "contractible": contractibility_sweep,
    "sphere": sphere_sweep,
    "taut": taut_contractible_sweep,
    "rooted": rooted_good_pair_sweep,
    "confluence": confluence_sweep,
    "identities": identities_sweep,
    "copwin": cop_win_sweep,
    "fixtures": fixtures_sweep,
    "performance": performance_sweep,
    "certificates": certificate_sweep,
}

PARALLEL_SUITES = {"contractible", "sphere", "rooted", "identities", "copwin"}
