import random

import pytest
from hypothesis import given, settings, strategies as st

from chordcore.chordal import random_chordal
from chordcore.complex import independence_complex
from chordcore.dismantle import (
    DismantleCertificate,
    DismantleStep,
    NotChordalError,
    classify_from_core,
    classify_sphere_chordal,
    contractible_by_components,
    core,
    decide,
    is_contractible_chordal,
    is_taut,
    verify_certificate,
)
from chordcore.graph import (
    Graph,
    are_isomorphic,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_good_pairs,
    is_good_pair,
    matching_graph,
    path_graph,
    random_relabel,
)
from chordcore.homology import reduced_betti

from test_graph import CHAIN7, graphs

K3_K2 = disjoint_union(complete_graph(3), complete_graph(2))


def _chordal(count, seed, n_max=20):
    r = random.Random(seed)
    for i in range(count):
        G, _ = random_chordal(r.randint(0, n_max), fill=r.random(), seed=seed * 1009 + i)
        yield G


class TestCore:
    def test_single_vertex(self):
        cert = core(complete_graph(1))
        assert cert.steps == () and cert.core.n == 1 and cert.core_labels == (0,)

    def test_p3(self):
        cert = core(path_graph(3))
        assert len(cert.steps) == 1
        y, x = cert.steps[0]
        assert {x, y} == {0, 2}
        assert cert.core.m == 1 and cert.core.n == 2

    def test_p4(self):
        cert = core(path_graph(4))
        assert len(cert.steps) == 3 and cert.core.n == 1

    def test_steps_replay(self):
        for G in _chordal(200, seed=1):
            cert = core(G)
            alive = set(G.vertices())
            for y, x in cert.steps:
                sub_x = G.adj[x] & alive
                assert x in alive and y in alive and sub_x <= G.adj[y]
                alive.discard(y)
            assert tuple(sorted(alive)) == cert.core_labels
            assert is_taut(cert.core)

    def test_seeded_policy(self):
        for G in _chordal(100, seed=2):
            a, b = core(G, seed=1), core(G, seed=1)
            assert a == b
            assert verify_certificate(G, a)

    @settings(max_examples=80, deadline=None)
    @given(graphs(n_max=9), st.integers(0, 10**6))
    def test_cores_isomorphic_across_policies(self, G, seed):
        assert are_isomorphic(core(G).core, core(G, seed=seed).core)

    def test_core_preserves_homology(self):
        for G in _chordal(150, seed=3, n_max=12):
            cert = core(G)
            assert reduced_betti(independence_complex(G)) == reduced_betti(independence_complex(cert.core))

    def test_relabel_invariance(self, rng):
        for G in _chordal(100, seed=4):
            H, _ = random_relabel(G, rng)
            a, b = core(G).core, core(H).core
            if a.n <= 12:
                assert are_isomorphic(a, b)
            else:
                assert a.n == b.n and a.m == b.m


class TestVerify:
    def test_accepts_produced(self):
        for G in _chordal(200, seed=5):
            assert verify_certificate(G, core(G)).ok
            assert verify_certificate(G, core(G, seed=3)).ok

    def test_tampered_witness(self):
        G = path_graph(4)
        cert = core(G)
        y, x = cert.steps[0]
        wrong = next(w for w in G.vertices() if w not in (x, y) and not is_good_pair(G, w, y))
        bad = DismantleCertificate((DismantleStep(y, wrong),) + cert.steps[1:], cert.core, cert.core_labels)
        check = verify_certificate(G, bad)
        assert not check and check.bad_step == 0

    def test_truncated(self):
        G = path_graph(4)
        cert = core(G)
        steps = cert.steps[:1]
        removed = {s.removed for s in steps}
        labels = tuple(v for v in G.vertices() if v not in removed)
        from chordcore.graph import induced_subgraph

        sub, _ = induced_subgraph(G, labels)
        check = verify_certificate(G, DismantleCertificate(steps, sub, labels))
        assert not check and check.bad_step == 1 and "good pair" in check.reason

    def test_stale_core(self):
        G = path_graph(4)
        cert = core(G)
        check = verify_certificate(G, DismantleCertificate(cert.steps[:2], cert.core, cert.core_labels))
        assert not check and check.bad_step == 2

    def test_repeated_and_out_of_range(self):
        G = path_graph(4)
        cert = core(G)
        twice = DismantleCertificate(cert.steps[:1] * 2, cert.core, cert.core_labels)
        assert verify_certificate(G, twice).bad_step == 1
        wild = DismantleCertificate((DismantleStep(9, 0),), cert.core, cert.core_labels)
        assert verify_certificate(G, wild).bad_step == 0

    def test_dict_round_trip(self):
        for G in _chordal(50, seed=6):
            cert = core(G)
            back = DismantleCertificate.from_dict(cert.to_dict(), G)
            assert back == cert

    def test_from_dict_rejects_wrong_edges(self):
        G = path_graph(3)
        data = core(G).to_dict()
        data["core"]["edges"] = []
        with pytest.raises(ValueError):
            DismantleCertificate.from_dict(data, G)


class TestTautAndContractible:
    def test_taut(self):
        for k in range(5):
            assert is_taut(matching_graph(k))
        assert is_taut(K3_K2) and is_taut(CHAIN7)
        assert not is_taut(path_graph(3))

    def test_contractible_examples(self):
        assert is_contractible_chordal(path_graph(4))
        assert not is_contractible_chordal(path_graph(3))
        assert not is_contractible_chordal(empty_graph(0))
        assert is_contractible_chordal(complete_graph(1))

    def test_non_chordal_rejected(self):
        with pytest.raises(NotChordalError):
            is_contractible_chordal(cycle_graph(4))
        # C_4 dismantles to a single edge, so the unsafe mode reports "not dismantlable"
        assert not is_contractible_chordal(cycle_graph(4), unsafe=True)
        # the diamond is chordal; its Ind is an edge plus two points
        assert not is_contractible_chordal(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]))

    def test_components_fast_path(self):
        for G in _chordal(300, seed=7, n_max=25):
            assert contractible_by_components(G) == is_contractible_chordal(G)

    def test_against_homology(self):
        for G in _chordal(200, seed=8, n_max=12):
            assert is_contractible_chordal(G) == reduced_betti(independence_complex(G)).is_contractible


class TestClassify:
    def test_examples(self):
        c = classify_sphere_chordal(matching_graph(3))
        assert (c.kind, c.k, c.describe()) == ("sphere", 3, "S^2")
        c = classify_sphere_chordal(path_graph(5))
        assert (c.kind, c.k) == ("sphere", 2)
        assert reduced_betti(independence_complex(path_graph(5))).betti_nonneg == (0, 1)
        c = classify_sphere_chordal(CHAIN7)
        assert c.kind == "other" and c.core_size == 7
        assert classify_sphere_chordal(path_graph(4)).kind == "contractible"

    def test_empty_graph_is_minus_one_sphere(self):
        c = classify_sphere_chordal(empty_graph(0))
        assert (c.kind, c.k) == ("sphere", 0)

    def test_from_core(self):
        assert classify_from_core(complete_graph(1)).kind == "contractible"
        assert classify_from_core(K3_K2).kind == "other"

    def test_against_homology(self):
        for G in _chordal(200, seed=9, n_max=12):
            c = classify_sphere_chordal(G)
            sig = reduced_betti(independence_complex(G))
            d = sig.single_sphere_dim()
            assert (c.kind == "sphere") == (d is not None)
            if d is not None:
                assert c.k == d + 1


class TestDecide:
    def test_k1(self):
        r = decide(complete_graph(1))
        assert r.classification == "contractible" and r.certificate.steps == ()

    def test_non_chordal(self):
        r = decide(cycle_graph(4))
        assert not r.chordal and r.classification == "unknown(non-chordal)"
        assert r.certificate is None
        r = decide(cycle_graph(4), unsafe=True)
        assert r.classification == "unknown(non-chordal)" and r.dismantlable is False

    def test_oracle_fixture(self):
        d = decide(CHAIN7, oracle=True).to_dict(timings=False)
        assert d["classification"] == "other"
        assert d["betti"] == [0, 2] and d["betti_minus1"] == 0
        assert "elapsed_ms" not in d

    def test_timings(self):
        d = decide(path_graph(6)).to_dict()
        assert d["elapsed_ms"] >= 0 and "dismantle" in d["timings_ms"]
        assert d["k"] == 2

    def test_large(self):
        G, _ = random_chordal(1000, fill=0.7, seed=1)
        r = decide(G)
        assert r.chordal and verify_certificate(G, r.certificate)

    def test_core_has_no_good_pair(self):
        for G in _chordal(100, seed=10):
            assert enumerate_good_pairs(decide(G).certificate.core) == []
