import random

import pytest
from hypothesis import given, settings, strategies as st

from chordcore.chordal import random_chordal, simplicial_vertices
from chordcore.complex import (
    SimplicialComplex,
    clique_complex,
    cross_polytope_boundary,
    independence_complex,
)
from chordcore.dismantle import core
from chordcore.enumeration import chordal_classes
from chordcore.explorer import taut_catalog
from chordcore.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    is_matching,
    path_graph,
    star_graph,
)
from chordcore.homology import (
    FaceBudgetExceeded,
    HomotopySignature,
    boundary_rank,
    faces_by_dimension,
    reduced_betti,
    wedge_decomposition,
    wedge_via_simplicial,
)

from test_graph import CHAIN7

# six-vertex real projective plane: torsion in H_1 shows up over GF(2) only
RP2 = SimplicialComplex.from_faces(
    [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
     (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
)


class TestSignature:
    def test_trimming_and_views(self):
        s = HomotopySignature((0, 1, 0, 0))
        assert s.betti == (0, 1)
        assert s.betti_nonneg == (1,)
        assert s.reduced(0) == 1 and s.reduced(5) == 0 and s.reduced(-1) == 0
        assert s.single_sphere_dim() == 0

    def test_constructors(self):
        assert HomotopySignature.sphere(-1).betti == (1,)
        assert HomotopySignature.sphere(2).betti_nonneg == (0, 0, 1)
        assert HomotopySignature.contractible().is_contractible
        assert HomotopySignature.from_nonneg([0, 2]).betti == (0, 0, 2)

    def test_suspend_and_wedge(self):
        s0 = HomotopySignature.sphere(0)
        assert s0.suspend() == HomotopySignature.sphere(1)
        assert HomotopySignature.sphere(-1).suspend() == s0
        assert HomotopySignature.contractible().suspend().is_contractible
        assert s0.wedge(HomotopySignature.sphere(1)).betti_nonneg == (1, 1)
        assert s0.wedge(HomotopySignature.contractible()) == s0
        with pytest.raises(ValueError):
            s0.wedge(HomotopySignature.sphere(-1))

    def test_label(self):
        assert HomotopySignature.contractible().label() == "contractible"
        assert HomotopySignature.from_nonneg([0, 2]).label() == "2xS^1"
        assert HomotopySignature.from_nonneg([1, 1]).label() == "S^0 v S^1"
        assert HomotopySignature.sphere(-1).label() == "S^-1"


class TestReducedBetti:
    def test_examples(self):
        assert reduced_betti(clique_complex(cycle_graph(4))).betti_nonneg == (0, 1)
        assert reduced_betti(independence_complex(complete_graph(4))).betti_nonneg == (3,)
        assert reduced_betti(independence_complex(CHAIN7)).betti_nonneg == (0, 2)

    def test_empty_complex(self):
        assert reduced_betti(SimplicialComplex.empty()) == HomotopySignature.sphere(-1)
        assert reduced_betti(independence_complex(empty_graph(0))).reduced(-1) == 1
        with pytest.raises(ValueError):
            reduced_betti(SimplicialComplex.void())

    def test_simplex_and_point(self):
        assert reduced_betti(independence_complex(empty_graph(4))).is_contractible
        assert reduced_betti(SimplicialComplex.from_faces([{3}])).is_contractible

    @pytest.mark.parametrize("n", range(1, 8))
    def test_complete_graph_points(self, n):
        assert reduced_betti(independence_complex(complete_graph(n))).betti_nonneg == ((n - 1,) if n > 1 else ())

    def test_paths(self):
        # Ind(P_n): contractible for n = 1 mod 3, otherwise a single sphere
        for n in range(1, 13):
            sig = reduced_betti(independence_complex(path_graph(n)))
            if n % 3 == 1:
                assert sig.is_contractible
            else:
                assert sig.single_sphere_dim() == (n + 1) // 3 - 1

    def test_torsion_depends_on_field(self):
        assert reduced_betti(RP2, 2).betti_nonneg == (0, 1, 1)
        assert reduced_betti(RP2, 3).is_contractible

    def test_field_must_be_prime(self):
        with pytest.raises(ValueError):
            reduced_betti(RP2, 4)

    def test_budget(self):
        with pytest.raises(FaceBudgetExceeded):
            reduced_betti(cross_polytope_boundary(8), budget=100)

    def test_faces_and_boundary(self):
        faces = faces_by_dimension(SimplicialComplex.from_faces([{0, 1, 2}]))
        assert [len(f) for f in faces] == [1, 3, 3, 1]
        assert boundary_rank(faces[1], faces[2], 2) == 2
        assert boundary_rank(faces[1], faces[2], 3) == 2

    @pytest.mark.parametrize("k", range(0, 6))
    def test_suspension_shift(self, k):
        lower = reduced_betti(cross_polytope_boundary(k))
        upper = reduced_betti(cross_polytope_boundary(k + 1))
        assert upper == lower.suspend()
        assert upper == HomotopySignature.sphere(k)

    def test_gf2_gf3_agree_on_chordal(self):
        r = random.Random(1)
        for i in range(150):
            G, _ = random_chordal(r.randint(0, 11), fill=r.random(), seed=i)
            K = independence_complex(G)
            assert reduced_betti(K, 2) == reduced_betti(K, 3)


class TestWedges:
    def test_base_cases(self):
        assert wedge_decomposition(empty_graph(0)) == HomotopySignature.sphere(-1)
        assert wedge_decomposition(empty_graph(1)).is_contractible
        assert wedge_decomposition(complete_graph(2)) == HomotopySignature.sphere(0)
        assert wedge_decomposition(path_graph(3)).betti_nonneg == (1,)

    def test_simplicial_examples(self):
        assert wedge_via_simplicial(path_graph(3), 0) == HomotopySignature.sphere(0)
        assert wedge_via_simplicial(star_graph(3), 1).betti_nonneg == (1,)

    def test_rejects(self):
        with pytest.raises(ValueError):
            wedge_decomposition(cycle_graph(4))
        with pytest.raises(ValueError):
            wedge_via_simplicial(path_graph(3), 1)
        with pytest.raises(ValueError):
            wedge_via_simplicial(empty_graph(2), 0)

    @pytest.mark.parametrize("n", range(0, 8))
    def test_all_classes(self, n):
        for cls in chordal_classes(n):
            G = cls.graph
            sig = wedge_decomposition(G)
            assert sig == reduced_betti(independence_complex(G))
            for v in simplicial_vertices(G):
                if G.adj[v]:
                    assert wedge_via_simplicial(G, v) == sig

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 16), st.floats(0, 1), st.integers(0, 10**6))
    def test_random_chordal(self, n, fill, seed):
        G, _ = random_chordal(n, fill, seed)
        assert wedge_decomposition(G) == reduced_betti(independence_complex(G))


class TestInvariance:
    @pytest.mark.parametrize("n", range(0, 9))
    def test_dismantling_keeps_signature(self, n):
        for cls in chordal_classes(n):
            G = cls.graph
            assert wedge_decomposition(G) == wedge_decomposition(core(G).core)

    def test_dismantling_keeps_homology(self):
        for n in range(0, 9):
            for cls in chordal_classes(n):
                G = cls.graph
                sig = reduced_betti(independence_complex(G))
                assert sig == reduced_betti(independence_complex(core(G).core))

    def test_taut_single_sphere_simplicial_degree_one(self):
        seen = 0
        for sig, entry in taut_catalog(8).items():
            if sig.single_sphere_dim() is None:
                continue
            for G in entry.graphs:
                assert is_matching(G) is not None
                assert all(G.degree(v) == 1 for v in simplicial_vertices(G))
                seen += 1
        assert seen >= 5


def test_graph_with_isolated_vertex_is_cone():
    G = Graph.from_edges(4, [(0, 1), (1, 2)])
    assert reduced_betti(independence_complex(G)).is_contractible
