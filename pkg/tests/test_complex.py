import itertools

import pytest
from hypothesis import given, settings

from chordcore.chordal import all_labeled_graphs
from chordcore.complex import (
    ComplexFormatError,
    SimplicialComplex,
    clique_complex,
    complex_dismantle_core,
    cross_polytope_boundary,
    delete,
    dominated_vertices,
    format_facets,
    independence_complex,
    is_dominated_in_complex,
    link,
    parse_facets,
)
from chordcore.dismantle import core
from chordcore.graph import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    is_good_pair,
    matching_graph,
)

from test_graph import CHAIN7, graphs

TRIANGLE = SimplicialComplex.from_faces([{0, 1, 2}])
SQUARE = clique_complex(cycle_graph(4))


def brute_independent_sets(G):
    out = []
    for r in range(G.n + 1):
        for S in itertools.combinations(range(G.n), r):
            if all(not G.has_edge(a, b) for a, b in itertools.combinations(S, 2)):
                out.append(frozenset(S))
    return out


class TestConstruction:
    def test_empty_vs_void(self):
        assert SimplicialComplex.empty() != SimplicialComplex.void()
        assert SimplicialComplex.void().is_void
        assert not SimplicialComplex.empty().is_void
        assert SimplicialComplex.empty().dimension == -1

    def test_from_faces_keeps_maximal(self):
        K = SimplicialComplex.from_faces([{0, 1}, {0}, {1, 2}, {0, 1}])
        assert K.sorted_facets() == [(0, 1), (1, 2)]
        assert K.contains_face({1}) and not K.contains_face({0, 2})


class TestGraphComplexes:
    def test_ind_examples(self):
        assert independence_complex(complete_graph(3)).sorted_facets() == [(0,), (1,), (2,)]
        assert independence_complex(matching_graph(2)).sorted_facets() == [(0, 2), (0, 3), (1, 2), (1, 3)]
        assert independence_complex(empty_graph(3)).sorted_facets() == [(0, 1, 2)]
        assert independence_complex(empty_graph(0)) == SimplicialComplex.empty()

    def test_clique_examples(self):
        assert SQUARE.sorted_facets() == [(0, 1), (0, 3), (1, 2), (2, 3)]
        assert clique_complex(complete_graph(3)).sorted_facets() == [(0, 1, 2)]

    @given(graphs())
    def test_ind_is_clique_of_complement(self, G):
        assert independence_complex(G) == clique_complex(complement(G))

    @settings(max_examples=80)
    @given(graphs(n_max=6))
    def test_ind_faces_brute_force(self, G):
        K = independence_complex(G)
        faces = brute_independent_sets(G)
        maximal = {f for f in faces if not any(f < g for g in faces)}
        assert K.facets == maximal


class TestLinkDelete:
    def test_link_examples(self):
        assert link(TRIANGLE, 0).sorted_facets() == [(1, 2)]
        K = SimplicialComplex.from_faces([{0, 1}, {2}])
        assert link(K, 2) == SimplicialComplex.empty()

    def test_delete_examples(self):
        assert delete(TRIANGLE, 0).sorted_facets() == [(1, 2)]
        assert delete(SimplicialComplex.from_faces([{0}]), 0) == SimplicialComplex.empty()

    def test_unknown_vertex(self):
        with pytest.raises(ValueError):
            link(TRIANGLE, 7)

    @given(graphs(n_max=7))
    def test_identities(self, G):
        ind, cl = independence_complex(G), clique_complex(G)
        for u in G.vertices():
            rest = [v for v in G.vertices() if v != u]
            far = [v for v in rest if v not in G.adj[u]]
            assert delete(ind, u) == _ind_on(G, rest)
            assert link(ind, u) == _ind_on(G, far)
            assert link(cl, u) == _cl_on(G, sorted(G.adj[u]))


def _sub_faces(G, W, independent):
    W = list(W)
    faces = []
    for r in range(len(W) + 1):
        for S in itertools.combinations(W, r):
            if all(G.has_edge(a, b) != independent for a, b in itertools.combinations(S, 2)):
                faces.append(S)
    return SimplicialComplex.from_faces(faces)


def _ind_on(G, W):
    return _sub_faces(G, W, True)


def _cl_on(G, W):
    return _sub_faces(G, W, False)


class TestDomination:
    def test_examples(self):
        assert is_dominated_in_complex(TRIANGLE, 0, 1)
        assert dominated_vertices(SQUARE) == []

    def test_self(self):
        with pytest.raises(ValueError):
            is_dominated_in_complex(TRIANGLE, 0, 0)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_good_pair_iff_complex_domination(self, n):
        for G in all_labeled_graphs(n):
            K = independence_complex(G)
            for x in range(n):
                for y in range(n):
                    if x != y:
                        assert is_good_pair(G, x, y) == is_dominated_in_complex(K, y, x)

    @settings(max_examples=60)
    @given(graphs(n_max=8))
    def test_graph_and_complex_cores_agree(self, G):
        if G.n == 0:
            return
        K, removed = complex_dismantle_core(independence_complex(G))
        assert len(K.vertices) == core(G).core.n
        assert len(removed) == G.n - len(K.vertices)

    def test_taut_fixture(self):
        K = independence_complex(CHAIN7)
        assert dominated_vertices(K) == []


class TestCrossPolytope:
    def test_small(self):
        assert cross_polytope_boundary(1).sorted_facets() == [(0,), (1,)]
        assert cross_polytope_boundary(2) == independence_complex(matching_graph(2))
        K3 = cross_polytope_boundary(3)
        assert len(K3.facets) == 8 and all(len(f) == 3 for f in K3.facets)
        assert cross_polytope_boundary(0) == SimplicialComplex.empty()

    @pytest.mark.parametrize("k", range(1, 6))
    def test_matches_matching(self, k):
        assert cross_polytope_boundary(k) == independence_complex(matching_graph(k))


class TestFacetFormat:
    def test_round_trip(self):
        for K in [TRIANGLE, SQUARE, cross_polytope_boundary(3), SimplicialComplex.empty()]:
            assert parse_facets(format_facets(K)) == K

    def test_empty_token(self):
        assert format_facets(SimplicialComplex.empty()) == "∅\n"
        assert parse_facets("# nothing\n∅\n") == SimplicialComplex.empty()
        assert parse_facets("") == SimplicialComplex.void()

    @pytest.mark.parametrize("text", ["0 a\n", "0 0\n", "-1 2\n"])
    def test_rejects(self, text):
        with pytest.raises(ComplexFormatError):
            parse_facets(text)

    def test_relabel(self):
        K = TRIANGLE.relabel({0: 5, 1: 6, 2: 7})
        assert K.sorted_facets() == [(5, 6, 7)]


def test_complex_of_graph_without_edges_is_simplex():
    K = independence_complex(Graph.from_edges(4, []))
    assert K.dimension == 3
