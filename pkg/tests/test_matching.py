import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from subcubic_matching.enumeration import (EnumerationConfig,
                                           enumerate_subcubic,
                                           random_subcubic)
from subcubic_matching.errors import TooLargeError
from subcubic_matching.families import FamilySpec, generate
from subcubic_matching.graph import (Graph, complete_graph, cycle_graph,
                                     delete_vertices, disjoint_union,
                                     empty_graph, path_graph,
                                     petersen_graph, star_graph)
from subcubic_matching.matching import (Matching, bipartite_deficiency,
                                        bipartite_max_matching,
                                        brute_force_nu, has_perfect_matching,
                                        has_positive_surplus,
                                        is_hypomatchable, matching_number,
                                        max_matching)

NU_CASES = [
    (empty_graph(0), 0),
    (empty_graph(3), 0),
    (path_graph(2), 1),
    (complete_graph(3), 1),
    (complete_graph(4), 2),
    (star_graph(3), 1),
    (cycle_graph(5), 2),
    (cycle_graph(6), 3),
    (petersen_graph(), 5),
    (generate(FamilySpec("G1", 1)), 3),
    (generate(FamilySpec("G4", 2)), 6),
    (disjoint_union(cycle_graph(5), complete_graph(3)), 3),
]

PERFECT_CASES = [
    (cycle_graph(4), True),
    (cycle_graph(5), False),
    (Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]), True),
    (star_graph(3), False),
    (petersen_graph(), True),
    (empty_graph(0), True),
]

HYPOMATCHABLE_CASES = [
    (complete_graph(3), True),
    (cycle_graph(5), True),
    (star_graph(3), False),
    (empty_graph(1), True),
    (cycle_graph(4), False),
    (path_graph(3), False),
]

# (left count, right count, edges, matching size, deficiency, surplus)
BIPARTITE_CASES = [
    (0, 3, [], 0, 0, True),
    (1, 2, [(0, 0), (0, 1)], 1, 0, True),
    (1, 1, [(0, 0)], 1, 0, False),
    (2, 3, [(0, 0), (0, 1), (1, 1), (1, 2)], 2, 0, True),
    (2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)], 2, 0, False),
    (3, 2, [(0, 0), (1, 0), (2, 1)], 2, 1, False),
    (3, 4, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3)], 3, 0, True),
    (2, 3, [(0, 0), (0, 1), (0, 2), (1, 0)], 2, 0, False),
]


@pytest.fixture(scope="module")
def small_corpus():
    return list(enumerate_subcubic(EnumerationConfig(8)))


def to_networkx(g):
    graph = nx.Graph()
    graph.add_nodes_from(range(g.vertex_count))
    graph.add_edges_from(g.edges)
    return graph


class TestMaxMatching(object):

    @pytest.mark.parametrize("g, nu", NU_CASES)
    def test_nu__known(self, g, nu):
        matching = max_matching(g)

        assert len(matching) == nu
        assert matching.is_valid_for(g)
        assert matching_number(g) == nu
        assert brute_force_nu(g) == nu

    def test_deterministic(self):
        g = petersen_graph()

        assert max_matching(g) == max_matching(g)
        assert list(max_matching(g)) == sorted(max_matching(g).edges)

    def test_corpus__brute_force(self, small_corpus):
        for g in small_corpus:
            assert matching_number(g) == brute_force_nu(g), g

    def test_corpus__deletion_monotone(self, small_corpus):
        for g in small_corpus:
            nu = matching_number(g)
            for v in range(g.vertex_count):
                nu_minus = matching_number(delete_vertices(g, [v])[0])
                assert nu - 1 <= nu_minus <= nu

    @pytest.mark.parametrize("seed", range(200))
    def test_random__brute_force(self, seed):
        g = random_subcubic(1 + seed % 16, seed)

        assert matching_number(g) == brute_force_nu(g)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=2, max_value=60),
           st.integers(min_value=0, max_value=10 ** 6))
    def test_random__networkx(self, n, seed):
        g = random_subcubic(n, seed)

        expected = len(nx.max_weight_matching(to_networkx(g),
                                              maxcardinality=True))
        assert matching_number(g) == expected

    def test_brute_force__guard(self):
        g = generate(FamilySpec("G4", 5))

        assert g.edge_count > 40
        with pytest.raises(TooLargeError) as e:
            brute_force_nu(g)

        assert "limited to 40 edges" in str(e.value)


class TestMatching(object):

    def test_matching__value(self):
        m = Matching([(1, 0), (3, 2)])

        assert m.size == 2
        assert list(m) == [(0, 1), (2, 3)]
        assert m.covered_vertices() == set([0, 1, 2, 3])
        assert m == Matching([(0, 1), (2, 3)])
        assert m.is_valid_for(cycle_graph(4))
        assert not m.is_valid_for(Graph(4, [(0, 1)]))
        assert not Matching([(0, 1), (1, 2)]).is_valid_for(path_graph(3))


class TestPerfectMatching(object):

    @pytest.mark.parametrize("g, expected", PERFECT_CASES)
    def test_has_perfect_matching(self, g, expected):
        assert has_perfect_matching(g) == expected

    @pytest.mark.parametrize("g, expected", HYPOMATCHABLE_CASES)
    def test_is_hypomatchable(self, g, expected):
        assert is_hypomatchable(g) == expected


class TestBipartite(object):

    @pytest.mark.parametrize("left, right, edges, size, deficiency, surplus",
                             BIPARTITE_CASES)
    def test_bipartite(self, left, right, edges, size, deficiency, surplus):
        matched = bipartite_max_matching(left, right, edges)

        assert len(matched) == size
        assert len(set(v for _, v in matched)) == size
        assert all((u, v) in edges for u, v in matched)
        assert bipartite_deficiency(left, right, edges) == deficiency
        assert has_positive_surplus(left, right, edges) == surplus
