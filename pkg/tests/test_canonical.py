import random
import pytest

from subcubic_matching.canonical import (are_isomorphic, canonical_form,
                                         canonical_key)
from subcubic_matching.enumeration import random_subcubic
from subcubic_matching.graph import (Graph, complete_graph, cycle_graph,
                                     disjoint_union, empty_graph,
                                     path_graph, petersen_graph, relabel,
                                     star_graph)

PRISM = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                  (0, 3), (1, 4), (2, 5)])
K33 = Graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
CUBE = Graph(8, [(u, u ^ bit) for u in range(8) for bit in (1, 2, 4)
                 if u < u ^ bit])
MOBIUS_LADDER = Graph(8, [(v, (v + 1) % 8) for v in range(8)] +
                      [(v, v + 4) for v in range(4)])

NON_ISOMORPHIC_CASES = [
    (cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))),
    (PRISM, K33),
    (CUBE, MOBIUS_LADDER),
    (path_graph(4), star_graph(3)),
    (disjoint_union(path_graph(2), empty_graph(1)), path_graph(3)),
]

SAMPLE_GRAPHS = [
    petersen_graph(),
    PRISM,
    K33,
    CUBE,
    MOBIUS_LADDER,
    complete_graph(4),
    disjoint_union(cycle_graph(5), complete_graph(4), path_graph(2)),
    empty_graph(4),
    Graph(1),
]


def shuffled(g, seed):
    permutation = list(range(g.vertex_count))
    random.Random(seed).shuffle(permutation)
    return relabel(g, permutation)


class TestCanonical(object):

    @pytest.mark.parametrize("g", SAMPLE_GRAPHS)
    def test_form__relabel_invariant(self, g):
        form = canonical_form(g)

        assert form.vertex_count == g.vertex_count
        assert form.edge_count == g.edge_count
        assert sorted(form.degrees()) == sorted(g.degrees())
        for seed in range(5):
            assert canonical_form(shuffled(g, seed)) == form

    @pytest.mark.parametrize("seed", range(30))
    def test_form__random(self, seed):
        g = random_subcubic(4 + seed % 9, seed)

        assert canonical_key(shuffled(g, seed + 100)) == canonical_key(g)
        assert are_isomorphic(g, shuffled(g, seed))

    @pytest.mark.parametrize("g, h", NON_ISOMORPHIC_CASES)
    def test_non_isomorphic(self, g, h):
        assert not are_isomorphic(g, h)
        assert canonical_key(g) != canonical_key(h)

    def test_form__idempotent(self):
        form = canonical_form(petersen_graph())

        assert canonical_form(form) == form

    def test_form__components_ordered(self):
        g = disjoint_union(complete_graph(4), Graph(1), path_graph(2))

        form = canonical_form(g)

        assert form.degree(0) == 0
        assert form.has_edge(1, 2)
        assert all(form.degree(v) == 3 for v in range(3, 7))

    def test_key__bytes(self):
        assert canonical_key(complete_graph(4)) == b"C~"
        assert canonical_key(empty_graph(0)) == b"?"

    @pytest.mark.parametrize("g", [CUBE, MOBIUS_LADDER, petersen_graph()])
    def test_form__vertex_transitive(self, g):
        form = canonical_form(g)

        for seed in range(20):
            h = shuffled(g, seed)
            assert canonical_form(h) == form
            assert are_isomorphic(g, h)
