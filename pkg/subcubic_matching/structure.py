"""
Gallai-Edmonds decomposition computed from its definition, and a checker
for the structural properties it is known to have.
"""
import collections

from .errors import DecompositionMismatchError
from .graph import component_vertex_sets, delete_vertices, induced_subgraph
from .matching import (bipartite_deficiency, has_perfect_matching,
                       has_positive_surplus, is_hypomatchable,
                       matching_number)

MIN_B_DEGREE = 2


class GEDecomposition(object):
    """
    The partition (A, B, C) of the vertex set.  A holds the vertices missed
    by some maximum matching, B the neighbours of A outside A, and C the
    remaining vertices.
    """
    def __init__(self, a, b, c):
        self.a = frozenset(a)
        self.b = frozenset(b)
        self.c = frozenset(c)

    def __eq__(self, other):
        return (isinstance(other, GEDecomposition) and
                (self.a, self.b, self.c) == (other.a, other.b, other.c))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.a, self.b, self.c))

    def __repr__(self):
        return "GEDecomposition(A=%s, B=%s, C=%s)" % (sorted(self.a),
                                                      sorted(self.b),
                                                      sorted(self.c))

    def sizes(self):
        return (len(self.a), len(self.b), len(self.c))


GEPropertyReport = collections.namedtuple(
    "GEPropertyReport",
    ["a_hypomatchable",          # every component of G[A] is hypomatchable
     "c_perfect",                # G[C] has a perfect matching
     "b_surplus",                # X in B sees >= |X|+1 components of G[A]
     "b_saturated",              # B matched into distinct components
     "b_two_components",         # each b sees >= 2 components of G[A]
     "b_min_degree",             # each b has degree >= 2
     "identity_holds",           # 2 nu = |V| - comp(G[A]) + |B|
     "a_component_count",
     "nu"])


def all_properties_hold(report):
    """
    Returns True if the three structural properties hold.
    """
    return report.a_hypomatchable and report.c_perfect and report.b_surplus


def gallai_edmonds(g):
    """
    Returns the GEDecomposition of g computed with one maximum matching per
    vertex deletion.
    """
    nu = matching_number(g)
    a = set()
    for v in range(g.vertex_count):
        if matching_number(delete_vertices(g, [v])[0]) == nu:
            a.add(v)

    b = set()
    for v in a:
        for u in g.neighbors(v):
            if u not in a:
                b.add(u)

    c = set(range(g.vertex_count)) - a - b
    return GEDecomposition(a, b, c)


def verify_ge_properties(g, d):
    """
    Checks decomposition d of g and returns a GEPropertyReport.  d must be
    the decomposition of g; anything else raises DecompositionMismatchError.
    """
    expected = gallai_edmonds(g)
    if d != expected:
        raise DecompositionMismatchError(
            "Decomposition %r does not match the definition, expected %r" %
            (d, expected))

    nu = matching_number(g)
    a_components = component_vertex_sets(g, d.a)
    a_hypomatchable = all(is_hypomatchable(induced_subgraph(g, vs)[0])
                          for vs in a_components)
    c_perfect = has_perfect_matching(induced_subgraph(g, d.c)[0])

    b_order, incidence = _b_incidence(g, d.b, a_components)
    b_count = len(b_order)
    b_surplus = has_positive_surplus(b_count, len(a_components), incidence)
    b_saturated = bipartite_deficiency(b_count, len(a_components),
                                       incidence) == 0

    touched = collections.defaultdict(set)
    for left, right in incidence:
        touched[left].add(right)
    b_two_components = all(len(touched[i]) >= 2 for i in range(b_count))
    b_min_degree = all(g.degree(b) >= MIN_B_DEGREE for b in d.b)

    identity_holds = (2 * nu ==
                      g.vertex_count - len(a_components) + len(d.b))

    return GEPropertyReport(a_hypomatchable=a_hypomatchable,
                            c_perfect=c_perfect,
                            b_surplus=b_surplus,
                            b_saturated=b_saturated,
                            b_two_components=b_two_components,
                            b_min_degree=b_min_degree,
                            identity_holds=identity_holds,
                            a_component_count=len(a_components),
                            nu=nu)


#
# Private functions to do the work
#

def _b_incidence(g, b_vertices, a_components):
    component_of = dict()
    for index, vs in enumerate(a_components):
        for v in vs:
            component_of[v] = index

    b_order = sorted(b_vertices)
    incidence = set()
    for left, b in enumerate(b_order):
        for u in g.neighbors(b):
            if u in component_of:
                incidence.add((left, component_of[u]))

    return b_order, sorted(incidence)
