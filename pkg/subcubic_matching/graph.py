import collections
import itertools

from .errors import GraphError, NotSubcubicError

MAX_SUBCUBIC_DEGREE = 3

DegreeProfile = collections.namedtuple("DegreeProfile",
                                       ["n0", "n1", "n2", "n3", "c"])


class Graph(object):
    """
    Undirected simple graph on the vertices 0..vertex_count-1.  This class is
    read-only: operations that delete or relabel vertices return new graphs.
    """
    def __init__(self, vertex_count, edges=()):
        """
        Edges are given as pairs of vertex indices in any orientation.
        Loops, duplicate edges and out of range endpoints are rejected.
        """
        if vertex_count < 0:
            raise GraphError("Vertex count must be nonnegative: %s" %
                             vertex_count)

        self.vertex_count = int(vertex_count)
        normalized = set()
        neighbors = [list() for _ in range(self.vertex_count)]
        for edge in edges:
            u, v = edge
            if u == v:
                raise GraphError("Self-loop at vertex %d" % u)
            if not (0 <= u < self.vertex_count and
                    0 <= v < self.vertex_count):
                raise GraphError("Edge (%d, %d) outside 0..%d" %
                                 (u, v, self.vertex_count - 1))
            key = (min(u, v), max(u, v))
            if key in normalized:
                raise GraphError("Duplicate edge (%d, %d)" % key)
            normalized.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)

        self.edges = frozenset(normalized)
        self.adjacency = tuple(tuple(sorted(x)) for x in neighbors)

    def __eq__(self, other):
        return (isinstance(other, Graph) and
                self.vertex_count == other.vertex_count and
                self.edges == other.edges)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return "Graph(%d, %s)" % (self.vertex_count, self.sorted_edges())

    def __len__(self):
        return self.vertex_count

    @property
    def edge_count(self):
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def degrees(self):
        return [len(x) for x in self.adjacency]

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def max_degree(self):
        if self.vertex_count == 0:
            return 0
        return max(self.degrees())


def is_subcubic(g):
    """
    Returns True if every vertex has degree at most three.
    """
    return g.max_degree() <= MAX_SUBCUBIC_DEGREE


def is_cubic(g):
    return g.vertex_count > 0 and all(d == 3 for d in g.degrees())


def check_subcubic(g):
    if not is_subcubic(g):
        bad = [v for v in range(g.vertex_count)
               if g.degree(v) > MAX_SUBCUBIC_DEGREE]
        raise NotSubcubicError("Vertex %d has degree %d (maximum is %d)" %
                               (bad[0], g.degree(bad[0]),
                                MAX_SUBCUBIC_DEGREE))


def degree_profile(g):
    """
    Returns the DegreeProfile (n0, n1, n2, n3, c) of a subcubic graph.
    """
    check_subcubic(g)
    counts = [0] * (MAX_SUBCUBIC_DEGREE + 1)
    for d in g.degrees():
        counts[d] += 1

    return DegreeProfile(n0=counts[0], n1=counts[1], n2=counts[2],
                         n3=counts[3], c=len(component_vertex_sets(g)))


def component_vertex_sets(g, vertices=None):
    """
    Returns the connected components as sorted lists of vertices, ordered by
    smallest vertex.  If vertices is given, only the subgraph induced by
    those vertices is searched.
    """
    if vertices is None:
        allowed = None
        order = range(g.vertex_count)
    else:
        allowed = set(vertices)
        order = sorted(allowed)

    seen = set()
    result = list()
    for start in order:
        if start in seen:
            continue
        seen.add(start)
        queue = collections.deque([start])
        found = [start]
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u in seen or (allowed is not None and u not in allowed):
                    continue
                seen.add(u)
                found.append(u)
                queue.append(u)
        result.append(sorted(found))

    return result


def components(g):
    """
    Returns the connected components as separate graphs, each renumbered
    0..k-1 in increasing original vertex order.
    """
    return [induced_subgraph(g, vs)[0] for vs in component_vertex_sets(g)]


def is_connected(g):
    return len(component_vertex_sets(g)) <= 1


def two_coloring(g):
    """
    Returns a list of colours 0/1 for a proper 2-colouring, or None if the
    graph is not bipartite.  Each component starts with colour 0 at its
    smallest vertex.
    """
    color = [None] * g.vertex_count
    for start in range(g.vertex_count):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = collections.deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] is None:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None

    return color


def is_bipartite(g):
    return two_coloring(g) is not None


def induced_subgraph(g, vertices):
    """
    Returns (subgraph, index_map) where index_map maps original vertices to
    their new index.  New indices follow increasing original order.
    """
    kept = sorted(set(vertices))
    index_map = dict((v, i) for i, v in enumerate(kept))
    edges = [(index_map[u], index_map[v]) for u, v in g.edges
             if u in index_map and v in index_map]

    return Graph(len(kept), edges), index_map


def delete_vertices(g, vertices):
    """
    Returns (g - vertices, index_map) with the remaining vertices renumbered.
    """
    removed = set(vertices)
    return induced_subgraph(g, [v for v in range(g.vertex_count)
                                if v not in removed])


def relabel(g, permutation):
    """
    Returns the graph where vertex v is renamed permutation[v].
    """
    if sorted(permutation) != list(range(g.vertex_count)):
        raise GraphError("Not a permutation of 0..%d" % (g.vertex_count - 1))

    return Graph(g.vertex_count,
                 [(permutation[u], permutation[v]) for u, v in g.edges])


def disjoint_union(*graphs):
    offset = 0
    edges = list()
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count

    return Graph(offset, edges)


#
# Small named graphs
#

def empty_graph(n=0):
    return Graph(n)


def complete_graph(n):
    return Graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n):
    if n < 3:
        raise GraphError("A simple cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves):
    """
    K_{1,leaves} with the center at vertex 0.
    """
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
