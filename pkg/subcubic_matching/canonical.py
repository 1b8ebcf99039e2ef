"""
Canonical labelling by individualization and refinement.

The canonical form of a connected graph is the relabelling whose upper
triangle, read in graph6 order, is the largest binary number among the
leaves of the search tree.  Leaves that tie with the best one give
automorphisms, and a cell member in the orbit of an already searched member
is skipped.  Disconnected graphs are labelled component by component.
"""
from .graph import Graph, component_vertex_sets, induced_subgraph
from .graph6 import emit_graph6


def canonical_form(g):
    """
    Returns a graph isomorphic to g that is identical for all graphs
    isomorphic to g.
    """
    pieces = list()
    for vertices in component_vertex_sets(g):
        component = induced_subgraph(g, vertices)[0]
        order = _canonical_order(component)
        pieces.append((component.vertex_count,
                       _certificate(component, order),
                       _relabelled_edges(component, order)))

    pieces.sort(key=lambda piece: (piece[0], piece[1]))
    offset = 0
    edges = list()
    for size, _, piece_edges in pieces:
        edges.extend((u + offset, v + offset) for u, v in piece_edges)
        offset += size

    return Graph(offset, edges)


def canonical_key(g):
    """
    graph6 bytes of the canonical form, usable as a dictionary key.
    """
    return emit_graph6(canonical_form(g))


def are_isomorphic(g, h):
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    return canonical_key(g) == canonical_key(h)


#
# Private functions to do the work
#

def _refine(g, partition):
    """
    Splits cells by the number of neighbours in every cell until the
    partition is equitable.  Split pieces keep the position of their cell
    and are ordered by their neighbour counts.
    """
    partition = [list(cell) for cell in partition]
    changed = True
    while changed:
        changed = False
        cell_of = dict()
        for index, cell in enumerate(partition):
            for v in cell:
                cell_of[v] = index

        refined = list()
        for cell in partition:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = dict()
            for v in cell:
                counts = [0] * len(partition)
                for u in g.neighbors(v):
                    counts[cell_of[u]] += 1
                groups.setdefault(tuple(counts), list()).append(v)
            if len(groups) > 1:
                changed = True
            for signature in sorted(groups):
                refined.append(groups[signature])
        partition = refined

    return partition


def _canonical_order(g):
    best = _SearchState()
    _search(g, [list(range(g.vertex_count))], [], best)
    return best.order


class _SearchState(object):
    """
    Best leaf found so far, plus the automorphisms read off leaves whose
    certificate ties with the best one.
    """
    def __init__(self):
        self.certificate = None
        self.order = None
        self.automorphisms = list()

    def offer(self, order, certificate):
        if self.certificate is None or certificate > self.certificate:
            self.certificate = certificate
            self.order = order
        elif certificate == self.certificate and order != self.order:
            mapping = list(range(len(order)))
            for v, u in zip(self.order, order):
                mapping[v] = u
            self.automorphisms.append(mapping)

    def orbit_roots(self, fixed, vertex_count):
        """
        Labels each vertex with a representative of its orbit under the
        known automorphisms that fix every vertex in fixed.
        """
        parent = list(range(vertex_count))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for mapping in self.automorphisms:
            if any(mapping[v] != v for v in fixed):
                continue
            for v, u in enumerate(mapping):
                root_v = find(v)
                root_u = find(u)
                if root_v != root_u:
                    parent[root_u] = root_v

        return [find(v) for v in range(vertex_count)]


def _search(g, partition, fixed, best):
    partition = _refine(g, partition)
    target = None
    for index, cell in enumerate(partition):
        if len(cell) > 1:
            target = index
            break

    if target is None:
        order = [cell[0] for cell in partition]
        best.offer(order, _certificate(g, order))
        return

    cell = partition[target]
    searched = list()
    for v in cell:
        # An automorphism fixing the path so far maps v's subtree onto the
        # subtree of any vertex in its orbit
        if searched:
            roots = best.orbit_roots(fixed, g.vertex_count)
            if roots[v] in set(roots[u] for u in searched):
                continue
        searched.append(v)
        rest = [u for u in cell if u != v]
        _search(g, partition[:target] + [[v], rest] + partition[target + 1:],
                fixed + [v], best)


def _certificate(g, order):
    value = 0
    for j in range(1, len(order)):
        for i in range(j):
            value = (value << 1) | (1 if g.has_edge(order[i], order[j])
                                    else 0)
    return value


def _relabelled_edges(g, order):
    position = dict((v, i) for i, v in enumerate(order))
    return [(position[u], position[v]) for u, v in g.edges]
