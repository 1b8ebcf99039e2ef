import collections

from .errors import TooLargeError
from .graph import delete_vertices

BRUTE_FORCE_EDGE_LIMIT = 40
UNMATCHED = -1


class Matching(object):
    """
    A set of pairwise vertex-disjoint edges of a host graph.  This class is
    read-only.
    """
    def __init__(self, edges):
        self.edges = frozenset((min(u, v), max(u, v)) for u, v in edges)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    def __eq__(self, other):
        return isinstance(other, Matching) and self.edges == other.edges

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self):
        return "Matching(%s)" % sorted(self.edges)

    @property
    def size(self):
        return len(self.edges)

    def covered_vertices(self):
        covered = set()
        for u, v in self.edges:
            covered.add(u)
            covered.add(v)
        return covered

    def is_valid_for(self, g):
        """
        Returns True if the edges are disjoint and all belong to g.
        """
        if not all(g.has_edge(u, v) for u, v in self.edges):
            return False
        return len(self.covered_vertices()) == 2 * len(self.edges)


def max_matching(g):
    """
    Returns a maximum Matching of g computed with Edmonds' blossom
    algorithm.  Vertices and neighbour lists are scanned in index order, so
    the result is the same for the same input.
    """
    mate = _greedy_mate(g)
    for root in range(g.vertex_count):
        if mate[root] == UNMATCHED:
            search = _BlossomSearch(g, mate)
            end = search.find_augmenting_path(root)
            if end != UNMATCHED:
                search.augment(end)

    matching = Matching((v, mate[v]) for v in range(g.vertex_count)
                        if mate[v] > v)
    if __debug__:
        assert matching.is_valid_for(g), "invalid matching produced"
    return matching


def matching_number(g):
    return len(max_matching(g))


def brute_force_nu(g, edge_limit=BRUTE_FORCE_EDGE_LIMIT):
    """
    Exact matching number by branch and bound over the edges.  Intended as an
    independent oracle for max_matching on small graphs.
    """
    if g.edge_count > edge_limit:
        raise TooLargeError("Brute force matching limited to %d edges, "
                            "graph has %d" % (edge_limit, g.edge_count))

    # low degree-sum edges first: forced choices get decided early
    edges = sorted(g.edges, key=lambda e: (g.degree(e[0]) + g.degree(e[1]),
                                           e))
    suffix_vertices = [set() for _ in range(len(edges) + 1)]
    for index in range(len(edges) - 1, -1, -1):
        suffix_vertices[index] = suffix_vertices[index + 1] | set(edges[index])

    best = [0]

    def search(index, matched, used):
        if matched > best[0]:
            best[0] = matched
        if index == len(edges):
            return
        remaining = len(suffix_vertices[index] - used)
        if matched + remaining // 2 <= best[0]:
            return
        u, v = edges[index]
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
            search(index + 1, matched + 1, used)
            used.discard(u)
            used.discard(v)
        search(index + 1, matched, used)

    search(0, 0, set())
    return best[0]


def has_perfect_matching(g):
    if g.vertex_count % 2 == 1:
        return False
    return 2 * matching_number(g) == g.vertex_count


def is_hypomatchable(g):
    """
    Returns True if g - v has a perfect matching for every vertex v.
    """
    if g.vertex_count % 2 == 0:
        return False
    for v in range(g.vertex_count):
        if not has_perfect_matching(delete_vertices(g, [v])[0]):
            return False
    return True


def bipartite_max_matching(left_count, right_count, edges):
    """
    Maximum matching of a bipartite graph with sides 0..left_count-1 and
    0..right_count-1 (Hopcroft-Karp).  Returns the list of matched
    (left, right) pairs sorted by left vertex.
    """
    return _HopcroftKarp(left_count, right_count, edges).run()


def bipartite_deficiency(left_count, right_count, edges):
    """
    Hall deficiency of the left side: the maximum of |X| - |N(X)| over all
    left subsets X (including the empty one), which equals the number of
    left vertices left exposed by a maximum matching.
    """
    matched = bipartite_max_matching(left_count, right_count, edges)
    return left_count - len(matched)


def has_positive_surplus(left_count, right_count, edges):
    """
    Returns True if every nonempty left subset X has at least |X| + 1
    neighbours.  Checked by duplicating each left vertex in turn and asking
    for a matching that saturates the enlarged left side.
    """
    edges = list(edges)
    for left in range(left_count):
        duplicate = left_count
        extra = [(duplicate, right) for u, right in edges if u == left]
        if bipartite_deficiency(left_count + 1, right_count,
                                edges + extra) != 0:
            return False
    return True


#
# Private functions to do the work
#

def _greedy_mate(g):
    mate = [UNMATCHED] * g.vertex_count
    for v in range(g.vertex_count):
        if mate[v] != UNMATCHED:
            continue
        for u in g.neighbors(v):
            if mate[u] == UNMATCHED:
                mate[v] = u
                mate[u] = v
                break
    return mate


class _BlossomSearch(object):
    """
    One alternating-tree search from an exposed root.  Blossoms are
    contracted by pointing every vertex of the blossom at a common base.
    """
    def __init__(self, g, mate):
        self.g = g
        self.mate = mate
        n = g.vertex_count
        self.parent = [UNMATCHED] * n
        self.base = list(range(n))
        self.in_tree = [False] * n

    def find_augmenting_path(self, root):
        """
        Returns the exposed vertex ending an augmenting path from root, or
        UNMATCHED.  The path is recorded in self.parent.
        """
        mate = self.mate
        parent = self.parent
        base = self.base
        self.in_tree[root] = True
        queue = collections.deque([root])

        while queue:
            v = queue.popleft()
            for u in self.g.neighbors(v):
                if base[v] == base[u] or mate[v] == u:
                    continue
                if u == root or (mate[u] != UNMATCHED and
                                 parent[mate[u]] != UNMATCHED):
                    # u is an even vertex of the tree: odd cycle found
                    self._contract(v, u, queue)
                elif parent[u] == UNMATCHED:
                    parent[u] = v
                    if mate[u] == UNMATCHED:
                        return u
                    self.in_tree[mate[u]] = True
                    queue.append(mate[u])

        return UNMATCHED

    def augment(self, end):
        """
        Flips the matching along the path from end back to the root.
        """
        v = end
        while v != UNMATCHED:
            pv = self.parent[v]
            next_v = self.mate[pv]
            self.mate[v] = pv
            self.mate[pv] = v
            v = next_v

    def _lowest_common_base(self, a, b):
        mate = self.mate
        seen = [False] * self.g.vertex_count
        while True:
            a = self.base[a]
            seen[a] = True
            if mate[a] == UNMATCHED:
                break
            a = self.parent[mate[a]]
        while True:
            b = self.base[b]
            if seen[b]:
                return b
            b = self.parent[mate[b]]

    def _mark_path(self, v, blossom_base, child, in_blossom):
        while self.base[v] != blossom_base:
            in_blossom[self.base[v]] = True
            in_blossom[self.base[self.mate[v]]] = True
            self.parent[v] = child
            child = self.mate[v]
            v = self.parent[self.mate[v]]

    def _contract(self, v, u, queue):
        blossom_base = self._lowest_common_base(v, u)
        in_blossom = [False] * self.g.vertex_count
        self._mark_path(v, blossom_base, u, in_blossom)
        self._mark_path(u, blossom_base, v, in_blossom)
        for w in range(self.g.vertex_count):
            if in_blossom[self.base[w]]:
                self.base[w] = blossom_base
                if not self.in_tree[w]:
                    self.in_tree[w] = True
                    queue.append(w)


class _HopcroftKarp(object):
    """
    Hopcroft-Karp maximum bipartite matching, layered BFS then DFS.
    """
    def __init__(self, left_count, right_count, edges):
        self.left_count = left_count
        self.adjacency = [list() for _ in range(left_count)]
        for u, v in sorted(set(edges)):
            self.adjacency[u].append(v)
        self.mate_left = [UNMATCHED] * left_count
        self.mate_right = [UNMATCHED] * right_count
        self.dist = [0] * left_count

    def run(self):
        while self._layer():
            for u in range(self.left_count):
                if self.mate_left[u] == UNMATCHED:
                    self._extend(u)

        return [(u, self.mate_left[u]) for u in range(self.left_count)
                if self.mate_left[u] != UNMATCHED]

    def _layer(self):
        infinity = self.left_count + 1
        queue = collections.deque()
        for u in range(self.left_count):
            if self.mate_left[u] == UNMATCHED:
                self.dist[u] = 0
                queue.append(u)
            else:
                self.dist[u] = infinity
        found = False
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                w = self.mate_right[v]
                if w == UNMATCHED:
                    found = True
                elif self.dist[w] == infinity:
                    self.dist[w] = self.dist[u] + 1
                    queue.append(w)
        return found

    def _extend(self, u):
        for v in self.adjacency[u]:
            w = self.mate_right[v]
            if w == UNMATCHED or (self.dist[w] == self.dist[u] + 1 and
                                  self._extend(w)):
                self.mate_left[u] = v
                self.mate_right[v] = u
                return True
        self.dist[u] = self.left_count + 1
        return False
