import collections
import itertools
import random

from .canonical import canonical_form, canonical_key
from .errors import EnumerationError, LimitExceededError
from .graph import MAX_SUBCUBIC_DEGREE, Graph, relabel
from .graph6 import read_graph6_file
from .logger import Logger

MAX_ENUMERATION_ORDER = 12


class EnumerationConfig(collections.namedtuple("EnumerationConfig",
                                               ["max_n", "connected_only",
                                                "canonical_dedup"])):
    """
    Options for enumerate_subcubic.  max_n must be between 1 and the library
    cap of 12.
    """
    __slots__ = ()

    def __new__(cls, max_n, connected_only=True, canonical_dedup=True):
        max_n = int(max_n)
        if max_n < 1:
            raise EnumerationError("Maximum order must be at least 1: %d" %
                                   max_n)
        if max_n > MAX_ENUMERATION_ORDER:
            raise LimitExceededError(
                "Enumeration is limited to %d vertices, got %d.  Use an "
                "external graph6 corpus for larger orders" %
                (MAX_ENUMERATION_ORDER, max_n))
        return super(EnumerationConfig, cls).__new__(cls, max_n,
                                                     bool(connected_only),
                                                     bool(canonical_dedup))


class GraphEnumerator(object):
    """
    Generates subcubic graphs level by level.  Every graph on n vertices is
    obtained from one on n - 1 vertices by adding a vertex joined to some
    vertices of degree below three, so the levels are complete.  Each level
    is reduced to one graph per isomorphism class by canonical form.
    """

    def __init__(self):
        self.log = Logger()
        self.log.set_to_stdout("ERROR", enabled=True)

    def set_logger(self, logger):
        """
        Set a custom logger for progress messages.  This should be based on
        the logging Python library.
        """
        self.log = logger

    def enumerate(self, cfg):
        """
        Yields the graphs for cfg ordered by vertex count, then by canonical
        graph6 key.  With canonical_dedup off the graphs are only
        deduplicated as labelled graphs.
        """
        level = [Graph(1)]
        for n in range(1, cfg.max_n + 1):
            if n > 1:
                level = self._next_level(level, cfg)
            self.log.info("Order %d: %d graphs" % (n, len(level)))
            for g in level:
                yield g

    def count_by_order(self, cfg):
        """
        Returns an ordered dictionary of vertex count to number of graphs.
        """
        counts = collections.OrderedDict((n, 0)
                                         for n in range(1, cfg.max_n + 1))
        for g in self.enumerate(cfg):
            counts[g.vertex_count] += 1
        return counts

    def _next_level(self, level, cfg):
        seen = dict()
        minimum_attachments = 1 if cfg.connected_only else 0
        for g in level:
            for child in _augmentations(g, minimum_attachments):
                if cfg.canonical_dedup:
                    key = canonical_key(child)
                    if key not in seen:
                        seen[key] = canonical_form(child)
                else:
                    seen.setdefault(child, child)

        if cfg.canonical_dedup:
            return [seen[key] for key in sorted(seen)]
        return sorted(seen.values(), key=lambda g: g.sorted_edges())


def enumerate_subcubic(cfg):
    """
    Streams every subcubic graph (connected ones only by default) on at
    most cfg.max_n vertices, one per isomorphism class.
    """
    return GraphEnumerator().enumerate(cfg)


def random_subcubic(n, seed):
    """
    Returns a pseudorandom connected subcubic graph on n vertices.  A random
    spanning tree with degrees capped at three is grown first, random extra
    edges between vertices of degree below three follow, and the vertices
    are shuffled.  The same (n, seed) always gives the same graph.
    """
    if n < 1:
        raise EnumerationError("Random graphs need at least one vertex: %d"
                               % n)
    rng = random.Random(seed)
    degree = [0] * n
    edges = set()

    for v in range(1, n):
        open_vertices = [u for u in range(v)
                         if degree[u] < MAX_SUBCUBIC_DEGREE]
        u = rng.choice(open_vertices)
        edges.add((u, v))
        degree[u] += 1
        degree[v] += 1

    for _ in range(rng.randint(0, (n + 2) // 2)):
        candidates = [(u, v) for u, v in itertools.combinations(range(n), 2)
                      if degree[u] < MAX_SUBCUBIC_DEGREE and
                      degree[v] < MAX_SUBCUBIC_DEGREE and
                      (u, v) not in edges]
        if not candidates:
            break
        u, v = rng.choice(candidates)
        edges.add((u, v))
        degree[u] += 1
        degree[v] += 1

    permutation = list(range(n))
    rng.shuffle(permutation)
    return relabel(Graph(n, edges), permutation)


def read_corpus(path):
    """
    Streams Graph6Entry records from an external graph6 corpus.
    """
    return read_graph6_file(path)


#
# Private functions to do the work
#

def _augmentations(g, minimum_attachments):
    n = g.vertex_count
    open_vertices = [v for v in range(n)
                     if g.degree(v) < MAX_SUBCUBIC_DEGREE]
    edges = list(g.edges)
    for size in range(minimum_attachments, MAX_SUBCUBIC_DEGREE + 1):
        for attached in itertools.combinations(open_vertices, size):
            yield Graph(n + 1, edges + [(v, n) for v in attached])
