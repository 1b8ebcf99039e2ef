"""
The six extremal families of connected subcubic graphs, with their closed
form degree profiles and matching numbers.

Vertex numbering is fixed per family:
  G1  root 0, then the levels in breadth-first order
  G2  G1(t), then four gadget vertices (a, b, c, d) per leaf in leaf order
  G3  cycle 0..2t-1, then pendant 2t+j attached to cycle vertex 2j
  G4  G3(t), then four gadget vertices per pendant in pendant order
  G5  the t vertices of H, then one vertex per edge of H (cycle edges
      first, then the chords)
  G6  the cycle 0..t-1
"""
import collections
import functools
import itertools

from .errors import InvalidParameterError
from .graph import DegreeProfile, Graph

FAMILY_IDS = ("G1", "G2", "G3", "G4", "G5", "G6")

FamilyRule = collections.namedtuple("FamilyRule",
                                    ["minimum", "step", "description"])

FAMILY_RULES = {
    "G1": FamilyRule(1, 2, "t must be odd and >= 1"),
    "G2": FamilyRule(1, 2, "t must be odd and >= 1"),
    "G3": FamilyRule(2, 1, "t must be >= 2"),
    "G4": FamilyRule(2, 1, "t must be >= 2"),
    "G5": FamilyRule(4, 2, "t must be even and >= 4"),
    "G6": FamilyRule(3, 2, "t must be odd and >= 3"),
}

# Index of the half-space of P (canonical order) forced by each family
HALFSPACE_FAMILIES = {
    1: "G2",
    2: "G6",
    3: "G1",
    4: "G5",
    5: "G3",
    6: "G4",
}

GADGET_J_SIZE = 5


class FamilySpec(collections.namedtuple("FamilySpec", ["family_id", "t"])):
    """
    A family identifier and its parameter.  Construction checks the range
    and parity of t.
    """
    __slots__ = ()

    def __new__(cls, family_id, t):
        family_id = str(family_id).upper()
        if family_id not in FAMILY_RULES:
            raise InvalidParameterError("Unknown family %s, expected one of "
                                        "%s" % (family_id,
                                                ", ".join(FAMILY_IDS)))
        if isinstance(t, bool) or int(t) != t:
            raise InvalidParameterError("%s: t must be an integer, got %r" %
                                        (family_id, t))
        t = int(t)
        if not is_admissible(family_id, t):
            raise InvalidParameterError(
                "%s: %s, got %d" % (family_id,
                                    FAMILY_RULES[family_id].description, t))
        return super(FamilySpec, cls).__new__(cls, family_id, t)

    def __str__(self):
        return "%s(%d)" % (self.family_id, self.t)


def is_admissible(family_id, t):
    rule = FAMILY_RULES[family_id]
    return t >= rule.minimum and (t - rule.minimum) % rule.step == 0


def admissible_values(family_id, max_vertices=None, start=None):
    """
    Yields the admissible t of a family in increasing order, beginning at
    the first admissible value >= start.  When max_vertices is given the
    sequence stops before the first instance with more vertices.
    """
    family_id = str(family_id).upper()
    if family_id not in FAMILY_RULES:
        raise InvalidParameterError("Unknown family %s" % family_id)
    rule = FAMILY_RULES[family_id]
    t = rule.minimum
    if start is not None and start > t:
        t += ((start - t + rule.step - 1) // rule.step) * rule.step
    while True:
        spec = FamilySpec(family_id, t)
        if max_vertices is not None and \
                closed_vertex_count(spec) > max_vertices:
            return
        yield t
        t += rule.step


def generate(spec):
    """
    Builds the graph of a FamilySpec.
    """
    spec = FamilySpec(*spec)
    return _GENERATORS[spec.family_id](spec.t)


def closed_profile(spec):
    """
    Returns the DegreeProfile of the family instance from its closed form.
    """
    family_id, t = FamilySpec(*spec)
    if family_id == "G1":
        return _profile(n1=3 * 2 ** t, n3=3 * 2 ** t - 2)
    if family_id == "G2":
        return _profile(n3=9 * 2 ** (t + 1) - 2)
    if family_id == "G3":
        return _profile(n1=t, n2=t, n3=t)
    if family_id == "G4":
        return _profile(n2=t, n3=6 * t)
    if family_id == "G5":
        return _profile(n2=3 * t // 2, n3=t)
    return _profile(n2=t)


def closed_vertex_count(spec):
    profile = closed_profile(spec)
    return profile.n0 + profile.n1 + profile.n2 + profile.n3


def closed_nu(spec):
    """
    Returns the matching number of the family instance from its closed form.
    """
    family_id, t = FamilySpec(*spec)
    if family_id == "G1":
        return 2 ** (t + 1) - 1
    if family_id == "G2":
        return 2 ** (t + 3) - 1
    if family_id == "G3":
        return t
    if family_id == "G4":
        return 3 * t
    if family_id == "G5":
        return t
    return (t - 1) // 2


def violated_inequality_family(index):
    """
    Returns a FamilySpec constructor, taking t, for the family whose
    instances force half-space index of P.
    """
    if index not in HALFSPACE_FAMILIES:
        raise InvalidParameterError("Half-space index must be 1..%d, got %r"
                                    % (len(HALFSPACE_FAMILIES), index))
    return functools.partial(FamilySpec, HALFSPACE_FAMILIES[index])


def halfspace_for_family(family_id):
    for index, mapped in HALFSPACE_FAMILIES.items():
        if mapped == family_id:
            return index
    raise InvalidParameterError("Unknown family %s" % family_id)


def gadget_j():
    """
    K4 with the edge a-b subdivided by x.  Vertices are x=0, a=1, b=2, c=3,
    d=4; x is the only vertex of degree two.
    """
    return Graph(GADGET_J_SIZE, _gadget_edges(0, [1, 2, 3, 4]))


def bipartite_witness(spec):
    """
    Returns the colour class that makes G1, G3 and G5 bipartite (even levels
    of the tree, degree-3 cycle vertices, vertices of H), or None for the
    other families.
    """
    family_id, t = FamilySpec(*spec)
    if family_id == "G1":
        levels = _tree_levels(t)
        return frozenset(itertools.chain.from_iterable(
            levels[i] for i in range(0, t, 2)))
    if family_id == "G3":
        return frozenset(range(0, 2 * t, 2))
    if family_id == "G5":
        return frozenset(range(t))
    return None


#
# Private functions to do the work
#

def _profile(n1=0, n2=0, n3=0):
    return DegreeProfile(n0=0, n1=n1, n2=n2, n3=n3, c=1)


def _gadget_edges(x, new_vertices):
    a, b, c, d = new_vertices
    return [(x, a), (x, b), (a, c), (a, d), (b, c), (b, d), (c, d)]


def _graft_gadgets(vertex_count, edges, attach_points):
    edges = list(edges)
    for x in attach_points:
        new_vertices = list(range(vertex_count, vertex_count + 4))
        edges.extend(_gadget_edges(x, new_vertices))
        vertex_count += 4
    return Graph(vertex_count, edges)


def _tree_levels(t):
    levels = list()
    next_vertex = 1
    for i in range(t + 1):
        size = 3 * 2 ** i
        levels.append(list(range(next_vertex, next_vertex + size)))
        next_vertex += size
    return levels


def _tree_edges(t):
    levels = _tree_levels(t)
    edges = [(0, v) for v in levels[0]]
    for i in range(1, t + 1):
        for position, v in enumerate(levels[i]):
            edges.append((levels[i - 1][position // 2], v))
    return levels, edges


def _generate_g1(t):
    levels, edges = _tree_edges(t)
    return Graph(levels[-1][-1] + 1, edges)


def _generate_g2(t):
    levels, edges = _tree_edges(t)
    return _graft_gadgets(levels[-1][-1] + 1, edges, levels[-1])


def _pendant_cycle_edges(t):
    cycle = 2 * t
    edges = [(i, (i + 1) % cycle) for i in range(cycle)]
    edges.extend((2 * j, cycle + j) for j in range(t))
    return edges


def _generate_g3(t):
    return Graph(3 * t, _pendant_cycle_edges(t))


def _generate_g4(t):
    pendants = range(2 * t, 3 * t)
    return _graft_gadgets(3 * t, _pendant_cycle_edges(t), pendants)


def _generate_g5(t):
    h_edges = [(i, (i + 1) % t) for i in range(t)]
    h_edges.extend((i, i + t // 2) for i in range(t // 2))
    edges = list()
    for k, (u, v) in enumerate(h_edges):
        middle = t + k
        edges.append((u, middle))
        edges.append((middle, v))
    return Graph(t + len(h_edges), edges)


def _generate_g6(t):
    return Graph(t, [(i, (i + 1) % t) for i in range(t)])


_GENERATORS = {
    "G1": _generate_g1,
    "G2": _generate_g2,
    "G3": _generate_g3,
    "G4": _generate_g4,
    "G5": _generate_g5,
    "G6": _generate_g6,
}
