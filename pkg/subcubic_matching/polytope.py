"""
Exact polyhedra in the coefficient space (x3, x2, x1).

All arithmetic is done on fractions.Fraction values; linear systems are
solved with sympy matrices over the rationals.  A coordinate triple is
ordered (x3, x2, x1), the coefficients of n3, n2 and n1 in a bound.
"""
import collections
import itertools
from fractions import Fraction

from sympy import Matrix, Rational

from .errors import (NegativeLambdaError, NotInPError, PolytopeError,
                     UnboundedInputError)
from .expressions import (VARIABLES, format_fraction, format_term,
                          parse_halfspace, parse_triple)

DIMENSION = 3

P_HALFSPACES = [
    "x3<=4/9",
    "x2<=1/2",
    "x3+x1<=2/3",
    "x3+3x2/2<=1",
    "x3+x2+x1<=1",
    "x3+x2/6<=1/2",
]

NONNEGATIVITY_HALFSPACES = [
    "-x3<=0",
    "-x2<=0",
    "-x1<=0",
]

UNIT_CUBE_HALFSPACES = [
    "x3<=1",
    "-x3<=0",
    "x2<=1",
    "-x2<=0",
    "x1<=1",
    "-x1<=0",
]


class CoefficientTriple(collections.namedtuple("CoefficientTriple",
                                               ["x3", "x2", "x1"])):
    """
    Exact coefficient triple.  Components are coerced to Fraction, and
    triples compare and sort lexicographically as (x3, x2, x1).
    """
    __slots__ = ()

    def __new__(cls, x3, x2, x1):
        return super(CoefficientTriple, cls).__new__(cls, Fraction(x3),
                                                     Fraction(x2),
                                                     Fraction(x1))

    def __str__(self):
        return format_triple(self)

    def dominates(self, other):
        """
        Returns True if self >= other in every coordinate.
        """
        return all(a >= b for a, b in zip(self, other))


class HalfSpace(object):
    """
    The constraint a3*x3 + a2*x2 + a1*x1 <= b with rational data.
    """
    def __init__(self, a3, a2, a1, b):
        self.normal = CoefficientTriple(a3, a2, a1)
        self.b = Fraction(b)
        if all(a == 0 for a in self.normal):
            raise PolytopeError("Half-space normal must be nonzero")

    def __eq__(self, other):
        return (isinstance(other, HalfSpace) and
                self.normal == other.normal and self.b == other.b)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.normal, self.b))

    def __repr__(self):
        return "HalfSpace(%s)" % self.label

    @property
    def label(self):
        return halfspace_label(self)

    def evaluate(self, x):
        return sum(a * value for a, value in zip(self.normal, x))

    def margin(self, x):
        """
        Amount by which x exceeds the bound, positive when violated.
        """
        return self.evaluate(x) - self.b

    def is_satisfied(self, x):
        return self.margin(x) <= 0

    def is_tight(self, x):
        return self.margin(x) == 0


class Polyhedron(object):
    """
    Ordered list of half-spaces.  Indices reported by contains and
    tight_constraints are 1-based positions in this list.
    """
    def __init__(self, halfspaces, name=None):
        self.halfspaces = list(halfspaces)
        self.name = name

    def __len__(self):
        return len(self.halfspaces)

    def __iter__(self):
        return iter(self.halfspaces)

    def __eq__(self, other):
        return (isinstance(other, Polyhedron) and
                self.halfspaces == other.halfspaces)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "Polyhedron(%s)" % ", ".join(h.label for h in self)

    def halfspace(self, index):
        return self.halfspaces[index - 1]

    def labels(self):
        return [h.label for h in self]


MembershipVerdict = collections.namedtuple("MembershipVerdict",
                                           ["inside", "violated", "margins"])


def halfspace_from_text(text):
    return HalfSpace(*parse_halfspace(text))


def halfspace_label(h):
    """
    Renders a half-space as "x3+3x2/2<=1".
    """
    terms = list()
    for coefficient, name in zip(h.normal, VARIABLES):
        if coefficient == 0:
            continue
        term = format_term(coefficient, name)
        if terms and not term.startswith("-"):
            term = "+" + term
        terms.append(term)

    return "%s<=%s" % ("".join(terms), format_fraction(h.b))


def polyhedron_from_labels(labels, name=None):
    return Polyhedron([halfspace_from_text(x) for x in labels], name=name)


def polyhedron_P():
    """
    The six half-spaces of P in their canonical order.
    """
    return polyhedron_from_labels(P_HALFSPACES, name="P")


def polyhedron_P_plus():
    """
    P followed by the three nonnegativity constraints on x3, x2 and x1.
    """
    return polyhedron_from_labels(P_HALFSPACES + NONNEGATIVITY_HALFSPACES,
                                  name="P+")


def unit_cube():
    return polyhedron_from_labels(UNIT_CUBE_HALFSPACES, name="cube")


BUILTIN_POLYHEDRA = collections.OrderedDict([("P", polyhedron_P),
                                             ("P+", polyhedron_P_plus),
                                             ("cube", unit_cube)])


def format_triple(x):
    return ",".join(format_fraction(value) for value in x)


def triple_from_text(text):
    return CoefficientTriple(*parse_triple(text))


def contains(p, x):
    """
    Exact membership test.  Returns a MembershipVerdict listing every
    violated half-space index with its margin.
    """
    x = CoefficientTriple(*x)
    violated = list()
    margins = list()
    for index, h in enumerate(p, start=1):
        margin = h.margin(x)
        if margin > 0:
            violated.append(index)
            margins.append(margin)

    return MembershipVerdict(inside=len(violated) == 0,
                             violated=tuple(violated),
                             margins=tuple(margins))


def describe_verdict(p, verdict):
    if verdict.inside:
        return "inside"
    return "violated: " + ", ".join(p.halfspace(i).label
                                    for i in verdict.violated)


def tight_constraints(p, x):
    return [index for index, h in enumerate(p, start=1) if h.is_tight(x)]


def vertices(p):
    """
    Returns the set of vertices of a pointed polyhedron in three dimensions.
    Every triple of constraints with an invertible system is solved and the
    feasible solutions kept.  Raises UnboundedInputError when a recession
    direction exists.
    """
    rows = [_sympy_row(h) for h in p]
    if len(rows) < DIMENSION or Matrix(rows).rank() < DIMENSION:
        raise UnboundedInputError("Constraint normals do not span three "
                                  "dimensions, the polyhedron has a line")

    found = set()
    for chosen in itertools.combinations(range(len(rows)), DIMENSION):
        system = Matrix([rows[i] for i in chosen])
        if system.rank() < DIMENSION:
            continue
        rhs = Matrix([_to_sympy(p.halfspaces[i].b) for i in chosen])
        solution = system.LUsolve(rhs)
        x = CoefficientTriple(*[_from_sympy(value) for value in solution])
        if contains(p, x).inside:
            found.add(x)

    result = set()
    for x in found:
        tight = tight_constraints(p, x)
        if Matrix([rows[i - 1] for i in tight]).rank() == DIMENSION:
            result.add(x)
        _check_recession(p, rows, x, tight)

    return result


def maximal_vertices(vs):
    """
    Returns the points not dominated coordinatewise by another point.
    """
    vs = set(CoefficientTriple(*v) for v in vs)
    return set(v for v in vs
               if not any(w != v and w.dominates(v) for w in vs))


def project_to_Pplus(x):
    """
    Moves a point of P into P+ with three steps in order: a negative x2 is
    raised to 0, a negative x3 is shifted onto x1, then a negative x1 is
    raised to 0.
    """
    x = CoefficientTriple(*x)
    verdict = contains(polyhedron_P(), x)
    if not verdict.inside:
        raise NotInPError("Point %s is not in P: %s" %
                          (x, describe_verdict(polyhedron_P(), verdict)))

    x3, x2, x1 = x
    if x2 < 0:
        x2 = Fraction(0)
    if x3 < 0:
        x3, x1 = Fraction(0), x1 + x3
    if x1 < 0:
        x1 = Fraction(0)

    return CoefficientTriple(x3, x2, x1)


def shift_transform(x, amount):
    """
    Returns (x3 - amount, x2, x1 + amount).
    """
    amount = Fraction(amount)
    if amount < 0:
        raise NegativeLambdaError("Shift amount must be nonnegative: %s" %
                                  format_fraction(amount))
    x = CoefficientTriple(*x)
    return CoefficientTriple(x.x3 - amount, x.x2, x.x1 + amount)


def convex_combination(u, v, weight):
    """
    Returns weight * u + (1 - weight) * v.
    """
    weight = Fraction(weight)
    return CoefficientTriple(*[weight * a + (1 - weight) * b
                               for a, b in zip(u, v)])


#
# Private functions to do the work
#

def _to_sympy(value):
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def _from_sympy(value):
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def _sympy_row(h):
    return [_to_sympy(a) for a in h.normal]


def _check_recession(p, rows, x, tight):
    for i, j in itertools.combinations(tight, 2):
        pair = Matrix([rows[i - 1], rows[j - 1]])
        if pair.rank() < 2:
            continue
        (direction,) = pair.nullspace()
        for sign in (1, -1):
            d = [sign * value for value in direction]
            if all(sum(a * b for a, b in zip(row, d)) <= 0 for row in rows):
                raise UnboundedInputError(
                    "Recession direction %s from vertex %s" %
                    (format_triple(_from_sympy(v) for v in d), x))
