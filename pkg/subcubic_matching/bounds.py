"""
Linear lower bounds on the matching number of subcubic graphs.

A bound nu(G) >= x3*n3 + x2*n2 + x1*n1 - K is described by a BoundSpec.
With per_component set, K is multiplied by the number of components.
"""
import collections
import functools
from fractions import Fraction

from .errors import (BoundsError, CounterexampleSearchError,
                     NotConnectedError, NotInPError, TripleInPError)
from .expressions import format_fraction
from .families import (FAMILY_RULES, FamilySpec, closed_nu, closed_profile,
                       closed_vertex_count, generate,
                       violated_inequality_family)
from .graph import check_subcubic, degree_profile, is_connected, is_cubic
from .matching import matching_number
from .polytope import (CoefficientTriple, contains, convex_combination,
                       describe_verdict, polyhedron_P)

CERTIFY_VERTEX_LIMIT = 60
GENERATE_VERTEX_LIMIT = 2000
MAX_SEARCH_INDEX = 2 ** 64
SERIES_LENGTH = 5

# nu >= (n-1)/3 is this mix of b2 and b5 on graphs without isolated vertices
THEOREM1_B2_WEIGHT = Fraction(1, 4)


class BoundSpec(collections.namedtuple("BoundSpec",
                                       ["triple", "k_const", "per_component",
                                        "name"])):
    """
    Coefficient triple, constant K and whether K is charged per component.
    """
    __slots__ = ()

    def __new__(cls, triple, k_const, per_component=True, name="custom"):
        return super(BoundSpec, cls).__new__(cls,
                                             CoefficientTriple(*triple),
                                             Fraction(k_const),
                                             bool(per_component),
                                             name)

    def describe(self):
        k_text = format_fraction(self.k_const)
        if self.per_component:
            k_text += "*c"
        return "%s: nu >= (%s).(n3,n2,n1) - %s" % (self.name, self.triple,
                                                   k_text)


BoundReport = collections.namedtuple("BoundReport",
                                     ["lhs", "rhs", "slack", "tight"])

CounterexampleResult = collections.namedtuple(
    "CounterexampleResult",
    ["spec", "graph", "report", "certified", "halfspace"])

Theorem1Report = collections.namedtuple(
    "Theorem1Report",
    ["nu", "vertex_count", "cubic", "cubic_report", "general_report",
     "combined_report"])

THEOREM3_BOUNDS = [
    ("b1", (Fraction(0), Fraction(1, 2), Fraction(1, 2)), Fraction(1, 2)),
    ("b2", (Fraction(0), Fraction(1, 3), Fraction(2, 3)), Fraction(1)),
    ("b3", (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)), Fraction(1, 2)),
    ("b4", (Fraction(7, 16), Fraction(3, 8), Fraction(3, 16)),
     Fraction(1, 8)),
    ("b5", (Fraction(4, 9), Fraction(1, 3), Fraction(2, 9)), Fraction(1, 9)),
]


def theorem3_bounds():
    """
    Returns the five sharp bounds b1..b5 with K charged per component.
    """
    return [BoundSpec(triple, k, per_component=True, name=name)
            for name, triple, k in THEOREM3_BOUNDS]


def bound_names():
    return [name for name, _, _ in THEOREM3_BOUNDS]


def bound_by_name(name):
    for spec in theorem3_bounds():
        if spec.name == name.lower():
            return spec
    raise BoundsError("Unknown bound %s, expected one of %s" %
                      (name, ", ".join(bound_names())))


def biedl_bound():
    """
    nu >= (3n + n2)/9 on graphs without isolated vertices, which is the
    triple (1/3, 4/9, 1/3) with K = 0.
    """
    return BoundSpec((Fraction(1, 3), Fraction(4, 9), Fraction(1, 3)), 0,
                     per_component=False, name="biedl")


def bound_rhs(spec, profile):
    x3, x2, x1 = spec.triple
    k = spec.k_const * (profile.c if spec.per_component else 1)
    return x3 * profile.n3 + x2 * profile.n2 + x1 * profile.n1 - k


def evaluate_profile(spec, profile, nu):
    """
    Builds a BoundReport from a degree profile and a matching number.
    """
    rhs = bound_rhs(spec, profile)
    slack = nu - rhs
    return BoundReport(lhs=nu, rhs=rhs, slack=slack, tight=slack == 0)


def evaluate_bound(g, spec, nu=None):
    """
    Evaluates spec on g.  A negative slack is reported, never raised.
    """
    profile = degree_profile(g)
    if nu is None:
        nu = matching_number(g)
    return evaluate_profile(spec, profile, nu)


def is_violation(report):
    return report.slack < 0


def degree_surplus(profile):
    """
    n3 - n1 + 2, which is nonnegative on connected subcubic graphs.
    """
    return profile.n3 - profile.n1 + 2


def corollary4_constant(triple):
    """
    Constant K that makes a triple of P a valid bound on every connected
    subcubic graph: 1 when x3 >= 0, otherwise 2|x3| + 1.
    """
    triple = CoefficientTriple(*triple)
    verdict = contains(polyhedron_P(), triple)
    if not verdict.inside:
        raise NotInPError("Triple %s is not in P: %s" %
                          (triple, describe_verdict(polyhedron_P(), verdict)))
    if triple.x3 >= 0:
        return Fraction(1)
    return 2 * abs(triple.x3) + 1


def corollary4_bound(triple):
    triple = CoefficientTriple(*triple)
    return BoundSpec(triple, corollary4_constant(triple), per_component=False,
                     name="corollary4")


def family_slack(spec, triple, k):
    """
    Closed-form slack of the bound (triple, k) on a family instance.
    """
    bound = BoundSpec(triple, k, per_component=False)
    return evaluate_profile(bound, closed_profile(spec),
                            closed_nu(spec)).slack


def family_slack_series(constructor, triple, k, count=SERIES_LENGTH,
                        start=None):
    """
    Returns [(FamilySpec, slack)] over count consecutive admissible t.
    constructor is a constructor from violated_inequality_family or a
    family id.
    """
    family_id = _family_of(constructor)
    rule = FAMILY_RULES[family_id]
    t = rule.minimum if start is None else start
    series = list()
    while len(series) < count:
        spec = FamilySpec(family_id, t)
        series.append((spec, family_slack(spec, triple, k)))
        t += rule.step
    return series


def choose_violated_halfspace(triple):
    """
    Index of the half-space of P violated by the largest margin, lowest
    index on ties.  Raises TripleInPError if the triple is in P.
    """
    triple = CoefficientTriple(*triple)
    verdict = contains(polyhedron_P(), triple)
    if verdict.inside:
        raise TripleInPError("Triple %s is in P, every bound with it holds "
                             "up to a constant" % str(triple))
    best = max(zip(verdict.margins, [-i for i in verdict.violated]))
    return -best[1]


def counterexample(triple, k, certify_limit=CERTIFY_VERTEX_LIMIT,
                   generate_limit=GENERATE_VERTEX_LIMIT,
                   max_index=MAX_SEARCH_INDEX):
    """
    Returns a CounterexampleResult: the smallest admissible instance of the
    family mapped to the chosen violated half-space whose closed forms give
    nu < x3*n3 + x2*n2 + x1*n1 - k.  Instances up to certify_limit vertices
    are also checked with the matching engine.
    """
    triple = CoefficientTriple(*triple)
    k = Fraction(k)
    index = choose_violated_halfspace(triple)
    constructor = violated_inequality_family(index)
    rule = FAMILY_RULES[_family_of(constructor)]

    def slack_at(position):
        return family_slack(constructor(rule.minimum + rule.step * position),
                            triple, k)

    position = _first_negative(slack_at, max_index)
    spec = constructor(rule.minimum + rule.step * position)
    bound = BoundSpec(triple, k, per_component=False)
    vertex_count = closed_vertex_count(spec)

    graph = None
    if vertex_count <= generate_limit:
        graph = generate(spec)

    certified = vertex_count <= certify_limit
    if certified:
        report = evaluate_bound(graph, bound)
        if degree_profile(graph) != closed_profile(spec) or \
                report.lhs != closed_nu(spec):
            raise CounterexampleSearchError(
                "Closed forms of %s disagree with the generated graph" %
                str(spec))
    else:
        report = evaluate_profile(bound, closed_profile(spec),
                                  closed_nu(spec))

    if not is_violation(report):
        raise CounterexampleSearchError("Instance %s does not violate the "
                                        "bound" % str(spec))

    return CounterexampleResult(spec=spec, graph=graph, report=report,
                                certified=certified, halfspace=index)


def theorem1_check(g):
    """
    Evaluates nu >= 4(n-1)/9 (cubic graphs only) and nu >= (n-1)/3 on a
    connected subcubic graph, together with the b2/b5 mix that implies the
    second one.
    """
    check_subcubic(g)
    if not is_connected(g):
        raise NotConnectedError("Graph with %d vertices is not connected" %
                                g.vertex_count)

    n = g.vertex_count
    nu = matching_number(g)
    profile = degree_profile(g)
    cubic = is_cubic(g)

    cubic_report = None
    if cubic:
        cubic_report = _report(nu, Fraction(4 * (n - 1), 9))
    general_report = _report(nu, Fraction(n - 1, 3))

    b2 = bound_by_name("b2")
    b5 = bound_by_name("b5")
    mixed = BoundSpec(convex_combination(b2.triple, b5.triple,
                                         THEOREM1_B2_WEIGHT),
                      THEOREM1_B2_WEIGHT * b2.k_const +
                      (1 - THEOREM1_B2_WEIGHT) * b5.k_const,
                      per_component=True, name="b2+b5")
    combined_report = evaluate_profile(mixed, profile, nu)

    return Theorem1Report(nu=nu, vertex_count=n, cubic=cubic,
                          cubic_report=cubic_report,
                          general_report=general_report,
                          combined_report=combined_report)


#
# Private functions to do the work
#

def _report(nu, rhs):
    slack = nu - rhs
    return BoundReport(lhs=nu, rhs=rhs, slack=slack, tight=slack == 0)


def _family_of(constructor):
    if isinstance(constructor, functools.partial):
        (family_id,) = constructor.args
        return family_id
    family_id = str(constructor).upper()
    if family_id not in FAMILY_RULES:
        raise BoundsError("Unknown family %s" % constructor)
    return family_id


def _first_negative(slack_at, max_index):
    # slack strictly decreases along the admissible sequence
    if slack_at(0) < 0:
        return 0
    low = 0
    high = 1
    while slack_at(high) >= 0:
        low = high
        high *= 2
        if high > max_index:
            raise CounterexampleSearchError(
                "No violating instance within %d admissible steps" %
                max_index)
    while high - low > 1:
        middle = (low + high) // 2
        if slack_at(middle) < 0:
            high = middle
        else:
            low = middle
    return high
