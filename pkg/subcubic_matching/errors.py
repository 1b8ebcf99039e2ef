
class MatchingBoundsError(Exception):
    """
    Base exception class for all errors in subcubic_matching module
    """
    def __init__(self, message, location=None):
        super(MatchingBoundsError, self).__init__(message)
        self.locations = list()
        self.add_location(message)
        if location is not None:
            self.add_location(location)

    def get_display_string(self):
        return "\n".join(self.locations)

    def add_location(self, location):
        self.locations.insert(0, location)

    def get_locations(self):
        return self.locations

    def reraise_with_location(self, location):
        self.add_location(location)
        raise self


#
# Graph level errors
#

class GraphError(MatchingBoundsError):
    """
    Base exception class for all graph level errors
    """
    pass


class NotSubcubicError(GraphError):
    """
    Exception class when a graph has a vertex of degree more than three
    """
    pass


class NotConnectedError(GraphError):
    """
    Exception class when a connected graph is required
    """
    pass


class MalformedGraph6Error(GraphError):
    """
    Exception class for errors decoding a graph6 line.  The byte offset
    of the problem within the line is kept in offset.
    """
    def __init__(self, message, offset=None, location=None):
        if offset is not None:
            message = "%s (at byte %d)" % (message, offset)
        super(MalformedGraph6Error, self).__init__(message, location)
        self.offset = offset


#
# Matching errors
#

class MatchingError(MatchingBoundsError):
    """
    Base exception class for matching computations
    """
    pass


class TooLargeError(MatchingError):
    """
    Exception class when an exponential oracle is asked for a graph beyond
    its guard
    """
    pass


#
# Structure errors
#

class StructureError(MatchingBoundsError):
    """
    Base exception class for Gallai-Edmonds computations
    """
    pass


class DecompositionMismatchError(StructureError):
    """
    Exception class when a decomposition does not match its definition
    """
    pass


#
# Polytope and expression errors
#

class PolytopeError(MatchingBoundsError):
    """
    Base exception class for polyhedral computations
    """
    pass


class UnboundedInputError(PolytopeError):
    """
    Exception class when vertex enumeration finds a recession direction
    """
    pass


class NotInPError(PolytopeError):
    """
    Exception class when a triple is required to lie in P
    """
    pass


class NegativeLambdaError(PolytopeError):
    """
    Exception class when a shift is requested with a negative amount
    """
    pass


class ExpressionError(MatchingBoundsError):
    """
    Base exception class for errors reading fractions, triples and
    half-spaces
    """
    pass


class FractionSyntaxError(ExpressionError):
    """
    Exception class for malformed or inexact number strings
    """
    pass


#
# Family, bound and enumeration errors
#

class FamilyError(MatchingBoundsError):
    """
    Base exception class for extremal family generators
    """
    pass


class InvalidParameterError(FamilyError):
    """
    Exception class when a family parameter violates its range or parity
    """
    pass


class BoundsError(MatchingBoundsError):
    """
    Base exception class for bound evaluation
    """
    pass


class TripleInPError(BoundsError):
    """
    Exception class when a counterexample is requested for a triple of P
    """
    pass


class CounterexampleSearchError(BoundsError):
    """
    Exception class when the closed-form scan gives up
    """
    pass


class EnumerationError(MatchingBoundsError):
    """
    Base exception class for graph enumeration
    """
    pass


class LimitExceededError(EnumerationError):
    """
    Exception class when the enumeration order is above the library cap
    """
    pass


#
# User bound file and report errors
#

class UserBoundsParseError(MatchingBoundsError):
    """
    Exception class for errors parsing bound and polyhedron files
    """
    pass


class ReportError(MatchingBoundsError):
    """
    Exception class when a report does not conform to its schema
    """
    pass
