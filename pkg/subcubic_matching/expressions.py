from fractions import Fraction

from lark import Lark, Transformer
from lark.exceptions import LarkError, VisitError

from .errors import ExpressionError, FractionSyntaxError

VARIABLES = ("x3", "x2", "x1")
DECIMAL_PLACES = 6

expression_grammar = r"""

    fraction_input  : fraction
    triple_input    : fraction "," fraction "," fraction
    halfspace_input : first_term signed_term* "<=" fraction

    fraction        : SIGN? INT ( "/" INT )?
    first_term      : SIGN? term_body
    signed_term     : SIGN term_body
    term_body       : INT? VARIABLE ( "/" INT )?

    SIGN            : "+" | "-"
    VARIABLE        : "x3" | "x2" | "x1"
    INT             : /[0-9]+/

    %import common.WS
    %ignore WS

    """

fraction_parser = Lark(expression_grammar, start="fraction_input",
                       parser="lalr")
triple_parser = Lark(expression_grammar, start="triple_input",
                     parser="lalr")
halfspace_parser = Lark(expression_grammar, start="halfspace_input",
                        parser="lalr")


class ExpressionBuilder(Transformer):
    """
    Private class turning expression trees into Fractions and coefficient
    tuples
    """

    def fraction_input(self, items):
        (value,) = items
        return value

    def triple_input(self, items):
        return tuple(items)

    def halfspace_input(self, items):
        coefficients = dict((name, Fraction(0)) for name in VARIABLES)
        for name, value in items[:-1]:
            coefficients[name] += value
        bound = items[-1]
        return tuple(coefficients[name] for name in VARIABLES) + (bound,)

    def fraction(self, items):
        sign = 1
        if items[0].type == "SIGN":
            sign = -1 if items[0].value == "-" else 1
            items = items[1:]
        numerator = int(items[0].value)
        denominator = int(items[1].value) if len(items) > 1 else 1
        if denominator == 0:
            raise FractionSyntaxError("Zero denominator")
        return sign * Fraction(numerator, denominator)

    def first_term(self, items):
        if len(items) == 2:
            (sign, (name, value)) = items
            if sign.value == "-":
                value = -value
            return (name, value)
        (term,) = items
        return term

    def signed_term(self, items):
        return self.first_term(items)

    def term_body(self, items):
        numerator = 1
        denominator = 1
        name = None
        seen_variable = False
        for token in items:
            if token.type == "VARIABLE":
                name = token.value
                seen_variable = True
            elif seen_variable:
                denominator = int(token.value)
            else:
                numerator = int(token.value)
        if denominator == 0:
            raise FractionSyntaxError("Zero denominator")
        return (name, Fraction(numerator, denominator))


def parse_fraction(text):
    """
    Parses an exact number written as "p/q" or as an integer.  Decimal
    notation is rejected.
    """
    return _parse(fraction_parser, text, "fraction")


def parse_triple(text):
    """
    Parses "a,b,c" into a tuple of three Fractions (x3, x2, x1).
    """
    return _parse(triple_parser, text, "triple")


def parse_halfspace(text):
    """
    Parses a linear constraint such as "x3+3x2/2<=1" into the tuple
    (a3, a2, a1, b).  Repeated variables are summed.
    """
    return _parse(halfspace_parser, text, "half-space")


def format_fraction(value):
    """
    Renders an exact value as "p/q", or "p" when the value is an integer.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def format_decimal(value, places=DECIMAL_PLACES):
    """
    Display-only decimal rendering prefixed with "~", rounded half away from
    zero.
    """
    value = Fraction(value)
    scale = 10 ** places
    magnitude = abs(value) * scale
    rounded = int(magnitude + Fraction(1, 2))
    sign = "-" if value < 0 and rounded != 0 else ""
    whole, part = divmod(rounded, scale)
    return "~%s%d.%0*d" % (sign, whole, places, part)


def format_term(coefficient, name):
    """
    Renders a single coefficient and variable as it would appear in a
    half-space label, without a leading "+".
    """
    coefficient = Fraction(coefficient)
    sign = "-" if coefficient < 0 else ""
    magnitude = abs(coefficient)
    numerator = "" if magnitude.numerator == 1 else str(magnitude.numerator)
    denominator = ("" if magnitude.denominator == 1 else
                   "/%d" % magnitude.denominator)
    return "%s%s%s%s" % (sign, numerator, name, denominator)


#
# Private functions to do the work
#

def _parse(parser, text, kind):
    if not isinstance(text, str):
        raise ExpressionError("Expected a %s string, got %r" % (kind, text))
    try:
        tree = parser.parse(text)
        return ExpressionBuilder().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, ExpressionError):
            raise FractionSyntaxError("%s in %s %r" % (str(e.orig_exc),
                                                       kind, text))
        raise ExpressionError(str(e))
    except FractionSyntaxError as e:
        raise FractionSyntaxError("%s in %s %r" % (str(e), kind, text))
    except LarkError as e:
        if "." in text:
            raise FractionSyntaxError(
                "Decimal notation is not accepted, use p/q: %r" % text)
        raise FractionSyntaxError("Invalid %s %r: %s" %
                                  (kind, text, str(e).strip()))
