"""
The parser module.

Reads and writes the polynomial grammar used by every file input::

    x1*x2 - x3^2
    3/2*x1 + (x2 - b)^2

and the ideal file format: a ``ring:`` header line declaring the variables, one
generator per line, and ``#`` comment lines::

    ring: x1..x4, b
    # A[4,7]
    x1*x2
    x2^2 - x1^3
"""

from fractions import Fraction
import re

from .fields import QQ, RationalField
from .polyring import DEGREVLEX_ORDER, Polynomial, PolynomialRing


TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()])|(?P<slash>/)|(?P<bad>\S))"
)

RANGE_RE = re.compile(
    r"^(?P<prefix>[A-Za-z_]+)(?P<start>\d+)\.\.(?P=prefix)?(?P<stop>\d+)$"
)

NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

RING_HEADER = "ring:"

COMMENT = "#"


class ParseError(Exception):
    """Exception raised when text cannot be parsed as a polynomial or ideal."""

    pass


def tokenize(text):
    """
    Return the list of ``(kind, value)`` tokens of `text`.

    Raises:
        ParseError: On a division token or an unexpected character.
    """
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = TOKEN_RE.match(text, position)
        if not match:  # pragma: no cover
            break
        position = match.end()
        if match.group("number") is not None:
            tokens.append(("number", match.group("number")))
        elif match.group("name") is not None:
            tokens.append(("name", match.group("name")))
        elif match.group("op") is not None:
            tokens.append(("op", match.group("op")))
        elif match.group("slash") is not None:
            raise ParseError(
                'Division not supported in "{0}" (only rational literals p/q)'.format(
                    text
                )
            )
        else:
            raise ParseError(
                'Unexpected character "{0}" in "{1}"'.format(match.group("bad"), text)
            )
    return tokens


class _PolynomialParser(object):
    """Recursive descent over the token list.

    Grammar::

        expr   := ["+"|"-"] term (("+"|"-") term)*
        term   := factor ("*" factor)*
        factor := atom ["^" integer]
        atom   := number | name | "(" expr ")"
    """

    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.position = 0

    def peek(self):
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return (None, None)

    def take(self):
        token = self.peek()
        self.position += 1
        return token

    def error(self, message):
        return ParseError('{0} in "{1}"'.format(message, self.text))

    def parse(self):
        if not self.tokens:
            raise self.error("Empty polynomial")
        result = self.expr()
        if self.position != len(self.tokens):
            raise self.error('Unexpected token "{0}"'.format(self.peek()[1]))
        return result

    def expr(self):
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            term = self.term()
            result = result + term if op == "+" else result - term
        return result

    def term(self):
        result = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, value = self.take()
            if kind != "number" or "/" in value:
                raise self.error("Exponent must be a non-negative integer")
            base = base ** int(value)
        return base

    def atom(self):
        kind, value = self.take()
        if kind == "number":
            return self.ring.constant(Fraction(value))
        if kind == "name":
            if not self.ring.has(value):
                raise self.error('Unknown variable "{0}"'.format(value))
            return self.ring.gen(value)
        if (kind, value) == ("op", "("):
            result = self.expr()
            if self.take() != ("op", ")"):
                raise self.error("Missing closing parenthesis")
            return result
        if kind is None:
            raise self.error("Unexpected end of input")
        raise self.error('Unexpected token "{0}"'.format(value))


def parse_polynomial(text, ring):
    """
    Parse `text` as a polynomial of `ring`.

    Args:
        text (str): Polynomial text using the ring's variable names, integer or
            rational literals, ``+ - * ^`` and parentheses.
        ring (PolynomialRing|list): The ring, or a list of variable names (over
            ``Q``).

    Returns:
        Polynomial

    Raises:
        ParseError: On unknown variables, malformed syntax or division.
    """
    if not isinstance(ring, PolynomialRing):
        ring = PolynomialRing(ring)
    return _PolynomialParser(text, ring).parse()


def _format_coefficient(coeff, field):
    if isinstance(field, RationalField):
        return str(coeff)
    value = int(coeff)
    p = field.characteristic
    # Symmetric representative keeps small negative numbers readable.
    if value > p // 2:
        value -= p
    return str(value)


def _format_monomial(exponent, names):
    parts = []
    for name, power in zip(names, exponent):
        if power == 1:
            parts.append(name)
        elif power > 1:
            parts.append("{0}^{1}".format(name, power))
    return "*".join(parts)


def format_polynomial(poly, order=DEGREVLEX_ORDER):
    """
    Return the canonical text of `poly`: terms in descending `order`, coefficient
    ``1`` omitted, rationals as ``p/q``.

    Example:

        >>> ring = PolynomialRing(["x1", "x2", "x3"])
        >>> format_polynomial(parse_polynomial("x1*x2 - x3^2 + 3/2*x1", ring))
        'x1*x2 - x3^2 + 3/2*x1'

    Returns:
        str
    """
    if poly.is_zero():
        return "0"

    field = poly.ring.field
    pieces = []
    for exponent, coeff in poly.sorted_terms(order):
        text = _format_coefficient(coeff, field)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        monomial = _format_monomial(exponent, poly.ring.names)
        if monomial:
            body = monomial if text == "1" else "{0}*{1}".format(text, monomial)
        else:
            body = text
        if not pieces:
            pieces.append("-" + body if negative else body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)


def _expand_names(item):
    match = RANGE_RE.match(item)
    if match:
        start, stop = int(match.group("start")), int(match.group("stop"))
        if stop < start:
            raise ParseError('Empty variable range "{0}"'.format(item))
        return [
            "{0}{1}".format(match.group("prefix"), index)
            for index in range(start, stop + 1)
        ]
    if not NAME_RE.match(item):
        raise ParseError('Invalid variable name "{0}"'.format(item))
    return [item]


def parse_ring_header(line, field=QQ):
    """
    Parse a ``ring: x1..xn, b`` header line.

    Returns:
        PolynomialRing

    Raises:
        ParseError: When the line is not a valid header.
    """
    line = line.strip()
    if not line.lower().startswith(RING_HEADER):
        raise ParseError('Ideal file must start with "ring:", not "{0}"'.format(line))

    names = []
    for item in line[len(RING_HEADER) :].replace(" ", ",").split(","):
        if item:
            names.extend(_expand_names(item))

    if not names:
        raise ParseError("Ring header declares no variables")
    if len(set(names)) != len(names):
        raise ParseError('Duplicate variables in "{0}"'.format(line))

    return PolynomialRing(names, field)


def format_ring_header(ring):
    """Return the ``ring:`` header line for `ring`."""
    return "{0} {1}".format(RING_HEADER, ", ".join(ring.names))


def parse_ideal_text(text, field=QQ):
    """
    Parse the contents of an ideal file.

    Returns:
        tuple: ``(ring, generators)`` with generators a list of
        :class:`Polynomial`.

    Raises:
        ParseError: On a missing header or any malformed generator line.
    """
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith(COMMENT)
    ]
    if not lines:
        raise ParseError("Ideal file is empty")

    ring = parse_ring_header(lines[0], field)
    generators = []
    for number, line in enumerate(lines[1:], start=2):
        try:
            generators.append(parse_polynomial(line, ring))
        except ParseError as exc:
            raise ParseError("Generator {0}: {1}".format(number - 1, exc))
    if not generators:
        raise ParseError("Ideal file declares no generators")
    return ring, generators


def format_ideal_text(ring, generators, comments=()):
    """Return ideal file text for `generators` of `ring`."""
    lines = [format_ring_header(ring)]
    lines.extend("{0} {1}".format(COMMENT, comment) for comment in comments)
    lines.extend(format_polynomial(poly) for poly in generators)
    return "\n".join(lines) + "\n"
