"""
The polyring module.

Exact sparse multivariate polynomials over :mod:`gorlocus.fields`. A polynomial
is a map from exponent tuples to nonzero coefficients; the exponent tuple has one
entry per ring variable. Polynomials are immutable and only combine with
polynomials of the same ring.
"""

from fractions import Fraction
import math

from .fields import QQ, ModInt, RationalField
from .helpers import divisors


DEGREVLEX = "degrevlex"
LEX = "lex"
ELIMINATION = "elimination"

ORDER_KINDS = (DEGREVLEX, LEX, ELIMINATION)

SCALAR_TYPES = (int, Fraction, ModInt)


class RingMismatchError(ValueError):
    """Exception raised when polynomials over different rings are combined."""

    pass


class NotSkewSymmetricError(ValueError):
    """Exception raised when a matrix expected to be skew-symmetric is not."""

    pass


def degrevlex_key(exponent):
    """Sort key of the graded reverse lexicographic order."""
    return (sum(exponent), tuple(-e for e in reversed(exponent)))


class MonomialOrder(object):
    """
    A monomial order on exponent tuples.

    The elimination order compares the first `block` variables by degrevlex and
    breaks ties by degrevlex on the remaining ones, so any monomial involving the
    first block is larger than every monomial that does not.

    Args:
        kind (str, optional): One of ``"degrevlex"``, ``"lex"``, ``"elimination"``.
            Defaults to ``"degrevlex"``.
        block (int, optional): Size of the first block for the elimination order.
    """

    __slots__ = ("kind", "block", "key")

    def __init__(self, kind=DEGREVLEX, block=0):
        if kind not in ORDER_KINDS:
            raise ValueError(
                'Monomial order must be one of {0}, not "{1}"'.format(
                    ", ".join(ORDER_KINDS), kind
                )
            )
        if kind == ELIMINATION and block < 1:
            raise ValueError(
                "Elimination block must be positive, not {0}".format(block)
            )

        self.kind = kind
        self.block = block if kind == ELIMINATION else 0

        if kind == DEGREVLEX:
            self.key = degrevlex_key
        elif kind == LEX:
            self.key = tuple
        else:
            self.key = self._elimination_key

    def _elimination_key(self, exponent):
        return (
            degrevlex_key(exponent[: self.block]),
            degrevlex_key(exponent[self.block :]),
        )

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.block == other.block
        )

    def __hash__(self):
        return hash((self.kind, self.block))

    def __repr__(self):
        if self.kind == ELIMINATION:
            return "MonomialOrder({0!r}, block={1})".format(self.kind, self.block)
        return "MonomialOrder({0!r})".format(self.kind)


DEGREVLEX_ORDER = MonomialOrder(DEGREVLEX)
LEX_ORDER = MonomialOrder(LEX)


def elimination_order(block):
    """Return the elimination order for the first `block` variables."""
    return MonomialOrder(ELIMINATION, block)


class PolynomialRing(object):
    """
    A polynomial ring ``field[names]``.

    Args:
        names (list): Variable names, in exponent order.
        field (RationalField|PrimeField, optional): Coefficient field. Defaults to
            ``Q``.
    """

    __slots__ = ("names", "field", "_index")

    def __init__(self, names, field=QQ):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("Duplicate variable names in {0}".format(names))

        self.names = names
        self.field = field
        self._index = {name: index for index, name in enumerate(names)}

    @property
    def ngens(self):
        return len(self.names)

    @property
    def gens(self):
        return tuple(self.gen(index) for index in range(self.ngens))

    def index(self, name):
        """Return the position of variable `name`."""
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(
                'Unknown variable "{0}" in ring ({1})'.format(
                    name, ", ".join(self.names)
                )
            )

    def has(self, name):
        return name in self._index

    def gen(self, name):
        """Return the variable with the given name or index as a polynomial."""
        index = name if isinstance(name, int) else self.index(name)
        exponent = [0] * self.ngens
        exponent[index] = 1
        return Polynomial._make(self, {tuple(exponent): self.field.one})

    @property
    def zero(self):
        return Polynomial._make(self, {})

    @property
    def one(self):
        return self.constant(1)

    @property
    def unit_exponent(self):
        return (0,) * self.ngens

    def constant(self, value):
        """Return the constant polynomial `value`."""
        value = self.field(value)
        if not value:
            return self.zero
        return Polynomial._make(self, {self.unit_exponent: value})

    def monomial(self, exponent, coefficient=1):
        """Return ``coefficient * x^exponent``."""
        return Polynomial(self, {tuple(exponent): coefficient})

    def __call__(self, value):
        """
        Coerce `value` into the ring.

        Strings are parsed with :func:`gorlocus.parser.parse_polynomial`.
        """
        if isinstance(value, Polynomial):
            if value.ring == self:
                return value
            return self.convert(value)
        if isinstance(value, str):
            from .parser import parse_polynomial

            return parse_polynomial(value, self)
        return self.constant(value)

    def extend(self, names, prepend=False):
        """Return a ring with extra variables `names` before or after these ones."""
        names = tuple(names)
        if prepend:
            return PolynomialRing(names + self.names, self.field)
        return PolynomialRing(self.names + names, self.field)

    def drop(self, names):
        """Return the ring without the variables `names`."""
        names = set(names)
        return PolynomialRing([n for n in self.names if n not in names], self.field)

    def with_field(self, field):
        return PolynomialRing(self.names, field)

    def convert(self, poly):
        """
        Return `poly` rewritten in this ring, matching variables by name.

        Raises:
            RingMismatchError: When `poly` uses a variable this ring lacks or the
                fields differ.
        """
        if poly.ring == self:
            return poly
        if poly.ring.field != self.field:
            raise RingMismatchError(
                "Cannot convert from {0} to {1}".format(poly.ring, self)
            )

        positions = []
        for index, name in enumerate(poly.ring.names):
            if name in self._index:
                positions.append(self._index[name])
            else:
                positions.append(None)

        terms = {}
        for exponent, coeff in poly.terms.items():
            target = [0] * self.ngens
            for index, power in enumerate(exponent):
                if not power:
                    continue
                if positions[index] is None:
                    raise RingMismatchError(
                        'Variable "{0}" is not in ring {1}'.format(
                            poly.ring.names[index], self
                        )
                    )
                target[positions[index]] = power
            terms[tuple(target)] = coeff

        return Polynomial._make(self, terms)

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.names == other.names
            and self.field == other.field
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return "PolynomialRing({0!r}, {1!r})".format(list(self.names), self.field)

    def __str__(self):
        return "{0}[{1}]".format(self.field, ", ".join(self.names))


class Polynomial(object):
    """
    Immutable sparse polynomial.

    Args:
        ring (PolynomialRing): The ring the polynomial lives in.
        terms (dict, optional): Map of exponent tuples to coefficients. Zero
            coefficients are dropped and coefficients are coerced into the field.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms=None):
        field = ring.field
        cleaned = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != ring.ngens:
                raise ValueError(
                    "Exponent {0} does not match {1} variables".format(
                        exponent, ring.ngens
                    )
                )
            coeff = field(coeff)
            if coeff:
                cleaned[exponent] = cleaned.get(exponent, field.zero) + coeff
                if not cleaned[exponent]:
                    del cleaned[exponent]
        self.ring = ring
        self.terms = cleaned
        self._hash = None

    @classmethod
    def _make(cls, ring, terms):
        """Build without validation; `terms` must already be clean."""
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.terms = terms
        poly._hash = None
        return poly

    def _check(self, other):
        if other.ring != self.ring:
            raise RingMismatchError(
                "Polynomials over {0} and {1} cannot be combined".format(
                    self.ring, other.ring
                )
            )

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, SCALAR_TYPES):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exponent, coeff in other.terms.items():
            value = terms.get(exponent)
            if value is None:
                terms[exponent] = coeff
            else:
                value = value + coeff
                if value:
                    terms[exponent] = value
                else:
                    del terms[exponent]
        return Polynomial._make(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(
            self.ring, {exponent: -coeff for exponent, coeff in self.terms.items()}
        )

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return multiply(self, other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(
                "Polynomial power must be a non-negative integer, not {0}".format(
                    exponent
                )
            )
        result = self.ring.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, SCALAR_TYPES):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return "Polynomial({0!r})".format(str(self))

    def __str__(self):
        from .parser import format_polynomial

        return format_polynomial(self)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (
            len(self.terms) == 1 and self.ring.unit_exponent in self.terms
        )

    def constant_value(self):
        """Return the constant coefficient."""
        return self.terms.get(self.ring.unit_exponent, self.ring.field.zero)

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), self.ring.field.zero)

    def degree(self):
        """Return the total degree (``-1`` for the zero polynomial)."""
        if not self.terms:
            return -1
        return max(sum(exponent) for exponent in self.terms)

    def degree_in(self, var):
        index = var if isinstance(var, int) else self.ring.index(var)
        if not self.terms:
            return -1
        return max(exponent[index] for exponent in self.terms)

    def is_homogeneous(self):
        return len({sum(exponent) for exponent in self.terms}) <= 1

    def variables(self):
        """Return the indices of variables occurring in the polynomial."""
        used = set()
        for exponent in self.terms:
            used.update(index for index, power in enumerate(exponent) if power)
        return sorted(used)

    def sorted_terms(self, order=DEGREVLEX_ORDER):
        """Return ``(exponent, coefficient)`` pairs, largest monomial first."""
        return sorted(
            self.terms.items(), key=lambda item: order.key(item[0]), reverse=True
        )

    def leading_monomial(self, order=DEGREVLEX_ORDER):
        if not self.terms:
            raise ValueError("The zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order=DEGREVLEX_ORDER):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order=DEGREVLEX_ORDER):
        """Return the polynomial scaled to leading coefficient one."""
        if not self.terms:
            return self
        return self.scale(self.ring.field.one / self.leading_coefficient(order))

    def scale(self, value):
        value = self.ring.field(value)
        if not value:
            return self.ring.zero
        terms = {exponent: coeff * value for exponent, coeff in self.terms.items()}
        return Polynomial._make(self.ring, terms)

    def shift(self, exponent, coeff):
        """Return ``coeff * x^exponent * self``."""
        if not coeff:
            return self.ring.zero
        return Polynomial._make(
            self.ring,
            {
                tuple(a + b for a, b in zip(key, exponent)): value * coeff
                for key, value in self.terms.items()
            },
        )

    def homogeneous_component(self, degree):
        return Polynomial._make(
            self.ring,
            {
                exponent: coeff
                for exponent, coeff in self.terms.items()
                if sum(exponent) == degree
            },
        )

    def differentiate(self, var):
        return differentiate(self, var)

    def substitute(self, images, ring=None):
        """
        Return the polynomial with variable ``i`` replaced by ``images[i]``.

        Args:
            images (list): One image per variable: a polynomial of `ring` or a
                scalar.
            ring (PolynomialRing, optional): Target ring. Defaults to this ring.

        Returns:
            Polynomial
        """
        ring = ring or self.ring
        if len(images) != self.ring.ngens:
            raise ValueError(
                "Expected {0} images, got {1}".format(self.ring.ngens, len(images))
            )
        images = [ring(image) for image in images]
        powers = [{0: ring.one, 1: image} for image in images]

        def power(index, k):
            cache = powers[index]
            if k not in cache:
                cache[k] = power(index, k - 1) * images[index]
            return cache[k]

        result = ring.zero
        for exponent, coeff in self.terms.items():
            term = ring.constant(coeff)
            for index, k in enumerate(exponent):
                if k:
                    term = term * power(index, k)
            result = result + term
        return result

    def evaluate(self, values):
        """Return the value at the point `values` (one scalar per variable)."""
        field = self.ring.field
        values = [field(value) for value in values]
        total = field.zero
        for exponent, coeff in self.terms.items():
            term = coeff
            for value, k in zip(values, exponent):
                if k:
                    term = term * value ** k
            total = total + term
        return total

    def specialize(self, name, value):
        """Return the polynomial with `name` set to `value`, in the ring without it."""
        target = self.ring.drop([name])
        images = [
            value if ring_name == name else target.gen(ring_name)
            for ring_name in self.ring.names
        ]
        return self.substitute(images, target)


def multiply(p, q):
    """
    Return the exact product of two polynomials of the same ring.

    Raises:
        RingMismatchError: When the rings differ.
    """
    p._check(q)
    if not p.terms or not q.terms:
        return p.ring.zero

    terms = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            exponent = tuple(a + b for a, b in zip(e1, e2))
            value = terms.get(exponent)
            if value is None:
                terms[exponent] = c1 * c2
            else:
                terms[exponent] = value + c1 * c2
    return Polynomial._make(p.ring, {e: c for e, c in terms.items() if c})


def differentiate(p, var):
    """Return the formal partial derivative of `p` by variable index (or name) `var`."""
    index = var if isinstance(var, int) else p.ring.index(var)
    if not 0 <= index < p.ring.ngens:
        raise ValueError(
            "Variable index {0} out of range for {1}".format(index, p.ring)
        )

    terms = {}
    for exponent, coeff in p.terms.items():
        k = exponent[index]
        if not k:
            continue
        new = list(exponent)
        new[index] = k - 1
        value = coeff * k
        if value:
            terms[tuple(new)] = value
    return Polynomial._make(p.ring, terms)


def _matrix_ring(matrix):
    ring = None
    for row in matrix:
        for entry in row:
            if isinstance(entry, Polynomial):
                if ring is None:
                    ring = entry.ring
                elif entry.ring != ring:
                    raise RingMismatchError(
                        "Matrix entries over {0} and {1}".format(ring, entry.ring)
                    )
    if ring is None:
        raise ValueError("Matrix has no polynomial entries to fix a ring")
    return ring


def coerce_matrix(matrix, ring=None):
    """Return `matrix` with every entry coerced to a polynomial of one ring."""
    ring = ring or _matrix_ring(matrix)
    return [[ring(entry) for entry in row] for row in matrix]


def det3(matrix):
    """
    Return the determinant of a 3x3 polynomial matrix by cofactor expansion.

    Raises:
        RingMismatchError: When entries live in different rings.
    """
    if len(matrix) != 3 or any(len(row) != 3 for row in matrix):
        raise ValueError("det3 expects a 3x3 matrix")
    m = coerce_matrix(matrix)
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def is_skew_symmetric(matrix):
    size = len(matrix)
    for i in range(size):
        if matrix[i][i]:
            return False
        for j in range(i + 1, size):
            if matrix[i][j] != -matrix[j][i]:
                return False
    return True


def pfaffian4(matrix, indices):
    """Return the pfaffian of the 4x4 principal submatrix on `indices` (ascending)."""
    a, b, c, d = indices
    m = matrix
    return m[a][b] * m[c][d] - m[a][c] * m[b][d] + m[a][d] * m[b][c]


def pfaffians_4x4(matrix):
    """
    Return the five 4x4 pfaffians of a 5x5 skew-symmetric matrix.

    Entry ``i`` is the pfaffian of the matrix with row and column ``i`` removed,
    signed by ``(-1)^i`` (zero-based), i.e. ``(-1)^(i+1)`` counting from one.

    Raises:
        NotSkewSymmetricError: When `matrix` is not skew-symmetric.
    """
    if len(matrix) != 5 or any(len(row) != 5 for row in matrix):
        raise ValueError("pfaffians_4x4 expects a 5x5 matrix")
    m = coerce_matrix(matrix)
    if not is_skew_symmetric(m):
        raise NotSkewSymmetricError("Matrix is not skew-symmetric")

    result = []
    for i in range(5):
        rest = [k for k in range(5) if k != i]
        pf = pfaffian4(m, rest)
        result.append(pf if i % 2 == 0 else -pf)
    return result


def minor_det4(matrix, indices):
    """Return the determinant of the 4x4 principal submatrix on `indices`."""
    sub = [[matrix[r][c] for c in indices] for r in indices]
    total = None
    for col in range(4):
        rest = [[row[k] for k in range(4) if k != col] for row in sub[1:]]
        term = sub[0][col] * det3(rest)
        if col % 2:
            term = -term
        total = term if total is None else total + term
    return total


def univariate_coefficients(poly, var=0):
    """Return ``[c0, c1, ...]`` of a polynomial in a single variable."""
    index = var if isinstance(var, int) else poly.ring.index(var)
    others = [i for i in range(poly.ring.ngens) if i != index]
    if any(exponent[i] for exponent in poly.terms for i in others):
        raise ValueError("Polynomial {0} is not univariate".format(poly))
    degree = poly.degree_in(index)
    coeffs = [poly.ring.field.zero] * (degree + 1)
    for exponent, coeff in poly.terms.items():
        coeffs[exponent[index]] = coeff
    return coeffs


def rational_roots(poly, var=0):
    """
    Return the distinct roots of a univariate polynomial lying in its field.

    Over ``Q`` the rational root test is used; over a prime field every element is
    tried.

    Returns:
        list: Roots in ascending order (by value for ``Q``).
    """
    if poly.is_zero():
        raise ValueError("The zero polynomial has every element as a root")
    coeffs = univariate_coefficients(poly, var)
    field = poly.ring.field

    if not isinstance(field, RationalField):
        roots = []
        for value in field.elements():
            total = field.zero
            for coeff in reversed(coeffs):
                total = total * value + coeff
            if not total:
                roots.append(value)
        return roots

    roots = set()
    while coeffs and not coeffs[0]:
        roots.add(Fraction(0))
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return sorted(roots)

    scale = 1
    for coeff in coeffs:
        scale = scale * coeff.denominator // math.gcd(scale, coeff.denominator)
    ints = [int(coeff * scale) for coeff in coeffs]
    content = 0
    for value in ints:
        content = math.gcd(content, value)
    ints = [value // content for value in ints]

    for num in divisors(ints[0]):
        for den in divisors(ints[-1]):
            for candidate in (Fraction(num, den), Fraction(-num, den)):
                total = 0
                for value in reversed(ints):
                    total = total * candidate + value
                if total == 0:
                    roots.add(candidate)
    return sorted(roots)
