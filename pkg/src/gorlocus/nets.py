"""
The nets module.

Nets of conics attached to local algebras with Hilbert function ``(1, n, 3, 1)``:
extraction from the associated graded algebra, the discriminant cubic of the
net, smoothness of plane cubics, the j-invariant of the normalized discriminant
and a coarse classification that separates the catalog cases.

The pencil variables of a net are ``l0, l1, l2``; a net over a parameter ring
(the normalized ``h = 1`` family) carries the parameter names in addition.
"""

from dataclasses import dataclass
import logging

from .artin import profile
from .fields import QQ
from .groebner import (
    Ideal,
    hilbert_function_value,
    is_zero_dimensional,
)
from .linalg import Subspace, kernel_basis, rank
from .polyring import Polynomial, PolynomialRing, det3, rational_roots


log = logging.getLogger(__name__)

PENCIL = ("l0", "l1", "l2")

# Degrees where the Hilbert function of a point scheme in the plane is read off.
STABLE_DEGREES = (8, 9)

INTEGRAL_SMOOTH = "integral-smooth"
INTEGRAL_NODAL = "integral-nodal"

# (singular degree, rank-one members, rank of the partials) of the reducible
# discriminants.
LABELS = {
    (2, 2, 3): "D",
    (3, 3, 3): "E",
    (3, 0, 3): "E*",
    (None, 2, 2): "G*",
    (None, 3, 1): "H",
}

_PAIRS = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


class NetError(ValueError):
    """Base exception of the nets module."""

    pass


class WrongHilbertFunctionError(NetError):
    """Exception raised when the algebra does not have Hilbert function (1,n,3,1)."""

    pass


class DegenerateNetError(NetError):
    """Exception raised when three conics do not span a net."""

    pass


class UnsupportedCubicError(NetError):
    """Exception raised when a cubic is not in the normalized Weierstrass shape."""

    pass


class SingularCubicError(NetError):
    """Exception raised when a j-invariant is asked of a singular cubic."""

    pass


class UnclassifiedNetError(NetError):
    """Exception raised when the invariants of a net match no known case."""

    pass


def _half(field):
    return field.one / field(2)


class NetOfConics(object):
    """
    Three symmetric 3x3 matrices spanning a net of conics.

    Entries are field elements, or polynomials of `parameters` for a
    parametric net.

    Args:
        field (RationalField|PrimeField): Base field.
        matrices (list): Three symmetric 3x3 matrices.
        names (tuple, optional): Names of the three plane coordinates.
        parameters (PolynomialRing, optional): Ring of the entries when they
            depend on parameters.

    Raises:
        DegenerateNetError: When a matrix is not symmetric or the three conics
            are linearly dependent.
    """

    def __init__(self, field, matrices, names=("x1", "x2", "x3"), parameters=None):
        matrices = tuple(tuple(tuple(row) for row in m) for m in matrices)
        if len(matrices) != 3 or any(
            len(m) != 3 or any(len(row) != 3 for row in m) for m in matrices
        ):
            raise DegenerateNetError("A net needs three 3x3 matrices")
        for m in matrices:
            if any(m[i][j] != m[j][i] for i in range(3) for j in range(i)):
                raise DegenerateNetError("Matrix {0} is not symmetric".format(m))

        self.field = field
        self.matrices = matrices
        self.names = tuple(names)
        self.parameters = parameters
        if parameters is None and rank(self._vectors(), field) != 3:
            raise DegenerateNetError("Conics are linearly dependent")

    def __repr__(self):
        return "NetOfConics({0})".format(
            ", ".join(str(q) for q in self.quadrics())
        )

    def _vectors(self):
        """Coefficient vectors over ``z_i z_j`` (i <= j)."""
        vectors = []
        for m in self.matrices:
            vectors.append(
                [m[i][j] if i == j else m[i][j] * 2 for i, j in _PAIRS]
            )
        return vectors

    @property
    def ring(self):
        """Ring of the quadratic forms, with the parameters appended."""
        names = self.names
        if self.parameters is not None:
            names = names + self.parameters.names
        return PolynomialRing(names, self.field)

    def quadrics(self):
        """Return the three conics as quadratic forms."""
        ring = self.ring
        z = ring.gens[:3]
        forms = []
        for m in self.matrices:
            form = ring.zero
            for i, j in _PAIRS:
                coeff = _lift(m[i][j], ring)
                if i != j:
                    coeff = coeff * 2
                form = form + coeff * z[i] * z[j]
            forms.append(form)
        return forms

    def span(self):
        """
        Return the span of the conics in the six-dimensional space of quadrics.

        Raises:
            NetError: For a parametric net.
        """
        if self.parameters is not None:
            raise NetError("A parametric net has no numeric span")
        return Subspace(6, self._vectors(), self.field)

    def same_net(self, other):
        return self.span() == other.span()

    def pencil_matrix(self, ring=None):
        """Return ``l0*M1 + l1*M2 + l2*M3`` over the pencil ring."""
        ring = ring or pencil_ring(self.field, self.parameters)
        lam = ring.gens[:3]
        result = []
        for i in range(3):
            row = []
            for j in range(3):
                entry = ring.zero
                for k, m in enumerate(self.matrices):
                    entry = entry + lam[k] * _lift(m[i][j], ring)
                row.append(entry)
            result.append(row)
        return result


def _lift(entry, ring):
    if isinstance(entry, Polynomial):
        return ring.convert(entry)
    return ring.constant(entry)


def pencil_ring(field=QQ, parameters=None):
    """Return ``field[l0, l1, l2, <parameters>]``."""
    names = PENCIL
    if parameters is not None:
        names = names + parameters.names
    return PolynomialRing(names, field)


def net_from_quadrics(quadrics, parameters=None):
    """
    Return the net spanned by three quadratic forms in the first three variables
    of their ring.

    Raises:
        DegenerateNetError: When a form is not quadratic in those variables.
    """
    ring = quadrics[0].ring
    field = ring.field
    half = _half(field)
    names = ring.names[:3]
    pring = parameters
    matrices = []
    for q in quadrics:
        entries = {}
        for exponent, coeff in q.terms.items():
            head, tail = exponent[:3], exponent[3:]
            if sum(head) != 2:
                raise DegenerateNetError("{0} is not a quadratic form".format(q))
            i, j = [k for k in range(3) for _ in range(head[k])]
            value = coeff if i == j else coeff * half
            if any(tail):
                if pring is None:
                    raise DegenerateNetError(
                        "{0} depends on parameters {1}".format(q, ring.names[3:])
                    )
                value = pring.monomial(_parameter_exponent(ring, pring, tail), value)
            entries[(i, j)] = entries.get((i, j), 0) + value
        m = [[field.zero] * 3 for _ in range(3)]
        for (i, j), value in entries.items():
            m[i][j] = value
            m[j][i] = value
        matrices.append(m)
    return NetOfConics(field, matrices, names, parameters)


def _parameter_exponent(ring, parameters, tail):
    """Exponent over `parameters` of the trailing part of an exponent of `ring`."""
    exponent = [0] * parameters.ngens
    for name, power in zip(ring.names[3:], tail):
        if power:
            exponent[parameters.index(name)] = power
    return exponent


def weierstrass_net(p=None, field=QQ):
    """
    Return the normalized ``h = 1`` net
    ``(x1x2 + x3^2, x1x3, x2^2 - 4p*x3^2 + x1^2 + 2p*x1x2)``.

    Its span equals the catalog net with ``alpha = 6p``.

    Args:
        p (Fraction|int, optional): Parameter value; ``None`` keeps ``p`` as a
            variable of a parameter ring.
        field (RationalField|PrimeField, optional): Defaults to ``Q``.
    """
    half = _half(field)
    zero = field.zero
    parameters = None
    if p is None:
        parameters = PolynomialRing(["p"], field)
        p = parameters.gen("p")
    else:
        p = field(p)
    first = [[zero, half, zero], [half, zero, zero], [zero, zero, field.one]]
    second = [[zero, zero, half], [zero, zero, zero], [half, zero, zero]]
    third = [
        [field.one, p, zero],
        [p, field.one, zero],
        [zero, zero, p * -4],
    ]
    return NetOfConics(field, [first, second, third], parameters=parameters)


def extract_net(algebra):
    """
    Return the net of conics of a local algebra with Hilbert function
    ``(1, n, 3, 1)``.

    The classes of the centered generators span ``M/M^2``. Directions that
    multiply all of ``M/M^2`` to zero in ``M^2/M^3`` (they are square-zero in
    the associated graded algebra) are quotiented away; on the remaining three
    generators the kernel of ``Sym^2 -> M^2/M^3`` is the net.

    Raises:
        WrongHilbertFunctionError: On any other Hilbert function.
        DegenerateNetError: When three directions do not remain or the kernel
            is not three-dimensional.
    """
    hilbert = profile(algebra).hilbert
    if len(hilbert) != 4 or hilbert[2:] != (3, 1):
        raise WrongHilbertFunctionError(
            "Hilbert function {0} is not (1, n, 3, 1)".format(hilbert)
        )

    field = algebra.field
    gens = algebra.centered_generators()
    n = len(gens)
    if hilbert[1] != n:
        raise DegenerateNetError(
            "Embedding dimension {0} differs from {1} generators".format(
                hilbert[1], n
            )
        )
    second = algebra.graded_piece(2)
    products = [
        [second.coordinates(algebra.multiply(gens[a], gens[b])) for b in range(n)]
        for a in range(n)
    ]

    rows = []
    for b in range(n):
        for t in range(second.dim):
            rows.append({a: products[a][b][t] for a in range(n) if products[a][b][t]})
    null = Subspace(n, kernel_basis(rows, n, field), field)
    effective = [a for a in range(n) if a not in null.pivots]
    if len(effective) != 3:
        raise DegenerateNetError(
            "{0} directions remain after removing square-zero ones".format(
                len(effective)
            )
        )
    log.debug("Net directions: %s", [algebra.names[a] for a in effective])

    images = []
    for i, j in _PAIRS:
        images.append(products[effective[i]][effective[j]])
    symmetric = [
        {k: images[k][t] for k in range(6) if images[k][t]} for t in range(second.dim)
    ]
    kernel = kernel_basis(symmetric, 6, field)
    if len(kernel) != 3:
        raise DegenerateNetError(
            "Kernel of Sym^2 has dimension {0}".format(len(kernel))
        )

    half = _half(field)
    matrices = []
    for vector in kernel:
        m = [[field.zero] * 3 for _ in range(3)]
        for k, (i, j) in enumerate(_PAIRS):
            value = vector.get(k, field.zero)
            if i == j:
                m[i][i] = value
            else:
                m[i][j] = m[j][i] = value * half
        matrices.append(m)
    names = [algebra.names[a] for a in effective] if algebra.names else PENCIL
    return NetOfConics(field, matrices, names)


@dataclass(frozen=True)
class TernaryCubic(object):
    """
    A cubic form in ``l0, l1, l2`` whose coefficients may involve parameters
    (the variables of its ring after the first three).

    Raises:
        NetError: When the form is zero or not cubic in the pencil variables.
    """

    poly: Polynomial

    def __post_init__(self):
        if self.poly.is_zero():
            raise NetError("The zero polynomial is not a cubic")
        if any(sum(exponent[:3]) != 3 for exponent in self.poly.terms):
            raise NetError("{0} is not a ternary cubic form".format(self.poly))

    @property
    def ring(self):
        return self.poly.ring

    @property
    def parameters(self):
        return self.poly.ring.names[3:]

    def __str__(self):
        return str(self.poly)

    def specialize(self, name, value):
        """Return the cubic with parameter `name` set to `value`."""
        return TernaryCubic(self.poly.specialize(name, value))

    def partials(self):
        return [self.poly.differentiate(index) for index in range(3)]


def discriminant_cubic(net):
    """
    Return ``det(l0*M1 + l1*M2 + l2*M3)``.

    Raises:
        DegenerateNetError: When the determinant vanishes identically.
    """
    poly = det3(net.pencil_matrix())
    if poly.is_zero():
        raise DegenerateNetError("Discriminant of {0!r} is zero".format(net))
    return TernaryCubic(poly)


def _require_numeric(cubic):
    if cubic.parameters:
        raise UnsupportedCubicError(
            "Cubic {0} still depends on {1}".format(cubic, cubic.parameters)
        )


def jacobian_basis(cubic):
    """Return the Groebner basis of the partial derivatives of a numeric cubic."""
    _require_numeric(cubic)
    return Ideal(cubic.ring, cubic.partials()).groebner()


def cubic_is_smooth(cubic):
    """
    Return whether the projective plane cubic is smooth over the algebraic
    closure: the Jacobian ideal has finite colength.
    """
    return is_zero_dimensional(jacobian_basis(cubic))


def _stable_value(basis):
    """Return the eventual Hilbert function value, or ``None`` if it still grows."""
    values = [hilbert_function_value(basis, t) for t in STABLE_DEGREES]
    return values[0] if values[0] == values[-1] else None


def singular_degree(cubic):
    """Return the length of the singular scheme, ``None`` when it is a curve."""
    return _stable_value(jacobian_basis(cubic))


def partials_rank(cubic):
    """Return the dimension of the span of the three partial derivatives."""
    columns = {}
    rows = []
    for partial in cubic.partials():
        row = {}
        for exponent, coeff in partial.terms.items():
            row[columns.setdefault(exponent, len(columns))] = coeff
        rows.append(row)
    return rank(rows, cubic.ring.field)


def rank_one_points(net):
    """
    Return the length of the scheme of rank-one members of the net (cut out by
    the 2x2 minors of the pencil matrix), ``None`` when it is a curve.
    """
    if net.parameters is not None:
        raise NetError("Rank-one members of a parametric net are not counted")
    m = net.pencil_matrix()
    minors = []
    for r1 in range(3):
        for r2 in range(r1 + 1, 3):
            for c1 in range(3):
                for c2 in range(c1 + 1, 3):
                    minor = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]
                    if not minor.is_zero():
                        minors.append(minor)
    ring = m[0][0].ring
    return _stable_value(Ideal(ring, minors).groebner())


def _pencil_coefficients(cubic):
    """Map ``(e0, e1, e2)`` to the coefficient polynomial in the parameters."""
    ring = cubic.ring
    params = PolynomialRing(ring.names[3:], ring.field)
    coefficients = {}
    for exponent, coeff in cubic.poly.terms.items():
        key = exponent[:3]
        term = params.monomial(exponent[3:], coeff)
        coefficients[key] = coefficients.get(key, params.zero) + term
    return params, coefficients


def weierstrass_coefficients(cubic):
    """
    Return ``(A, B)`` with the curve isomorphic to ``y^2 = x^3 + A*x + B``.

    The cubic must read ``a*l1^2*l2 + c(l0, l2)`` with ``a`` a nonzero constant
    and ``c`` involving ``l0^3``. ``A`` and ``B`` are polynomials in the
    parameters.

    Raises:
        UnsupportedCubicError: On any other shape.
    """
    params, coefficients = _pencil_coefficients(cubic)
    for key in coefficients:
        if key[1] and key != (0, 2, 1):
            raise UnsupportedCubicError(
                "Cubic {0} has an l1 term outside l1^2*l2".format(cubic)
            )
    a = coefficients.get((0, 2, 1))
    if a is None or not a.is_constant():
        raise UnsupportedCubicError(
            "Cubic {0} has no constant l1^2*l2 coefficient".format(cubic)
        )
    scale = -(params.field.one / a.constant_value())
    f = [coefficients.get((k, 0, 3 - k), params.zero).scale(scale) for k in range(4)]
    a0, a1, a2, a3 = f
    if a3.is_zero():
        raise UnsupportedCubicError("Cubic {0} has no l0^3 term".format(cubic))

    # Y = a3*y, X = a3*x makes the cubic monic; X = T - a2/3 depresses it.
    third = params.field.one / params.field(3)
    a1a3 = a1 * a3
    A = a1a3 - (a2 * a2).scale(third)
    B = (
        (a2 * a2 * a2).scale(params.field(2) / params.field(27))
        - (a2 * a1a3).scale(third)
        + a0 * a3 * a3
    )
    return A, B


def j_function(cubic):
    """
    Return ``(numerator, denominator)`` of ``j = 1728 * 4A^3 / (4A^3 + 27B^2)``
    as polynomials in the parameters.
    """
    A, B = weierstrass_coefficients(cubic)
    four_a3 = (A * A * A).scale(4)
    return four_a3.scale(1728), four_a3 + (B * B).scale(27)


def j_invariant(cubic):
    """
    Return the j-invariant of a numeric cubic in normalized shape.

    Raises:
        UnsupportedCubicError: When the cubic depends on parameters or has
            another shape.
        SingularCubicError: When the cubic is singular.
    """
    _require_numeric(cubic)
    numerator, denominator = j_function(cubic)
    if denominator.is_zero():
        raise SingularCubicError("Cubic {0} is singular".format(cubic))
    return numerator.constant_value() / denominator.constant_value()


def exceptional_parameters(cubic):
    """
    Return the parameter values in the field where a one-parameter normalized
    cubic is singular (the roots of ``4A^3 + 27B^2``).

    Raises:
        UnsupportedCubicError: Unless there is exactly one parameter.
        SingularCubicError: When the cubic is singular for every parameter.
    """
    if len(cubic.parameters) != 1:
        raise UnsupportedCubicError(
            "Expected one parameter, got {0}".format(cubic.parameters)
        )
    _, denominator = j_function(cubic)
    if denominator.is_zero():
        raise SingularCubicError("Cubic {0} is singular everywhere".format(cubic))
    if denominator.is_constant():
        return []
    return rational_roots(denominator)


def j_map_degree(cubic, sample):
    """
    Return the degree of ``j(p) = j(sample)`` as a polynomial equation in ``p``,
    the number of parameters over the algebraic closure sharing the j-value of
    a generic sample.
    """
    numerator, denominator = j_function(cubic)
    name = cubic.parameters[0]
    n0 = numerator.specialize(name, sample).constant_value()
    d0 = denominator.specialize(name, sample).constant_value()
    return (numerator.scale(d0) - denominator.scale(n0)).degree()


@dataclass(frozen=True)
class NetClass(object):
    """
    Coarse class of a net read off its discriminant.

    Attributes:
        label (str): ``integral-smooth``, ``integral-nodal``, ``D``, ``E``,
            ``E*``, ``G*`` or ``H``.
        smooth (bool): Whether the discriminant is smooth.
        singular_degree (int): Length of its singular scheme (``None`` for a
            non-reduced discriminant).
        rank_one_points (int): Length of the scheme of rank-one conics.
        partials_rank (int): Rank of the partial derivatives.
        j (Fraction): j-invariant when the discriminant is smooth and
            normalized.
    """

    label: str
    smooth: bool
    singular_degree: int
    rank_one_points: int
    partials_rank: int
    j: object = None

    @property
    def invariants(self):
        return (
            self.smooth,
            self.singular_degree,
            self.rank_one_points,
            self.partials_rank,
        )

    def to_dict(self):
        return {
            "label": self.label,
            "smooth": self.smooth,
            "singular_degree": self.singular_degree,
            "rank_one_points": self.rank_one_points,
            "partials_rank": self.partials_rank,
            "j": None if self.j is None else str(self.j),
        }


def classify_net(net):
    """
    Return the :class:`NetClass` of a numeric net.

    A discriminant whose singular scheme has length one is an irreducible nodal
    cubic: every reducible cubic has at least two singular points, counted
    with length. The reducible cases are told apart by the table
    :data:`LABELS`.

    Raises:
        UnclassifiedNetError: When the invariants match no known case.
    """
    cubic = discriminant_cubic(net)
    smooth = cubic_is_smooth(cubic)
    degree = None if smooth else singular_degree(cubic)
    points = rank_one_points(net)
    prank = partials_rank(cubic)

    j = None
    if smooth:
        label = INTEGRAL_SMOOTH
        try:
            j = j_invariant(cubic)
        except UnsupportedCubicError:
            log.debug("Discriminant %s is not normalized, no j-invariant", cubic)
    elif degree == 1:
        label = INTEGRAL_NODAL
    else:
        label = LABELS.get((degree, points, prank))
        if label is None:
            raise UnclassifiedNetError(
                "Net with invariants {0} is not classified".format(
                    (degree, points, prank)
                )
            )
    log.debug("Net %r: %s", net, label)
    return NetClass(label, smooth, degree, points, prank, j)
