"""
The artin module.

Finite-dimensional algebras given by a multiplication table on a basis: quotients
of polynomial rings by zero-dimensional ideals, direct sums of such, and the
invariants of a local algebra (Hilbert function, level, socle, embedding
dimension, the square-zero invariant and the associated graded multiplication).

Elements are sparse coordinate rows over the basis, as in :mod:`gorlocus.linalg`.
"""

from dataclasses import dataclass
import logging

from .fields import QQ
from .groebner import (
    Ideal,
    normal_form,
    radical_membership,
    standard_monomials,
)
from .linalg import Echelon, Subspace, kernel_basis, rank, to_sparse
from .parser import format_polynomial
from .polyring import DEGREVLEX_ORDER, PolynomialRing


log = logging.getLogger(__name__)

PARAMETER_PREFIX = "l"


class NotLocalError(ValueError):
    """Exception raised when a local invariant is asked of a non-local algebra."""

    pass


class SingularMatrixError(ValueError):
    """Exception raised when a linear substitution is not invertible."""

    pass


class NotGorensteinError(ValueError):
    """Exception raised when a Gorenstein algebra is required."""

    pass


@dataclass(frozen=True)
class AlgebraProfile(object):
    """Invariants of a local algebra."""

    degree: int
    emdim: int
    level: int
    hilbert: tuple
    socle_dim: int
    gorenstein: bool
    as_flag: bool

    def to_dict(self):
        return {
            "degree": self.degree,
            "emdim": self.emdim,
            "level": self.level,
            "hilbert": list(self.hilbert),
            "socle_dim": self.socle_dim,
            "gorenstein": self.gorenstein,
            "as": self.as_flag,
        }


@dataclass(frozen=True)
class SquareZeroProfile(object):
    """
    The cone ``{u in M : u^2 in M^e}`` in coordinates ``l1..l(d-1)`` over the
    nonconstant basis elements.

    Attributes:
        ring (PolynomialRing): Ring of the parameters.
        conditions (tuple): Generators of the condition ideal.
        directions (tuple): Names of the degree-one basis elements.
        members (tuple): Per direction, whether its parameter lies in the radical
            of the condition ideal.
        nu (int): Number of directions outside the radical.
    """

    ring: PolynomialRing
    conditions: tuple
    directions: tuple
    members: tuple
    nu: int


@dataclass(frozen=True)
class GradedMultiplication(object):
    """
    The bilinear map ``M^i/M^(i+1) x M^j/M^(j+1) -> M^(i+j)/M^(i+j+1)`` on the
    echelon bases of the graded pieces: ``table[a][b]`` is the coordinate tuple of
    the product of the ``a``-th and ``b``-th basis classes.
    """

    field: object
    i: int
    j: int
    source_dims: tuple
    target_dim: int
    table: tuple

    @property
    def image_dim(self):
        """Dimension of the span of all products."""
        rows = [
            {k: value for k, value in enumerate(coords) if value}
            for line in self.table
            for coords in line
        ]
        return Subspace(self.target_dim, rows, self.field).dim if rows else 0


class GradedPiece(object):
    """
    The quotient ``M^k / M^(k+1)`` represented by reduced vectors.

    Attributes:
        degree (int): ``k``.
        space (Subspace): Reductions of ``M^k`` modulo ``M^(k+1)``.
        higher (Subspace): ``M^(k+1)``.
    """

    __slots__ = ("degree", "space", "higher")

    def __init__(self, degree, space, higher):
        self.degree = degree
        self.space = space
        self.higher = higher

    @property
    def dim(self):
        return self.space.dim

    def basis(self):
        return self.space.basis()

    def coordinates(self, vector):
        """Return the coordinates of the class of `vector` (an element of ``M^k``)."""
        return self.space.coordinates(self.higher.reduce(vector))


class QuotientAlgebra(object):
    """
    A commutative finite-dimensional algebra with a multiplication table.

    Args:
        field (RationalField|PrimeField): Base field.
        labels (list): Display names of the basis elements.
        table (list): ``table[i][j]`` is the sparse row of ``e_i * e_j``.
        unit (dict): Sparse row of the identity.
        generators (list, optional): Sparse rows of the images of the ring
            variables.
        names (list, optional): Names of those variables.
        ideal (Ideal, optional): Presentation ideal.
        exponents (list, optional): Standard monomial of each basis element.
        components (tuple, optional): Local factors of a direct sum.
    """

    def __init__(
        self,
        field,
        labels,
        table,
        unit,
        generators=(),
        names=(),
        ideal=None,
        exponents=None,
        components=None,
    ):
        self.field = field
        self.labels = tuple(labels)
        self.table = table
        self.unit = unit
        self.generators = tuple(generators)
        self.names = tuple(names)
        self.ideal = ideal
        self.exponents = tuple(exponents) if exponents is not None else None
        self.components = components if components is not None else (self,)
        self._cache = {}

    @property
    def dim(self):
        return len(self.labels)

    def __len__(self):
        return self.dim

    def __repr__(self):
        return "QuotientAlgebra(dim={0}, basis=[{1}])".format(
            self.dim, ", ".join(self.labels)
        )

    def multiply(self, u, v):
        """Return the product of two elements."""
        result = {}
        table = self.table
        for i, a in to_sparse(u).items():
            row = table[i]
            for j, b in to_sparse(v).items():
                ab = a * b
                for k, c in row[j].items():
                    value = result.get(k, 0) + ab * c
                    if value:
                        result[k] = value
                    elif k in result:
                        del result[k]
        return result

    def power(self, u, exponent):
        result = dict(self.unit)
        for _ in range(exponent):
            result = self.multiply(result, u)
            if not result:
                break
        return result

    def basis_vector(self, index):
        return {index: self.field.one}

    def multiplication_rows(self, u):
        """Return the rows of the matrix of ``v -> u*v`` (column ``b`` is ``u*e_b``)."""
        rows = [dict() for _ in range(self.dim)]
        for b in range(self.dim):
            for k, value in self.multiply(u, self.basis_vector(b)).items():
                rows[k][b] = value
        return rows

    def element(self, poly):
        """
        Return the coordinates of the class of `poly`.

        Raises:
            ValueError: When the algebra has no presentation ideal.
        """
        if self.ideal is None:
            raise ValueError("Algebra has no presentation to reduce polynomials by")
        ring = self.ideal.ring
        remainder = normal_form(ring(poly), self.ideal.groebner())
        index = self._cache.setdefault(
            "index", {e: k for k, e in enumerate(self.exponents)}
        )
        return {index[e]: c for e, c in remainder.terms.items()}

    def trace(self, u):
        total = self.field.zero
        for b in range(self.dim):
            total = total + self.multiply(u, self.basis_vector(b)).get(b, 0)
        return total

    @property
    def support(self):
        """The point ``trace(x_i)/d`` (the support when the algebra is local)."""
        if "support" not in self._cache:
            d = self.field(self.dim)
            self._cache["support"] = tuple(self.trace(g) / d for g in self.generators)
        return self._cache["support"]

    def centered_generators(self):
        """Return the rows of ``x_i - p_i`` for the support point ``p``."""
        result = []
        for gen, point in zip(self.generators, self.support):
            row = dict(gen)
            for k, value in self.unit.items():
                new = row.get(k, 0) - point * value
                if new:
                    row[k] = new
                elif k in row:
                    del row[k]
            result.append(row)
        return result

    def is_nilpotent(self, u):
        return not self.power(u, self.dim)

    @property
    def is_local(self):
        if "local" not in self._cache:
            local = len(self.components) == 1 and all(
                self.is_nilpotent(y) for y in self.centered_generators()
            )
            self._cache["local"] = local
        return self._cache["local"]

    @property
    def is_origin_local(self):
        return self.is_local and not any(self.support)

    def _require_local(self):
        if not self.is_local:
            raise NotLocalError(
                "Algebra of dimension {0} is not local".format(self.dim)
            )

    def maximal_ideal_powers(self):
        """
        Return ``[M^0, M^1, ..., M^(e+1)]`` as subspaces, the last one zero.

        Raises:
            NotLocalError: When the algebra is not local.
        """
        self._require_local()
        if "powers" in self._cache:
            return self._cache["powers"]

        d = self.dim
        gens = self.centered_generators()
        powers = [Subspace.full(d, self.field)]
        current = Subspace(
            d,
            [self.multiply(y, self.basis_vector(b)) for y in gens for b in range(d)],
            self.field,
        )
        powers.append(current)
        while current.dim:
            current = Subspace(
                d,
                [self.multiply(y, w) for y in gens for w in current.basis()],
                self.field,
            )
            powers.append(current)
        self._cache["powers"] = powers
        log.debug("Maximal ideal powers: %s", [space.dim for space in powers])
        return powers

    @property
    def level(self):
        return len(self.maximal_ideal_powers()) - 2

    def graded_piece(self, k):
        """Return ``M^k / M^(k+1)`` (zero beyond the level)."""
        powers = self.maximal_ideal_powers()
        if k > len(powers) - 2:
            zero = Subspace.zero(self.dim, self.field)
            return GradedPiece(k, zero, zero)
        higher = powers[k + 1]
        space = Subspace(
            self.dim, [higher.reduce(row) for row in powers[k].basis()], self.field
        )
        return GradedPiece(k, space, higher)


def quotient_algebra(ideal):
    """
    Return the algebra ``ring / ideal`` on its degrevlex standard monomials.

    Raises:
        NotZeroDimensionalError: When the quotient is infinite-dimensional.
        ValueError: When `ideal` is the unit ideal.
    """
    ring = ideal.ring
    basis = ideal.groebner(DEGREVLEX_ORDER)
    exponents = standard_monomials(basis)
    if not exponents:
        raise ValueError("Ideal {0} is the unit ideal".format(ideal))

    index = {e: k for k, e in enumerate(exponents)}
    d = len(exponents)

    def coordinates(poly):
        return {index[e]: c for e, c in normal_form(poly, basis).terms.items()}

    table = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            product = tuple(a + b for a, b in zip(exponents[i], exponents[j]))
            row = coordinates(ring.monomial(product, ring.field.one))
            table[i][j] = row
            table[j][i] = row

    labels = [
        format_polynomial(ring.monomial(e, ring.field.one)) for e in exponents
    ]
    generators = [coordinates(gen) for gen in ring.gens]
    unit = {0: ring.field.one}
    log.debug("Quotient algebra of %s: dimension %d", ideal, d)
    return QuotientAlgebra(
        ring.field,
        labels,
        table,
        unit,
        generators,
        ring.names,
        ideal,
        exponents,
    )


def field_algebra(field):
    """Return the one-dimensional algebra ``k``."""
    return QuotientAlgebra(field, ["1"], [[{0: field.one}]], {0: field.one})


def point_algebra(nvars, field=None):
    """Return ``k[x1..xn]/(x1..xn)``, the coordinate ring of a rational point."""
    ring = PolynomialRing(["x{0}".format(k) for k in range(1, nvars + 1)], field or QQ)
    return quotient_algebra(Ideal(ring, ring.gens))


def direct_sum(first, second):
    """
    Return the product algebra ``first x second`` (block multiplication table).

    Its local factors are the factors of `first` followed by those of `second`.
    """
    if first.field != second.field:
        raise ValueError(
            "Cannot add algebras over {0} and {1}".format(first.field, second.field)
        )
    offset = first.dim
    d = first.dim + second.dim
    table = [[dict() for _ in range(d)] for _ in range(d)]
    for i in range(first.dim):
        for j in range(first.dim):
            table[i][j] = dict(first.table[i][j])
    for i in range(second.dim):
        for j in range(second.dim):
            table[offset + i][offset + j] = {
                offset + k: value for k, value in second.table[i][j].items()
            }

    unit = dict(first.unit)
    unit.update({offset + k: value for k, value in second.unit.items()})
    ncomponents = len(first.components)
    labels = ["{0}:{1}".format(0, label) for label in first.labels]
    labels += ["{0}:{1}".format(ncomponents, label) for label in second.labels]
    return QuotientAlgebra(
        first.field,
        labels,
        table,
        unit,
        components=first.components + second.components,
    )


def socle(algebra):
    """
    Return the annihilator of the maximal ideal.

    Raises:
        NotLocalError: When the algebra is not local.
    """
    algebra._require_local()
    rows = []
    for y in algebra.centered_generators():
        rows.extend(algebra.multiplication_rows(y))
    return Subspace(
        algebra.dim, kernel_basis(rows, algebra.dim, algebra.field), algebra.field
    )


def profile(algebra):
    """
    Return the :class:`AlgebraProfile` of a local algebra.

    Raises:
        NotLocalError: When the algebra is not local.
    """
    if "profile" in algebra._cache:
        return algebra._cache["profile"]

    powers = algebra.maximal_ideal_powers()
    hilbert = tuple(
        powers[k].dim - powers[k + 1].dim for k in range(len(powers) - 1)
    )
    socle_dim = socle(algebra).dim
    emdim = hilbert[1] if len(hilbert) > 1 else 0
    result = AlgebraProfile(
        degree=algebra.dim,
        emdim=emdim,
        level=len(hilbert) - 1,
        hilbert=hilbert,
        socle_dim=socle_dim,
        gorenstein=socle_dim == 1,
        as_flag=emdim <= 3,
    )
    algebra._cache["profile"] = result
    return result


def factor_profiles(algebra):
    """Return the profiles of the local factors of a direct sum."""
    return [profile(component) for component in algebra.components]


def square_zero_profile(algebra):
    """
    Return the :class:`SquareZeroProfile` of a local algebra at the origin.

    The coordinates of ``u(l)^2`` for ``u(l) = sum(l_k * e_k)`` over the
    nonconstant basis elements, reduced modulo ``M^e``, generate the condition
    ideal. For each degree-one basis element ``x_i``, the parameter of that
    direction is tested for membership in the radical of the condition ideal.

    Raises:
        NotLocalError: When the algebra is not local at the origin or has no
            monomial basis.
    """
    if not algebra.is_origin_local or algebra.exponents is None:
        raise NotLocalError("Square-zero profile needs a monomial basis at the origin")

    d = algebra.dim
    nonconstant = [k for k in range(d) if sum(algebra.exponents[k])]
    names = [
        "{0}{1}".format(PARAMETER_PREFIX, k) for k in range(1, len(nonconstant) + 1)
    ]
    ring = PolynomialRing(names, algebra.field)
    params = dict(zip(nonconstant, ring.gens))

    coords = [ring.zero] * d
    for a in nonconstant:
        for b in nonconstant:
            weight = params[a] * params[b]
            for k, value in algebra.table[a][b].items():
                coords[k] = coords[k] + weight * value

    top = algebra.maximal_ideal_powers()[algebra.level]
    echelon = Echelon(algebra.field)
    for row in top.basis():
        echelon.add(row)
    for col in echelon.pivots:
        value = coords[col]
        if value.is_zero():
            continue
        for k, entry in echelon.rows[col].items():
            coords[k] = coords[k] - value * entry

    conditions = tuple(value for value in coords if not value.is_zero())
    condition_ideal = Ideal(ring, conditions)

    directions = []
    members = []
    for k in nonconstant:
        if sum(algebra.exponents[k]) != 1:
            continue
        directions.append(algebra.labels[k])
        members.append(radical_membership(params[k], condition_ideal))

    nu = sum(1 for member in members if not member)
    log.debug("Square-zero profile: %d conditions, nu=%d", len(conditions), nu)
    return SquareZeroProfile(
        ring, conditions, tuple(directions), tuple(members), nu
    )


def apply_linear_substitution(ideal, matrix):
    """
    Return the ideal with ``x_i -> sum_j m[i][j] * x_j`` on the first ``len(m)``
    variables.

    Raises:
        SingularMatrixError: When `matrix` is not invertible over the field.
    """
    ring = ideal.ring
    field = ring.field
    size = len(matrix)
    if size > ring.ngens or any(len(row) != size for row in matrix):
        raise ValueError(
            "Substitution matrix must be square of size at most {0}".format(
                ring.ngens
            )
        )
    matrix = [[field(value) for value in row] for row in matrix]
    if rank(matrix, field) != size:
        raise SingularMatrixError("Substitution matrix {0} is singular".format(matrix))

    gens = ring.gens
    images = list(gens)
    for i in range(size):
        image = ring.zero
        for j in range(size):
            image = image + gens[j] * matrix[i][j]
        images[i] = image
    return Ideal(ring, [gen.substitute(images) for gen in ideal.generators])


def graded_multiplication(algebra, i, j):
    """
    Return the multiplication of the associated graded algebra in degrees
    ``(i, j)``.

    Raises:
        NotLocalError: When the algebra is not local.
    """
    first = algebra.graded_piece(i)
    second = algebra.graded_piece(j) if j != i else first
    target = algebra.graded_piece(i + j)

    table = []
    for u in first.basis():
        line = []
        for v in second.basis():
            line.append(tuple(target.coordinates(algebra.multiply(u, v))))
        table.append(tuple(line))
    return GradedMultiplication(
        algebra.field, i, j, (first.dim, second.dim), target.dim, tuple(table)
    )
