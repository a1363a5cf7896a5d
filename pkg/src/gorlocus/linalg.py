"""
The linalg module.

Exact linear algebra on sparse rows. A row is a ``dict`` mapping column index to a
nonzero field element; dense vectors are plain lists. Subspaces are kept in
reduced row echelon form so equal subspaces have equal bases. Only :func:`rank`
eliminates fraction-free over ``Q``; echelon forms and kernels use ``Fraction``
pivots.
"""

from fractions import Fraction
import logging
import math

from .fields import QQ, RationalField


log = logging.getLogger(__name__)


def to_sparse(vector):
    """Return the sparse row of a dense vector (or a copy of a sparse one)."""
    if isinstance(vector, dict):
        return {col: value for col, value in vector.items() if value}
    return {col: value for col, value in enumerate(vector) if value}


def to_dense(row, ncols, field=QQ):
    """Return the dense list of a sparse row."""
    vector = [field.zero] * ncols
    for col, value in row.items():
        vector[col] = value
    return vector


def _axpy(row, scale, other):
    """Return ``row - scale * other`` as a new sparse row."""
    result = dict(row)
    for col, value in other.items():
        new = result.get(col, 0) - scale * value
        if new:
            result[col] = new
        elif col in result:
            del result[col]
    return result


class Echelon(object):
    """
    Incrementally maintained reduced row echelon form.

    Every stored row has pivot coefficient one and zeros in the pivot columns of
    the other stored rows.
    """

    __slots__ = ("field", "rows")

    def __init__(self, field=QQ):
        self.field = field
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self):
        return sorted(self.rows)

    def reduce(self, row):
        """Return `row` reduced against the stored rows (a new sparse row)."""
        row = to_sparse(row)
        for col in sorted(set(row) & set(self.rows)):
            value = row.get(col)
            if value:
                row = _axpy(row, value, self.rows[col])
        return row

    def add(self, row):
        """
        Insert `row`; return whether it was independent of the stored rows.
        """
        row = self.reduce(row)
        if not row:
            return False

        pivot = min(row)
        inverse = self.field.one / row[pivot]
        row = {col: value * inverse for col, value in row.items()}

        for col, other in list(self.rows.items()):
            value = other.get(pivot)
            if value:
                self.rows[col] = _axpy(other, value, row)

        self.rows[pivot] = row
        return True

    def basis(self):
        """Return the stored rows ordered by pivot column."""
        return [self.rows[col] for col in self.pivots]


def rref(rows, field=QQ):
    """
    Return ``(basis, pivots)``: the reduced row echelon basis of the row space of
    `rows` (sparse rows ordered by pivot) and its pivot columns.
    """
    echelon = Echelon(field)
    for row in rows:
        echelon.add(row)
    return echelon.basis(), echelon.pivots


def _primitive(row):
    content = 0
    for value in row.values():
        content = math.gcd(content, value)
        if content == 1:
            return row
    if content > 1:
        return {col: value // content for col, value in row.items()}
    return row


def _integer_row(row):
    scale = 1
    for value in row.values():
        denominator = value.denominator
        scale = scale * denominator // math.gcd(scale, denominator)
    return _primitive({col: int(value * scale) for col, value in row.items()})


def _rank_integer(rows):
    """Fraction-free rank over ``Q`` (rows already cleared to integers)."""
    pivots = {}
    for row in rows:
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                pivots[col] = row
                break
            a, b = pivot[col], row[col]
            new = {k: a * v for k, v in row.items()}
            for k, v in pivot.items():
                value = new.get(k, 0) - b * v
                if value:
                    new[k] = value
                elif k in new:
                    del new[k]
            row = _primitive(new)
    return len(pivots)


def rank(rows, field=QQ):
    """
    Return the rank of the matrix with the given rows.

    Over ``Q`` the elimination is fraction-free on integer rows.
    """
    rows = [to_sparse(row) for row in rows]
    rows = [row for row in rows if row]
    if isinstance(field, RationalField):
        integer_rows = []
        for row in rows:
            if all(isinstance(value, int) for value in row.values()):
                integer_rows.append(_primitive(dict(row)))
            else:
                fractions = {c: Fraction(v) for c, v in row.items()}
                integer_rows.append(_integer_row(fractions))
        return _rank_integer(integer_rows)

    echelon = Echelon(field)
    for row in rows:
        echelon.add(row)
    return len(echelon)


def kernel_basis(rows, ncols, field=QQ):
    """
    Return a basis of ``{x : M x = 0}`` for the matrix `M` with the given rows.

    Each basis vector is a sparse row with a one in a free column and zeros in the
    other free columns, so the basis is canonical. Unlike :func:`rank` this goes
    through :func:`rref`, which divides by pivots; over ``Q`` the entries are
    ``Fraction`` values throughout.
    """
    basis, pivots = rref(rows, field)
    pivot_set = set(pivots)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = {free: field.one}
        for pivot, row in zip(pivots, basis):
            value = row.get(free)
            if value:
                vector[pivot] = -value
        kernel.append(vector)
    return kernel


def transpose(rows, nrows, ncols):
    """Return the sparse rows of the transpose of an ``nrows x ncols`` matrix."""
    columns = [dict() for _ in range(ncols)]
    for r, row in enumerate(rows[:nrows]):
        for c, value in to_sparse(row).items():
            columns[c][r] = value
    return columns


class Subspace(object):
    """
    A subspace of ``field^ambient`` stored by its reduced row echelon basis.

    Args:
        ambient (int): Dimension of the ambient space.
        vectors (list, optional): Spanning vectors (dense or sparse).
        field (RationalField|PrimeField, optional): Defaults to ``Q``.
    """

    __slots__ = ("ambient", "field", "_echelon")

    def __init__(self, ambient, vectors=(), field=QQ):
        self.ambient = ambient
        self.field = field
        self._echelon = Echelon(field)
        for vector in vectors:
            self._echelon.add(vector)

    @classmethod
    def zero(cls, ambient, field=QQ):
        return cls(ambient, (), field)

    @classmethod
    def full(cls, ambient, field=QQ):
        return cls(ambient, [{i: field.one} for i in range(ambient)], field)

    @property
    def dim(self):
        return len(self._echelon)

    @property
    def pivots(self):
        return tuple(self._echelon.pivots)

    def __len__(self):
        return self.dim

    def basis(self):
        """Return the echelon basis as sparse rows."""
        return self._echelon.basis()

    def vectors(self):
        """Return the echelon basis as dense lists."""
        return [to_dense(row, self.ambient, self.field) for row in self.basis()]

    def reduce(self, vector):
        """Return the canonical representative of `vector` modulo this subspace."""
        return self._echelon.reduce(vector)

    def contains(self, vector):
        return not self.reduce(vector)

    def __contains__(self, vector):
        return self.contains(vector)

    def coordinates(self, vector):
        """
        Return the coefficients of `vector` in the echelon basis.

        Raises:
            ValueError: When `vector` is not in the subspace.
        """
        row = to_sparse(vector)
        if not self.contains(row):
            raise ValueError("Vector is not in the subspace")
        return [row.get(pivot, self.field.zero) for pivot in self.pivots]

    def is_subspace_of(self, other):
        return all(other.contains(row) for row in self.basis())

    def __add__(self, other):
        return Subspace(self.ambient, self.basis() + other.basis(), self.field)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.pivots == other.pivots
            and self.basis() == other.basis()
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(
            (self.ambient, tuple(tuple(sorted(row.items())) for row in self.basis()))
        )

    def __repr__(self):
        return "Subspace(ambient={0}, dim={1})".format(self.ambient, self.dim)
