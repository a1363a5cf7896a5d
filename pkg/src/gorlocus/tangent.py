"""
The tangent module.

Tangent spaces to Hilbert schemes of points at a finite scheme ``X = Spec A``.

The projective side embeds ``X`` in ``P^(d-2)`` as an arithmetically Gorenstein
scheme by ``[1 : v1 : ... : v(d-2)]`` with generic elements ``v_k`` of ``A``.
Its ideal has ``beta_1`` quadrics and ``beta_2`` linear syzygies, and
``h0(N_X)`` is the kernel of ``(S_X)_2^beta_1 -> (S_X)_3^beta_2`` built from
those syzygies, with both graded pieces identified with ``A``.

The affine side is ``dim Hom(I, A)`` for a presentation ``A = k[y]/I``. The two
sides differ by ``(d - 2 - n) * d`` where ``n`` is the number of variables of
the presentation.
"""

from dataclasses import dataclass
from fractions import Fraction
import logging
import random

from .artin import (
    NotGorensteinError,
    direct_sum,
    point_algebra,
    profile,
    quotient_algebra,
)
from .groebner import syzygies
from .helpers import binomial, exponents_of_degree
from .linalg import Subspace, kernel_basis, rank


log = logging.getLogger(__name__)

# Number of embeddings tried before giving up.
DEFAULT_RETRIES = 8

# Coefficients of the random combinations are drawn from [-RANGE, RANGE].
RANGE = 3

# Ambient dimension and degree of the unobstructed comparison.
POINTS_DEGREE = 9
POINTS_AMBIENT = 7


class EmbeddingError(RuntimeError):
    """
    Exception raised when no generic embedding was found.

    Attributes:
        seeds (tuple): Seeds of the failed attempts.
        reasons (tuple): Failure of each attempt.
    """

    def __init__(self, message, seeds=(), reasons=()):
        super().__init__(message)
        self.seeds = tuple(seeds)
        self.reasons = tuple(reasons)


class AGEmbedding(object):
    """
    An embedding ``Spec A -> P^(d-2)`` by ``z0 -> 1, z_k -> v_k``.

    Args:
        algebra (QuotientAlgebra): The algebra ``A`` of dimension ``d``.
        vectors (list): Sparse rows of ``v1..v(d-2)``.
        seed (int, optional): Seed the vectors were drawn with.
    """

    def __init__(self, algebra, vectors, seed=None):
        self.algebra = algebra
        self.vectors = (dict(algebra.unit),) + tuple(dict(v) for v in vectors)
        self.seed = seed
        self._evaluations = {}
        self._pieces = {}

    @property
    def degree(self):
        return self.algebra.dim

    @property
    def nvars(self):
        """Number of homogeneous coordinates ``d - 1``."""
        return len(self.vectors)

    @property
    def ambient(self):
        return self.nvars - 1

    def monomials(self, t):
        return exponents_of_degree(self.nvars, t)

    def evaluation(self, t):
        """Return the image in ``A`` of each monomial of degree `t`, by exponent."""
        if t in self._evaluations:
            return self._evaluations[t]
        if t == 0:
            values = {(0,) * self.nvars: dict(self.algebra.unit)}
        else:
            lower = self.evaluation(t - 1)
            values = {}
            for exponent in self.monomials(t):
                var = next(k for k, power in enumerate(exponent) if power)
                parent = list(exponent)
                parent[var] -= 1
                values[exponent] = self.algebra.multiply(
                    lower[tuple(parent)], self.vectors[var]
                )
        self._evaluations[t] = values
        return values

    def evaluation_rank(self, t):
        return rank(list(self.evaluation(t).values()), self.algebra.field)

    def linear_image(self, coefficients):
        """Return the image in ``A`` of the linear form with the given coefficients."""
        result = {}
        for k, coeff in coefficients.items():
            for col, value in self.vectors[k].items():
                new = result.get(col, 0) + coeff * value
                if new:
                    result[col] = new
                elif col in result:
                    del result[col]
        return result


def _draw(algebra, rng, count):
    field = algebra.field
    vectors = []
    for _ in range(count):
        row = {}
        for b in range(algebra.dim):
            value = rng.randint(-RANGE, RANGE)
            if value:
                row[b] = field(value)
        vectors.append(row)
    return vectors


def _require_gorenstein(algebra):
    for component in algebra.components:
        if not profile(component).gorenstein:
            raise NotGorensteinError(
                "Factor of dimension {0} is not Gorenstein".format(component.dim)
            )


def _defect(embedding):
    """Return why `embedding` is not generic, or ``None``."""
    d = embedding.degree
    if ideal_piece(embedding, 1).dim:
        return "degenerate"
    for t in (2, 3):
        if embedding.evaluation_rank(t) != d:
            return "not surjective in degree {0}".format(t)
    if ideal_piece(embedding, 2).dim != betti_formula(d)[0]:
        return "quadric count differs from beta_1"
    return None


def ag_embed(algebra, seed=0, retries=DEFAULT_RETRIES):
    """
    Return a generic :class:`AGEmbedding` of a Gorenstein algebra (or of a direct
    sum of such) of dimension at least 4.

    Attempt ``k`` draws ``v1..v(d-2)`` with ``random.Random(seed + k)`` and is kept
    when it is non-degenerate, ``S_t -> A`` is onto for ``t = 2, 3`` and the
    number of quadrics is ``beta_1``.

    Raises:
        NotGorensteinError: When a local factor has socle dimension above one.
        ValueError: When the algebra has dimension below 4.
        EmbeddingError: When every attempt fails.
    """
    d = algebra.dim
    if d < 4:
        raise ValueError("Embedding needs dimension at least 4, got {0}".format(d))
    _require_gorenstein(algebra)

    seeds, reasons = [], []
    for attempt in range(retries):
        current = seed + attempt
        rng = random.Random(current)
        embedding = AGEmbedding(algebra, _draw(algebra, rng, d - 2), current)
        reason = _defect(embedding)
        if reason is None:
            log.debug("Embedding of degree %d found with seed %d", d, current)
            return embedding
        log.debug("Seed %d rejected: %s", current, reason)
        seeds.append(current)
        reasons.append(reason)
    raise EmbeddingError(
        "No generic embedding after {0} attempts (seeds {1})".format(retries, seeds),
        seeds,
        reasons,
    )


def ideal_piece(embedding, t):
    """
    Return ``(I_X)_t``, the kernel of ``S_t -> A``, as a subspace over the
    degree-`t` monomials in the order of :meth:`AGEmbedding.monomials`.
    """
    if t in embedding._pieces:
        return embedding._pieces[t]
    values = list(embedding.evaluation(t).values())
    rows = [dict() for _ in range(embedding.degree)]
    for col, row in enumerate(values):
        for k, value in row.items():
            rows[k][col] = value
    field = embedding.algebra.field
    piece = Subspace(len(values), kernel_basis(rows, len(values), field), field)
    embedding._pieces[t] = piece
    return piece


def betti_formula(d):
    """
    Return ``(beta_1, ..., beta_(d-3))`` with
    ``beta_h = h(d-2-h)/(d-1) * C(d, h+1)``.

    >>> betti_formula(6)
    (9, 16, 9)
    """
    result = []
    for h in range(1, d - 2):
        value = Fraction(h * (d - 2 - h) * binomial(d, h + 1), d - 1)
        result.append(int(value))
    return tuple(result)


@dataclass(frozen=True)
class GradedBetti(object):
    """
    Betti numbers of the embedded scheme.

    Attributes:
        d (int): Degree.
        beta (tuple): ``beta_1..beta_(d-3)`` from the closed formula.
        observed (tuple): ``(dim (I_X)_2, number of linear syzygies)``.
    """

    d: int
    beta: tuple
    observed: tuple

    @property
    def ok(self):
        return self.observed == self.beta[:2]

    @property
    def symmetric(self):
        return self.beta == self.beta[::-1]

    def to_dict(self):
        return {"beta": list(self.beta), "observed": list(self.observed)}


def quadrics(embedding):
    """Return the basis of ``(I_X)_2`` as sparse rows over the quadratic monomials."""
    return ideal_piece(embedding, 2).basis()


def linear_syzygies(embedding):
    """
    Return the linear syzygies of the quadrics: sparse rows over the pairs
    ``(i, c)`` (index ``i * nvars + c``) with ``sum(l_i * q_i) = 0`` where
    ``l_i = sum(row[(i, c)] * z_c)``.
    """
    nvars = embedding.nvars
    squares = embedding.monomials(2)
    cubes = {e: k for k, e in enumerate(embedding.monomials(3))}
    basis = quadrics(embedding)

    rows = [dict() for _ in range(len(cubes))]
    for i, q in enumerate(basis):
        for col, coeff in q.items():
            exponent = squares[col]
            for c in range(nvars):
                product = list(exponent)
                product[c] += 1
                rows[cubes[tuple(product)]][i * nvars + c] = coeff
    field = embedding.algebra.field
    result = kernel_basis(rows, len(basis) * nvars, field)
    log.debug(
        "Linear syzygies: %d quadrics, %d syzygies", len(basis), len(result)
    )
    return result


def betti_check(embedding):
    """Return the :class:`GradedBetti` of `embedding` (observed against formula)."""
    observed = (ideal_piece(embedding, 2).dim, len(linear_syzygies(embedding)))
    return GradedBetti(embedding.degree, betti_formula(embedding.degree), observed)


def h0_normal_projective(embedding):
    """
    Return ``h0(N_X)`` for the embedded scheme.

    The matrix has a ``d x d`` block for each (syzygy ``j``, quadric ``i``): the
    multiplication in ``A`` by the image of the linear form ``L_ji``.
    """
    algebra = embedding.algebra
    d = algebra.dim
    nvars = embedding.nvars
    beta_1 = ideal_piece(embedding, 2).dim
    rows = []
    for syzygy in linear_syzygies(embedding):
        forms = {}
        for key, coeff in syzygy.items():
            forms.setdefault(key // nvars, {})[key % nvars] = coeff
        block = [dict() for _ in range(d)]
        for i, form in forms.items():
            image = embedding.linear_image(form)
            for k, row in enumerate(algebra.multiplication_rows(image)):
                for b, value in row.items():
                    block[k][i * d + b] = value
        rows.extend(block)
    result = beta_1 * d - rank(rows, algebra.field)
    log.debug("h0 projective: %d rows, %d columns, %d", len(rows), beta_1 * d, result)
    return result


def h0_normal_affine(ideal, algebra=None):
    """
    Return ``dim Hom(I, A)`` for ``A = k[y]/I``.

    A homomorphism sends generator ``g_i`` to ``phi_i`` in ``A``; each syzygy row
    ``s`` imposes ``sum(s_i * phi_i) = 0`` in ``A``.
    """
    if algebra is None:
        algebra = quotient_algebra(ideal)
    d = algebra.dim
    m = len(ideal.generators)
    rows = []
    for syzygy in syzygies(ideal):
        block = [dict() for _ in range(d)]
        for i, entry in enumerate(syzygy):
            if entry.is_zero():
                continue
            image = algebra.element(entry)
            for k, row in enumerate(algebra.multiplication_rows(image)):
                for b, value in row.items():
                    block[k][i * d + b] = value
        rows.extend(row for row in block if row)
    result = m * d - rank(rows, algebra.field)
    log.debug("h0 affine: %d generators, %d", m, result)
    return result


def h0_normal_affine_total(algebra):
    """Return the sum of :func:`h0_normal_affine` over the local factors."""
    return sum(
        h0_normal_affine(component.ideal, component)
        for component in algebra.components
    )


def check_normal_shift(algebra, n, projective, affine):
    """Return whether ``projective == affine + (d - 2 - n) * d``."""
    d = algebra.dim
    return projective == affine + (d - 2 - n) * d


def reduced_points(d=POINTS_DEGREE, n=POINTS_AMBIENT, field=None):
    """Return the algebra of `d` rational points, each presented in `n` variables."""
    result = point_algebra(n, field)
    for _ in range(d - 1):
        result = direct_sum(result, point_algebra(n, field))
    return result


def stretched_affine_bound(n, delta):
    """
    Return the lower bound for ``h0`` at a stretched algebra of embedding
    dimension `n` and degree `delta`.

    >>> stretched_affine_bound(4, 6)
    29
    """
    return ((n + 2) ** 3 - 7 * (n + 2)) // 6 + n * (delta - n - 2)


@dataclass(frozen=True)
class TangentReport(object):
    """
    Tangent space data of one algebra.

    Attributes:
        id (str): Catalog id or description.
        d (int): Degree.
        n (int): Variables of the presentation.
        betti (GradedBetti): Observed against formula.
        h0_projective (int): ``h0(N_X)`` in ``P^(d-2)``.
        h0_affine (int): ``dim Hom(I, A)``, when computed.
        shift_ok (bool): Whether the two sides differ by ``(d-2-n)d``.
        seed (int): Seed of the embedding.
    """

    id: str
    d: int
    n: int
    betti: GradedBetti = None
    h0_projective: int = None
    h0_affine: int = None
    shift_ok: bool = None
    seed: int = None

    @property
    def ambient(self):
        return self.d - 2

    @property
    def lower_bound(self):
        return self.ambient * self.d

    @property
    def excess(self):
        if self.h0_projective is None:
            return None
        return self.h0_projective - self.lower_bound

    @property
    def smooth(self):
        return self.excess == 0 if self.excess is not None else None

    def to_dict(self):
        return {
            "id": self.id,
            "d": self.d,
            "n": self.n,
            "betti": None if self.betti is None else self.betti.to_dict(),
            "h0_proj": self.h0_projective,
            "h0_aff": self.h0_affine,
            "eq22_ok": self.shift_ok,
            "excess": self.excess,
        }


PROJECTIVE = "projective"
AFFINE = "affine"
BOTH = "both"

MODES = (PROJECTIVE, AFFINE, BOTH)


def tangent_report(algebra, n, label, mode=BOTH, seed=0):
    """
    Return the :class:`TangentReport` of `algebra` presented in `n` variables.

    Raises:
        ValueError: On an unknown mode.
        EmbeddingError: When no generic embedding is found.
    """
    if mode not in MODES:
        raise ValueError("Unknown mode {0!r}, expected one of {1}".format(mode, MODES))

    betti = projective = affine = shift = used = None
    if mode in (PROJECTIVE, BOTH):
        embedding = ag_embed(algebra, seed)
        used = embedding.seed
        betti = betti_check(embedding)
        projective = h0_normal_projective(embedding)
    if mode in (AFFINE, BOTH):
        affine = h0_normal_affine_total(algebra)
    if projective is not None and affine is not None:
        shift = check_normal_shift(algebra, n, projective, affine)
    log.info("Tangent %s: projective=%s affine=%s", label, projective, affine)
    return TangentReport(
        label, algebra.dim, n, betti, projective, affine, shift, used
    )
