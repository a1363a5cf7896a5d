"""
The catalog module.

Presentations of the classified local Gorenstein algebras of degree at most 9,
the skew-symmetric matrices whose pfaffians present the codimension-three cases,
the one-parameter family ideals that degenerate to them, and the invariants each
entry is expected to have.

Catalog ids::

    A[4,7]              k[x1..x4]/(x_i x_j, x_h^2 - x1^3, x1^4)
    A1[4,2,9], A2[4,2,9]
    A3[h=1,a=2,n=4]     h = 1 takes the parameter a (alpha), default 0
    A3[h=4,n=4]         degree n + 5; d = n + 3 is accepted as an alias

Family ids are ``<kind>:<catalog id>`` with an optional ``@printed`` or
``@corrected`` variant, e.g. ``stretched-split:A[4,7]@corrected``.
"""

from dataclasses import dataclass
from fractions import Fraction
import re

from .fields import QQ
from .groebner import Ideal
from .polyring import PolynomialRing


MAX_DEGREE = 9

PARAMETER = "b"

STRETCHED = "A"
ALMOST_STRETCHED_1 = "A1"
ALMOST_STRETCHED_2 = "A2"
NET = "A3"

FAMILIES = (STRETCHED, ALMOST_STRETCHED_1, ALMOST_STRETCHED_2, NET)

NET_CASES = (1, 2, 3, 4, 5, 6)

NET_N = (3, 4)

STRETCHED_SPLIT = "stretched-split"
A2_SPLIT = "a2-split"
A1_JUMP = "a1-jump"
NET_SPLIT = "net-split"
H4_LIMIT = "h4-limit"

FAMILY_KINDS = (STRETCHED_SPLIT, A2_SPLIT, A1_JUMP, NET_SPLIT, H4_LIMIT)

PRINTED = "printed"
CORRECTED = "corrected"

VARIANTS = (PRINTED, CORRECTED)

INTEGRAL_SMOOTH = "integral-smooth"
INTEGRAL_NODAL = "integral-nodal"

# Net label of each codimension-three case with h > 1.
NET_LABELS = {2: "D", 3: "E", 4: "E*", 5: "G*", 6: "H"}

# Values of alpha where the h = 1 discriminant cubic acquires a node.
NODAL_ALPHAS = (Fraction(-2), Fraction(2))

ID_RE = re.compile(r"^\s*(?P<family>A[123]?)\[(?P<body>[^\]]*)\]\s*$")

KEY_RE = re.compile(r"^(?P<key>[hand])=(?P<value>-?\d+(?:/\d+)?)$")

FAMILY_RE = re.compile(
    r"^\s*(?P<kind>[a-z0-9-]+):(?P<base>[^@]+?)(?:@(?P<variant>[a-z]+))?\s*$"
)


class CatalogError(ValueError):
    """Exception raised for out-of-range or unparseable catalog and family ids."""

    pass


def _format_fraction(value):
    return str(Fraction(value))


@dataclass(frozen=True)
class CatalogId(object):
    """
    Identifier of a catalog algebra.

    Args:
        family (str): ``"A"``, ``"A1"``, ``"A2"`` or ``"A3"``.
        n (int): Embedding dimension.
        d (int, optional): Degree. Derived as ``n + 5`` for ``"A3"``.
        h (int, optional): Net case ``1..6`` for ``"A3"``.
        alpha (Fraction, optional): Parameter of the ``h = 1`` case.

    Raises:
        CatalogError: When the parameters are out of range.
    """

    family: str
    n: int
    d: int = None
    h: int = None
    alpha: Fraction = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise CatalogError(
                'Catalog family must be one of {0}, not "{1}"'.format(
                    ", ".join(FAMILIES), self.family
                )
            )
        if self.family == NET:
            self._check_net()
        else:
            if self.h is not None or self.alpha is not None:
                raise CatalogError(
                    "Only A3 entries take h and alpha: {0}".format(self.family)
                )
            self._check_stretched()

    def _check_stretched(self):
        n, d = self.n, self.d
        if d is None or n < 2 or d > MAX_DEGREE:
            raise CatalogError("Parameters out of range: {0}".format(self))
        minimum = n + 2 if self.family == STRETCHED else n + 4
        if d < minimum:
            raise CatalogError(
                "{0} needs d >= {1}, got {2}".format(self.family, minimum, d)
            )

    def _check_net(self):
        n = self.n
        if n not in NET_N:
            raise CatalogError("A3 entries need n in {0}, not {1}".format(NET_N, n))
        if self.h not in NET_CASES:
            raise CatalogError("A3 case h must be in 1..6, not {0}".format(self.h))
        if self.d is None or self.d == n + 3:
            object.__setattr__(self, "d", n + 5)
        if self.d != n + 5:
            raise CatalogError(
                "A3 entries have degree n + 5 = {0}, not {1}".format(n + 5, self.d)
            )
        if self.h == 1:
            alpha = Fraction(0) if self.alpha is None else Fraction(self.alpha)
            object.__setattr__(self, "alpha", alpha)
        elif self.alpha is not None:
            raise CatalogError("Only the h=1 case takes a parameter")

    @property
    def alias_degree(self):
        """The second degree index ``n + 3`` under which A3 entries are also named."""
        return self.n + 3 if self.family == NET else self.d

    @property
    def p(self):
        """Normalized net parameter ``alpha / 6`` of the h=1 case."""
        return self.alpha / 6 if self.alpha is not None else None

    @classmethod
    def parse(cls, text):
        """
        Parse a catalog id such as ``A[4,7]`` or ``A3[h=1,a=2,n=4]``.

        Raises:
            CatalogError: On malformed or out-of-range ids.
        """
        match = ID_RE.match(text)
        if not match:
            raise CatalogError('Unparseable catalog id "{0}"'.format(text))
        family = match.group("family")
        items = [item.strip() for item in match.group("body").split(",") if item]

        if family == NET:
            values = {}
            for item in items:
                key = KEY_RE.match(item)
                if not key:
                    raise CatalogError(
                        'Bad A3 parameter "{0}" in "{1}"'.format(item, text)
                    )
                values[key.group("key")] = Fraction(key.group("value"))
            if "h" not in values or "n" not in values:
                raise CatalogError('A3 id needs h and n: "{0}"'.format(text))
            alpha = values.get("a")
            return cls(
                NET,
                int(values["n"]),
                int(values["d"]) if "d" in values else None,
                int(values["h"]),
                alpha,
            )

        try:
            numbers = [int(item) for item in items]
        except ValueError:
            raise CatalogError('Unparseable catalog id "{0}"'.format(text))
        if family == STRETCHED and len(numbers) == 2:
            return cls(STRETCHED, numbers[0], numbers[1])
        if family != STRETCHED and len(numbers) == 3 and numbers[1] == 2:
            return cls(family, numbers[0], numbers[2])
        raise CatalogError('Unparseable catalog id "{0}"'.format(text))

    def __str__(self):
        if self.family == STRETCHED:
            return "A[{0},{1}]".format(self.n, self.d)
        if self.family in (ALMOST_STRETCHED_1, ALMOST_STRETCHED_2):
            return "{0}[{1},2,{2}]".format(self.family, self.n, self.d)
        if self.h == 1:
            return "A3[h=1,a={0},n={1}]".format(_format_fraction(self.alpha), self.n)
        return "A3[h={0},n={1}]".format(self.h, self.n)


@dataclass(frozen=True)
class ExpectedProfile(object):
    """Invariants a catalog algebra is expected to have."""

    degree: int
    hilbert: tuple
    gorenstein: bool = True
    nu: int = None
    net_class: str = None

    def to_dict(self):
        return {
            "degree": self.degree,
            "hilbert": list(self.hilbert),
            "gorenstein": self.gorenstein,
            "nu": self.nu,
            "net_class": self.net_class,
        }


@dataclass(frozen=True)
class CatalogEntry(object):
    id: CatalogId
    ideal: Ideal
    expected: ExpectedProfile


def variable_names(n):
    return ["x{0}".format(k) for k in range(1, n + 1)]


def algebra_ring(n, field=QQ):
    """Return ``k[x1..xn]``."""
    return PolynomialRing(variable_names(n), field)


def family_ring(n, field=QQ):
    """Return ``k[b, x1..xn]``."""
    return PolynomialRing([PARAMETER] + variable_names(n), field)


def _cross_products(ring, n, start=2):
    """``x_i*x_j`` for ``1 <= i < j <= n`` with ``j >= start``."""
    x = _variables(ring, n)
    return [x[i] * x[j] for j in range(start, n + 1) for i in range(1, j)]


def _variables(ring, n):
    return [None] + [ring.gen("x{0}".format(k)) for k in range(1, n + 1)]


def _stretched(ring, n, d):
    x = _variables(ring, n)
    gens = _cross_products(ring, n)
    gens += [x[h] ** 2 - x[1] ** (d - n) for h in range(2, n + 1)]
    gens.append(x[1] ** (d - n + 1))
    return gens


def _almost_stretched_1(ring, n, d):
    x = _variables(ring, n)
    if d == n + 4:
        gens = [x[1] ** 2 * x[2] - x[1] ** 3, x[2] ** 2]
        tail = 3
    else:
        gens = [x[1] ** 2 * x[2], x[2] ** 2 - x[1] ** (d - n - 2)]
        tail = d - n - 1
    gens += _cross_products(ring, n, 3)
    gens += [x[h] ** 2 - x[1] ** tail for h in range(3, n + 1)]
    gens.append(x[1] ** (tail + 1))
    return gens


def _almost_stretched_2(ring, n, d):
    x = _variables(ring, n)
    e = d - n - 1
    gens = [x[1] * x[2], x[2] ** 3 - x[1] ** e]
    gens += _cross_products(ring, n, 3)
    gens += [x[h] ** 2 - x[1] ** e for h in range(3, n + 1)]
    gens.append(x[1] ** (e + 1))
    return gens


def net_socle(ring, h):
    """Return the socle monomial the squares ``x_h^2`` (h >= 4) are tied to."""
    x = _variables(ring, 3)
    if h in (1, 4):
        return x[1] ** 3
    if h in (2, 3):
        return x[1] * x[2] * x[3]
    if h == 5:
        return x[3] ** 3
    return x[1] * x[3] ** 2


def net_core(ring, h, alpha=None):
    """Return the relations among ``x1, x2, x3`` of the A3 case `h`."""
    x = _variables(ring, 3)
    if h == 1:
        alpha = ring.field(alpha or 0)
        return [
            x[1] * x[2] + x[3] ** 2,
            x[1] * x[3],
            x[2] ** 2 - x[3] ** 2 * alpha + x[1] ** 2,
        ]
    if h in (2, 3):
        p = 3 - h
        return [x[1] ** 2, x[2] ** 2, x[3] ** 2 + x[1] * x[2] * (2 * p)]
    if h == 4:
        return [
            x[2] ** 3 - x[1] ** 3,
            x[3] ** 3 - x[1] ** 3,
            x[1] * x[2],
            x[1] * x[3],
            x[2] * x[3],
        ]
    if h == 5:
        return [
            x[1] ** 2,
            x[1] * x[2],
            x[2] * x[3],
            x[2] ** 3 - x[3] ** 3,
            x[1] * x[3] ** 2 - x[3] ** 3,
        ]
    return [
        x[1] ** 2,
        x[1] * x[2],
        2 * x[1] * x[3] + x[2] ** 2,
        x[3] ** 3,
        x[2] * x[3] ** 2,
    ]


def _net(ring, n, h, alpha, last=None):
    """
    Generators of the A3 case `h` in `n` variables. When `last` is given it
    replaces the square relation of ``x_n``.
    """
    x = _variables(ring, n)
    socle = net_socle(ring, h)
    gens = net_core(ring, h, alpha)
    gens += _cross_products(ring, n, 4)
    for k in range(4, n + 1):
        if k == n and last is not None:
            gens.append(last)
        else:
            gens.append(x[k] ** 2 - socle)
    return gens


def presentation_generators(cid, ring):
    """Return the generators of `cid` as polynomials of `ring` (which has x1..xn)."""
    if cid.family == STRETCHED:
        return _stretched(ring, cid.n, cid.d)
    if cid.family == ALMOST_STRETCHED_1:
        return _almost_stretched_1(ring, cid.n, cid.d)
    if cid.family == ALMOST_STRETCHED_2:
        return _almost_stretched_2(ring, cid.n, cid.d)
    return _net(ring, cid.n, cid.h, cid.alpha)


def expected_profile(cid):
    """Return the :class:`ExpectedProfile` of a catalog id."""
    n, d = cid.n, cid.d
    if cid.family == STRETCHED:
        return ExpectedProfile(d, (1, n) + (1,) * (d - n - 1))
    if cid.family in (ALMOST_STRETCHED_1, ALMOST_STRETCHED_2):
        nu = n - 1 if cid.family == ALMOST_STRETCHED_1 else n - 2
        return ExpectedProfile(d, (1, n, 2) + (1,) * (d - n - 3), nu=nu)
    return ExpectedProfile(d, (1, n, 3, 1), net_class=expected_net_class(cid))


def expected_net_class(cid):
    if cid.h != 1:
        return NET_LABELS[cid.h]
    if cid.alpha in NODAL_ALPHAS:
        return INTEGRAL_NODAL
    return INTEGRAL_SMOOTH


def presentation(cid, field=QQ):
    """
    Return the :class:`CatalogEntry` of `cid` over `field`.

    Args:
        cid (CatalogId|str): Catalog id.
        field (RationalField|PrimeField, optional): Defaults to ``Q``.

    Raises:
        CatalogError: When the id is out of range.
    """
    if isinstance(cid, str):
        cid = CatalogId.parse(cid)
    ring = algebra_ring(cid.n, field)
    ideal = Ideal(ring, presentation_generators(cid, ring))
    return CatalogEntry(cid, ideal, expected_profile(cid))


def listing(alpha=0):
    """Return every catalog id in range (the h=1 case at parameter `alpha`)."""
    ids = []
    for n in range(2, MAX_DEGREE - 1):
        for d in range(n + 2, MAX_DEGREE + 1):
            ids.append(CatalogId(STRETCHED, n, d))
    for family in (ALMOST_STRETCHED_1, ALMOST_STRETCHED_2):
        for n in range(2, MAX_DEGREE - 3):
            for d in range(n + 4, MAX_DEGREE + 1):
                ids.append(CatalogId(family, n, d))
    for n in NET_N:
        for h in NET_CASES:
            ids.append(CatalogId(NET, n, h=h, alpha=alpha if h == 1 else None))
    return ids


def pfaffian_matrix(h, field=QQ):
    """
    Return the 5x5 skew-symmetric matrix whose 4x4 pfaffians generate the A3 case
    `h` in three variables.

    Raises:
        CatalogError: When `h` is not 4, 5 or 6.
    """
    ring = algebra_ring(3, field)
    x1, x2, x3 = ring.gens
    zero = ring.zero
    if h == 4:
        rows = [
            [zero, zero, zero, x1, x2],
            [zero, zero, x3, -x1, zero],
            [zero, -x3, zero, x2 ** 2, x1 ** 2],
            [-x1, x1, -(x2 ** 2), zero, -(x3 ** 2)],
            [-x2, zero, -(x1 ** 2), x3 ** 2, zero],
        ]
    elif h == 5:
        rows = [
            [zero, zero, x2, -x3, x1],
            [zero, zero, -x2, x1, zero],
            [-x2, x2, zero, x3 ** 2, -(x3 ** 2)],
            [x3, -x1, -(x3 ** 2), zero, x2 ** 2],
            [-x1, zero, x3 ** 2, -(x2 ** 2), zero],
        ]
    elif h == 6:
        rows = [
            [zero, zero, -2 * x3, x1, -x2],
            [zero, zero, -x2, zero, x1],
            [2 * x3, x2, zero, zero, zero],
            [-x1, zero, zero, zero, x3 ** 2],
            [x2, -x1, zero, -(x3 ** 2), zero],
        ]
    else:
        raise CatalogError("Pfaffian matrices exist for h in 4..6, not {0}".format(h))
    return rows


@dataclass(frozen=True)
class FamilyId(object):
    """
    Identifier of a one-parameter family degenerating to a catalog algebra.

    Args:
        kind (str): One of :data:`FAMILY_KINDS`.
        base (CatalogId): The special fibre.
        variant (str, optional): ``"printed"`` (default) or ``"corrected"``.

    Raises:
        CatalogError: When the family does not exist for `base`.
    """

    kind: str
    base: CatalogId
    variant: str = PRINTED

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise CatalogError(
                'Family kind must be one of {0}, not "{1}"'.format(
                    ", ".join(FAMILY_KINDS), self.kind
                )
            )
        if self.variant not in VARIANTS:
            raise CatalogError(
                'Family variant must be printed or corrected, not "{0}"'.format(
                    self.variant
                )
            )
        family = {
            STRETCHED_SPLIT: STRETCHED,
            A2_SPLIT: ALMOST_STRETCHED_2,
            A1_JUMP: ALMOST_STRETCHED_1,
            NET_SPLIT: NET,
            H4_LIMIT: NET,
        }[self.kind]
        if self.base.family != family:
            raise CatalogError(
                "Family {0} degenerates to {1} algebras, not {2}".format(
                    self.kind, family, self.base
                )
            )
        if self.kind == NET_SPLIT and self.base.n < 4:
            raise CatalogError("net-split needs n >= 4, not {0}".format(self.base))
        if self.kind == H4_LIMIT and self.base.h != 4:
            raise CatalogError("h4-limit degenerates to h=4, not {0}".format(self.base))

    @classmethod
    def parse(cls, text):
        match = FAMILY_RE.match(text)
        if not match:
            raise CatalogError('Unparseable family id "{0}"'.format(text))
        return cls(
            match.group("kind"),
            CatalogId.parse(match.group("base")),
            match.group("variant") or PRINTED,
        )

    def with_variant(self, variant):
        return FamilyId(self.kind, self.base, variant)

    def __str__(self):
        return "{0}:{1}@{2}".format(self.kind, self.base, self.variant)


@dataclass(frozen=True)
class GeneralFiber(object):
    """
    Expected shape of a fibre over ``b != 0``.

    Attributes:
        description (str): Catalog ids of the factors, e.g. ``"A[4,6] + pt"``.
        hilbert (tuple): Hilbert functions of the local factors, sorted.
        nu (int): Expected square-zero invariant of the non-point factor, when
            the family is built to exhibit one.
    """

    description: str
    hilbert: tuple
    nu: int = None


@dataclass(frozen=True)
class Family(object):
    """A family ideal with its claimed decomposition and fibre targets."""

    id: FamilyId
    ideal: Ideal
    components: tuple = None
    special: CatalogId = None
    general: GeneralFiber = None


def _point_ideal(ring, n, coordinate, value):
    """``(x_k - v_k)`` with all coordinates zero except ``x_coordinate = value``."""
    x = _variables(ring, n)
    gens = []
    for k in range(1, n + 1):
        gens.append(x[k] - value if k == coordinate else x[k])
    return Ideal(ring, gens)


def _hilbert_stretched(n, d):
    return (1, n) + (1,) * (d - n - 1)


def _stretched_split(fid, ring):
    n, d = fid.base.n, fid.base.d
    x = _variables(ring, n)
    b = ring.gen(PARAMETER)
    gens = _cross_products(ring, n)
    gens += [
        x[h] ** 2 - b * x[1] ** (d - n - 1) - x[1] ** (d - n) for h in range(2, n + 1)
    ]
    if fid.variant == PRINTED:
        gens.append(x[1] ** (d - n + 1))
    else:
        gens.append(x[1] ** (d - n) * (x[1] + b))
    residual = _cross_products(ring, n)
    residual += [x[h] ** 2 - b * x[1] ** (d - n - 1) for h in range(2, n + 1)]
    residual.append(x[1] ** (d - n))

    if d == n + 2:
        hilbert = (1, n - 1, 1)
        target = "A[{0},{1}]".format(n - 1, d - 1)
    else:
        hilbert = _hilbert_stretched(n, d - 1)
        target = "A[{0},{1}]".format(n, d - 1)
    general = GeneralFiber(target + " + pt", tuple(sorted([(1,), hilbert])))
    components = (_point_ideal(ring, n, 1, -b), Ideal(ring, residual))
    return gens, components, general


def _a2_split(fid, ring):
    n, d = fid.base.n, fid.base.d
    x = _variables(ring, n)
    b = ring.gen(PARAMETER)
    e = d - n - 1
    gens = [x[1] * x[2], x[2] ** 3 - b * x[1] ** (e - 1) - x[1] ** e]
    gens += _cross_products(ring, n, 3)
    gens += [x[h] ** 2 - b * x[1] ** (e - 1) - x[1] ** e for h in range(3, n + 1)]
    if fid.variant == PRINTED:
        gens.append(x[1] ** (e + 1))
    else:
        gens.append(x[1] ** e * (x[1] + b))
    residual = [x[1] * x[2], x[2] ** 3 - b * x[1] ** (e - 1)]
    residual += _cross_products(ring, n, 3)
    residual += [x[h] ** 2 - b * x[1] ** (e - 1) for h in range(3, n + 1)]
    residual.append(x[1] ** e)

    if d == n + 4:
        hilbert = (1, n, 1, 1)
        target = "A[{0},{1}]".format(n, n + 3)
    else:
        hilbert = (1, n, 2) + (1,) * (d - n - 4)
        target = "A2[{0},2,{1}]".format(n, d - 1)
    general = GeneralFiber(target + " + pt", tuple(sorted([(1,), hilbert])))
    components = (_point_ideal(ring, n, 1, -b), Ideal(ring, residual))
    return gens, components, general


def _a1_jump(fid, ring):
    n, d = fid.base.n, fid.base.d
    x = _variables(ring, n)
    b = ring.gen(PARAMETER)
    if d == n + 4:
        square = x[1] ** 2 if fid.variant == PRINTED else x[2] ** 2
        gens = [
            b * x[1] * x[2] + square,
            x[1] ** 2 * x[2] + b * x[2] ** 3 - x[1] ** 3,
        ]
        tail = 3
    else:
        gens = [
            b * x[1] * x[2] + x[2] ** 2 - x[1] ** (d - n - 2),
            b * x[2] ** 3 - b * x[1] ** (d - n - 1) + x[1] ** 2 * x[2],
        ]
        tail = d - n - 1
    gens += _cross_products(ring, n, 3)
    gens += [x[h] ** 2 - x[1] ** tail for h in range(3, n + 1)]
    gens.append(x[1] ** (tail + 1))

    hilbert = (1, n, 2) + (1,) * (d - n - 3)
    general = GeneralFiber("A2[{0},2,{1}]".format(n, d), (hilbert,), nu=n - 2)
    return gens, None, general


def _net_split(fid, ring):
    base = fid.base
    n, h = base.n, base.h
    x = _variables(ring, n)
    b = ring.gen(PARAMETER)
    socle = net_socle(ring, h)
    last = x[n] ** 2 - b * x[n] - socle
    gens = _net(ring, n, h, base.alpha, last)
    if fid.variant == PRINTED and h == 4:
        gens.append(x[n] ** 2 - socle)
    residual = Ideal(ring, gens + [x[n] ** 2])
    value = -b if fid.variant == PRINTED else b
    components = (_point_ideal(ring, n, n, value), residual)

    smaller = CatalogId(NET, n - 1, h=h, alpha=base.alpha if h == 1 else None)
    general = GeneralFiber(
        "{0} + pt".format(smaller), tuple(sorted([(1,), (1, n - 1, 3, 1)]))
    )
    return gens, components, general


def _h4_limit(fid, ring):
    n = fid.base.n
    x = _variables(ring, n)
    b = ring.gen(PARAMETER)
    if fid.variant == PRINTED:
        gens = [
            x[2] ** 3 - b * x[1] ** 2 - x[1] ** 3,
            x[1] ** 3 - b * x[3] ** 2 - x[1] ** 3,
        ]
        gens += _cross_products(ring, n)
        gens += [x[h] ** 2 - b * x[1] ** 2 - x[1] for h in range(4, n + 1)]
        residual = [x[2] ** 3 - b * x[1] ** 2, x[1] ** 3 - b * x[3] ** 2]
        residual += _cross_products(ring, n)
        residual += [x[h] ** 2 - b * x[1] ** 2 for h in range(4, n + 1)]
    else:
        gens = [
            x[2] ** 3 - b * x[1] ** 2 - x[1] ** 3,
            x[3] ** 3 - b * x[1] ** 2 - x[1] ** 3,
        ]
        gens += _cross_products(ring, n)
        gens += [x[h] ** 2 - b * x[1] ** 2 - x[1] ** 3 for h in range(4, n + 1)]
        residual = [x[2] ** 3 - b * x[1] ** 2, x[3] ** 3 - b * x[1] ** 2]
        residual += _cross_products(ring, n)
        residual += [x[h] ** 2 - b * x[1] ** 2 for h in range(4, n + 1)]
        residual.append(x[1] ** 3)

    components = (_point_ideal(ring, n, 1, -b), Ideal(ring, residual))
    hilbert = tuple(sorted([(1,), (1, n, 2, 1)]))
    if fid.variant == PRINTED:
        general = GeneralFiber("A1[{0},2,{1}] + pt".format(n, n + 4), hilbert, n - 1)
    else:
        # the corrected equations degenerate almost stretched algebras of type 2
        general = GeneralFiber("A2[{0},2,{1}] + pt".format(n, n + 4), hilbert, n - 2)
    return gens, components, general


_BUILDERS = {
    STRETCHED_SPLIT: _stretched_split,
    A2_SPLIT: _a2_split,
    A1_JUMP: _a1_jump,
    NET_SPLIT: _net_split,
    H4_LIMIT: _h4_limit,
}


def family(fid, field=QQ):
    """
    Return the :class:`Family` of `fid` in ``k[b, x1..xn]``.

    Args:
        fid (FamilyId|str): Family id.
        field (RationalField|PrimeField, optional): Defaults to ``Q``.

    Raises:
        CatalogError: When the id is out of range.
    """
    if isinstance(fid, str):
        fid = FamilyId.parse(fid)
    ring = family_ring(fid.base.n, field)
    gens, components, general = _BUILDERS[fid.kind](fid, ring)
    return Family(fid, Ideal(ring, gens), components, fid.base, general)


def family_ideal(fid, field=QQ):
    """Return the one-parameter ideal ``J`` of `fid`."""
    return family(fid, field).ideal


def family_listing():
    """Return every family id in range, printed variant first."""
    ids = []
    for cid in listing():
        kinds = {
            STRETCHED: [STRETCHED_SPLIT],
            ALMOST_STRETCHED_1: [A1_JUMP],
            ALMOST_STRETCHED_2: [A2_SPLIT],
            NET: [NET_SPLIT, H4_LIMIT],
        }[cid.family]
        for kind in kinds:
            for variant in VARIANTS:
                try:
                    ids.append(FamilyId(kind, cid, variant))
                except CatalogError:
                    continue
    return ids
