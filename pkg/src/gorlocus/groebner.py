"""
The groebner module.

Buchberger's algorithm with the normal selection strategy and the coprime and
chain criteria, reduced bases, normal forms, ideal equality and intersection,
standard monomials of zero-dimensional ideals, first syzygies of a generating
set and radical membership.
"""

import logging

from .helpers import exponents_of_degree
from .polyring import (
    DEGREVLEX_ORDER,
    Polynomial,
    RingMismatchError,
    elimination_order,
)


log = logging.getLogger(__name__)

AUXILIARY = "_t"


class NotZeroDimensionalError(ValueError):
    """Exception raised when a quotient ring is not finite-dimensional."""

    pass


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _pair_key(entries, pair):
    """Normal strategy: smallest lcm degree, then first index."""
    i, j = pair
    return (sum(_lcm(entries[i].lm, entries[j].lm)), pair)


def _quotient(b, a):
    return tuple(y - x for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _subtract_shifted(p, coeff, shift, g):
    """In place ``p -= coeff * x^shift * g`` on term dicts."""
    for exponent, value in g.items():
        key = _add(exponent, shift)
        new = p.get(key, 0) - coeff * value
        if new:
            p[key] = new
        elif key in p:
            del p[key]


def _reduce_terms(terms, basis, key, quotients=None):
    """
    Fully reduce the term dict `terms` by `basis` (list of ``(lm, terms)`` with
    monic terms). When `quotients` is a list of dicts, the multipliers used for
    basis element ``i`` are accumulated into ``quotients[i]``.
    """
    p = dict(terms)
    remainder = {}
    while p:
        lm = max(p, key=key)
        coeff = p[lm]
        for index, (glm, g) in enumerate(basis):
            if _divides(glm, lm):
                shift = _quotient(lm, glm)
                _subtract_shifted(p, coeff, shift, g)
                if quotients is not None:
                    bucket = quotients[index]
                    value = bucket.get(shift, 0) + coeff
                    if value:
                        bucket[shift] = value
                    elif shift in bucket:
                        del bucket[shift]
                break
        else:
            remainder[lm] = coeff
            del p[lm]
    return remainder


class Ideal(object):
    """
    A finitely generated ideal.

    Args:
        ring (PolynomialRing): Ambient ring.
        generators (list): Polynomials (or strings parsed in `ring`). Zero
            generators are dropped.

    Raises:
        RingMismatchError: When a generator lives in another ring.
    """

    __slots__ = ("ring", "generators", "_bases")

    def __init__(self, ring, generators):
        gens = []
        for gen in generators:
            if isinstance(gen, Polynomial) and gen.ring != ring:
                raise RingMismatchError(
                    "Generator {0} is not in {1}".format(gen, ring)
                )
            gen = ring(gen)
            if not gen.is_zero():
                gens.append(gen)
        self.ring = ring
        self.generators = tuple(gens)
        self._bases = {}

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return "Ideal({0})".format(self)

    def __str__(self):
        return "({0})".format(", ".join(str(gen) for gen in self.generators))

    def groebner(self, order=DEGREVLEX_ORDER):
        """Return the cached reduced Gröbner basis for `order`."""
        if order not in self._bases:
            self._bases[order] = buchberger(self, order)
        return self._bases[order]

    def __add__(self, other):
        _check_rings(self, other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other):
        _check_rings(self, other)
        return Ideal(
            self.ring, [f * g for f in self.generators for g in other.generators]
        )

    def contains(self, poly):
        """Return whether `poly` lies in the ideal."""
        return normal_form(self.ring(poly), self.groebner()).is_zero()

    def __contains__(self, poly):
        return self.contains(poly)

    def is_unit(self):
        return is_unit_basis(self.groebner())

    def convert(self, ring):
        """Return the ideal with generators rewritten in `ring` (by variable name)."""
        return Ideal(ring, [ring.convert(gen) for gen in self.generators])

    def substitute(self, images, ring):
        return Ideal(ring, [gen.substitute(images, ring) for gen in self.generators])

    def specialize(self, name, value):
        """Return the ideal with variable `name` set to `value`, in the smaller ring."""
        ring = self.ring.drop([name])
        return Ideal(ring, [gen.specialize(name, value) for gen in self.generators])


def _check_rings(first, second):
    if first.ring != second.ring:
        raise RingMismatchError(
            "Ideals over {0} and {1} cannot be combined".format(first.ring, second.ring)
        )


class GroebnerBasis(object):
    """
    A reduced Gröbner basis.

    Attributes:
        order (MonomialOrder): The monomial order.
        elements (tuple): Monic elements sorted by ascending leading monomial.
        source (Ideal): The ideal it was computed from.
        cofactors (tuple|None): When tracked, ``cofactors[k][i]`` is the multiplier
            of ``source.generators[i]`` in ``elements[k]``.
    """

    __slots__ = ("order", "elements", "source", "cofactors", "leading")

    def __init__(self, order, elements, source, cofactors=None):
        self.order = order
        self.elements = tuple(elements)
        self.source = source
        self.cofactors = cofactors
        self.leading = tuple(g.leading_monomial(order) for g in self.elements)

    @property
    def ring(self):
        return self.source.ring

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order == other.order and self.elements == other.elements

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.order, self.elements))

    def __repr__(self):
        return "GroebnerBasis([{0}])".format(", ".join(str(g) for g in self.elements))

    def pairs(self):
        return [(glm, g.terms) for glm, g in zip(self.leading, self.elements)]


class _Entry(object):
    __slots__ = ("lm", "terms", "cofactors")

    def __init__(self, lm, terms, cofactors):
        self.lm = lm
        self.terms = terms
        self.cofactors = cofactors


def _make_monic(ring, terms, key, cofactors):
    lm = max(terms, key=key)
    inverse = ring.field.one / terms[lm]
    terms = {e: c * inverse for e, c in terms.items()}
    if cofactors is not None:
        cofactors = [cof.scale(inverse) for cof in cofactors]
    return _Entry(lm, terms, cofactors)


def _combine_cofactors(ring, parts, quotients, entries):
    """Return ``sum(mono * cof) - sum(q_r * cof_r)`` for cofactor tracking."""
    result = None
    for shift, coeff, cofactors in parts:
        scaled = [cof.shift(shift, coeff) for cof in cofactors]
        result = scaled if result is None else [a + b for a, b in zip(result, scaled)]
    for index, bucket in enumerate(quotients):
        if not bucket:
            continue
        q = Polynomial._make(ring, dict(bucket))
        result = [a - q * b for a, b in zip(result, entries[index].cofactors)]
    return result


def buchberger(ideal, order=DEGREVLEX_ORDER, track=False):
    """
    Return the reduced Gröbner basis of `ideal` for `order`.

    Args:
        ideal (Ideal): Nonempty ideal.
        order (MonomialOrder, optional): Defaults to degrevlex.
        track (bool, optional): Keep, for every basis element, its expression in
            the generators of `ideal`. Defaults to ``False``.

    Returns:
        GroebnerBasis

    Raises:
        ValueError: When `ideal` has no generators.
    """
    ring = ideal.ring
    key = order.key
    m = len(ideal.generators)
    if not m:
        raise ValueError("Cannot compute a Gröbner basis of the zero ideal")

    entries = []
    for index, gen in enumerate(ideal.generators):
        cofactors = None
        if track:
            cofactors = [ring.zero] * m
            cofactors[index] = ring.one
        entries.append(_make_monic(ring, dict(gen.terms), key, cofactors))

    pending = set()
    for j in range(len(entries)):
        for i in range(j):
            pending.add((i, j))

    processed = 0
    skipped = 0
    while pending:
        i, j = min(pending, key=lambda pair: _pair_key(entries, pair))
        pending.discard((i, j))
        first, second = entries[i], entries[j]
        lcm = _lcm(first.lm, second.lm)

        if lcm == _add(first.lm, second.lm):
            skipped += 1
            continue

        chain = False
        for k, entry in enumerate(entries):
            if k in (i, j) or not _divides(entry.lm, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (
                min(j, k),
                max(j, k),
            ) not in pending:
                chain = True
                break
        if chain:
            skipped += 1
            continue

        processed += 1
        shift_i = _quotient(lcm, first.lm)
        shift_j = _quotient(lcm, second.lm)
        spoly = {}
        _subtract_shifted(spoly, -1, shift_i, first.terms)
        _subtract_shifted(spoly, 1, shift_j, second.terms)
        if not spoly:
            continue

        basis = [(entry.lm, entry.terms) for entry in entries]
        quotients = [dict() for _ in entries] if track else None
        remainder = _reduce_terms(spoly, basis, key, quotients)
        if not remainder:
            continue

        cofactors = None
        if track:
            one = ring.field.one
            cofactors = _combine_cofactors(
                ring,
                [(shift_i, one, first.cofactors), (shift_j, -one, second.cofactors)],
                quotients,
                entries,
            )
        entries.append(_make_monic(ring, remainder, key, cofactors))
        new = len(entries) - 1
        for k in range(new):
            pending.add((k, new))

    log.debug(
        "Buchberger: %d generators, %d pairs reduced, %d skipped, %d elements",
        m,
        processed,
        skipped,
        len(entries),
    )

    entries = _minimize(entries)
    entries = _interreduce(ring, entries, key, track)
    entries.sort(key=lambda entry: key(entry.lm))

    elements = [Polynomial._make(ring, entry.terms) for entry in entries]
    cofactors = None
    if track:
        cofactors = tuple(tuple(entry.cofactors) for entry in entries)
    return GroebnerBasis(order, elements, ideal, cofactors)


def _minimize(entries):
    kept = []
    for index, entry in enumerate(entries):
        redundant = False
        for other_index, other in enumerate(entries):
            if other_index == index or not _divides(other.lm, entry.lm):
                continue
            if other.lm != entry.lm or other_index < index:
                redundant = True
                break
        if not redundant:
            kept.append(entry)
    return kept


def _interreduce(ring, entries, key, track):
    for index, entry in enumerate(entries):
        others = [other for k, other in enumerate(entries) if k != index]
        basis = [(other.lm, other.terms) for other in others]
        quotients = [dict() for _ in others] if track else None
        terms = _reduce_terms(entry.terms, basis, key, quotients)
        cofactors = None
        if track:
            cofactors = _combine_cofactors(
                ring,
                [(ring.unit_exponent, ring.field.one, entry.cofactors)],
                quotients,
                others,
            )
        entries[index] = _make_monic(ring, terms, key, cofactors)
    return entries


def _check_same_ring(poly, basis):
    if poly.ring != basis.ring:
        raise RingMismatchError(
            "Polynomial over {0} reduced by a basis over {1}".format(
                poly.ring, basis.ring
            )
        )


def normal_form(poly, basis):
    """
    Return the remainder of `poly` on full reduction by the Gröbner basis `basis`.

    Raises:
        RingMismatchError: When `poly` and `basis` live in different rings.
    """
    _check_same_ring(poly, basis)
    remainder = _reduce_terms(poly.terms, basis.pairs(), basis.order.key)
    return Polynomial._make(poly.ring, remainder)


def divide(poly, basis):
    """
    Return ``(quotients, remainder)`` with ``poly = sum(q_k * g_k) + remainder``.
    """
    _check_same_ring(poly, basis)
    quotients = [dict() for _ in basis.elements]
    remainder = _reduce_terms(poly.terms, basis.pairs(), basis.order.key, quotients)
    ring = poly.ring
    return (
        [Polynomial._make(ring, bucket) for bucket in quotients],
        Polynomial._make(ring, remainder),
    )


def is_unit_basis(basis):
    return len(basis.elements) == 1 and basis.elements[0].is_constant()


def ideal_equal(first, second, order=DEGREVLEX_ORDER):
    """
    Return whether two ideals are equal (their reduced bases coincide).

    Raises:
        RingMismatchError: When the ideals live in different rings.
    """
    _check_rings(first, second)
    return first.groebner(order).elements == second.groebner(order).elements


def ideal_intersect(first, second):
    """
    Return generators of ``first ∩ second`` by eliminating ``t`` from
    ``t*first + (1 - t)*second``.
    """
    _check_rings(first, second)
    ring = first.ring
    extended = ring.extend([AUXILIARY], prepend=True)
    t = extended.gen(AUXILIARY)

    gens = [t * extended.convert(f) for f in first.generators]
    gens += [(1 - t) * extended.convert(g) for g in second.generators]
    basis = buchberger(Ideal(extended, gens), elimination_order(1))

    kept = [
        ring.convert(g)
        for g in basis.elements
        if all(exponent[0] == 0 for exponent in g.terms)
    ]
    return Ideal(ring, kept)


def is_zero_dimensional(basis):
    """Return whether every variable has a pure power among the leading monomials."""
    nvars = basis.ring.ngens
    found = set()
    for lm in basis.leading:
        support = [index for index, power in enumerate(lm) if power]
        if not support:
            return True
        if len(support) == 1:
            found.add(support[0])
    return len(found) == nvars


def standard_monomials(basis):
    """
    Return the monomials outside the leading term ideal, ascending in the order.

    Raises:
        NotZeroDimensionalError: When the quotient is infinite-dimensional.
    """
    if not is_zero_dimensional(basis):
        raise NotZeroDimensionalError(
            "Ideal {0} is not zero-dimensional".format(basis.source)
        )
    if is_unit_basis(basis):
        return []

    nvars = basis.ring.ngens
    leading = basis.leading
    start = (0,) * nvars
    seen = {start}
    frontier = [start]
    while frontier:
        following = []
        for exponent in frontier:
            for index in range(nvars):
                step = list(exponent)
                step[index] += 1
                step = tuple(step)
                if step in seen or any(_divides(lm, step) for lm in leading):
                    continue
                seen.add(step)
                following.append(step)
        frontier = following
    return sorted(seen, key=basis.order.key)


def hilbert_function_value(basis, degree):
    """
    Return the number of standard monomials of total `degree` (the affine Hilbert
    function of a homogeneous ideal).
    """
    return sum(
        1
        for exponent in exponents_of_degree(basis.ring.ngens, degree)
        if not any(_divides(lm, exponent) for lm in basis.leading)
    )


def syzygies(ideal):
    """
    Return generators of the first syzygy module of the generators of `ideal`.

    Each row ``r`` satisfies ``sum(r[i] * ideal.generators[i]) == 0``. The rows are
    the reduction syzygies of all basis pairs lifted through the recorded change
    of basis, plus the rows expressing each generator through the basis.

    Returns:
        list: Rows, each a list of polynomials.
    """
    ring = ideal.ring
    basis = buchberger(ideal, DEGREVLEX_ORDER, track=True)
    key = basis.order.key
    m = len(ideal.generators)
    s = len(basis.elements)
    transform = basis.cofactors
    pairs = basis.pairs()
    one = ring.field.one

    rows = []
    seen = set()

    def lift(coefficients):
        row = [ring.zero] * m
        for k, coeff in enumerate(coefficients):
            if coeff.is_zero():
                continue
            for i in range(m):
                row[i] = row[i] + coeff * transform[k][i]
        return row

    def keep(row):
        if all(entry.is_zero() for entry in row):
            return
        marker = tuple(row)
        if marker not in seen:
            seen.add(marker)
            rows.append(row)

    for l in range(s):
        for k in range(l):
            lm_k, g_k = pairs[k]
            lm_l, g_l = pairs[l]
            lcm = _lcm(lm_k, lm_l)
            shift_k = _quotient(lcm, lm_k)
            shift_l = _quotient(lcm, lm_l)
            spoly = {}
            _subtract_shifted(spoly, -1, shift_k, g_k)
            _subtract_shifted(spoly, 1, shift_l, g_l)
            quotients = [dict() for _ in range(s)]
            remainder = _reduce_terms(spoly, pairs, key, quotients)
            if remainder:  # pragma: no cover
                raise ArithmeticError("S-polynomial did not reduce to zero")
            coefficients = [Polynomial._make(ring, q) for q in quotients]
            coefficients = [-c for c in coefficients]
            coefficients[k] = coefficients[k] + ring.monomial(shift_k, one)
            coefficients[l] = coefficients[l] - ring.monomial(shift_l, one)
            keep(lift(coefficients))

    for i, gen in enumerate(ideal.generators):
        quotients, remainder = divide(gen, basis)
        if not remainder.is_zero():  # pragma: no cover
            raise ArithmeticError("Generator did not reduce to zero")
        row = [-entry for entry in lift(quotients)]
        row[i] = row[i] + ring.one
        keep(row)

    log.debug("Syzygies: %d generators, %d basis elements, %d rows", m, s, len(rows))
    return rows


def radical_membership(poly, ideal):
    """
    Return whether `poly` lies in the radical of `ideal`: ``1`` belongs to
    ``ideal + (1 - t*poly)`` in the ring with an extra variable ``t``.
    """
    if poly.ring != ideal.ring:
        raise RingMismatchError(
            "Polynomial over {0} tested against an ideal over {1}".format(
                poly.ring, ideal.ring
            )
        )
    if poly.is_zero():
        return True

    extended = ideal.ring.extend([AUXILIARY])
    t = extended.gen(AUXILIARY)
    gens = [extended.convert(gen) for gen in ideal.generators]
    gens.append(1 - t * extended.convert(poly))
    return is_unit_basis(buchberger(Ideal(extended, gens)))
