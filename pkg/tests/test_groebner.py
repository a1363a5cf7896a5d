from hypothesis import given, settings, strategies as st
import pytest

from gorlocus.fields import PrimeField
from gorlocus.groebner import (
    Ideal,
    NotZeroDimensionalError,
    buchberger,
    divide,
    hilbert_function_value,
    ideal_equal,
    ideal_intersect,
    is_zero_dimensional,
    normal_form,
    radical_membership,
    standard_monomials,
    syzygies,
)
from gorlocus.helpers import exponents_of_degree
from gorlocus.linalg import Subspace
from gorlocus.parser import parse_polynomial
from gorlocus.polyring import (
    LEX_ORDER,
    Polynomial,
    PolynomialRing,
    RingMismatchError,
)


parametrize = pytest.mark.parametrize

R = PolynomialRing(["x", "y", "z"])
x, y, z = R.gens


def ideal(*texts, ring=R):
    return Ideal(ring, [parse_polynomial(text, ring) for text in texts])


def test_reduced_basis():
    basis = ideal("x^2 - y", "x*y - 1").groebner(LEX_ORDER)
    # The smallest lex element involves y alone.
    assert basis.elements[0] == parse_polynomial("y^3 - 1", R)
    assert all(g.leading_coefficient(LEX_ORDER) == 1 for g in basis)


def test_basis_is_cached():
    i = ideal("x^2", "y^2")
    assert i.groebner() is i.groebner()


def test_unit_ideal():
    i = ideal("x", "x - 1")
    assert i.is_unit()
    assert standard_monomials(i.groebner()) == []


def test_membership():
    i = ideal("x^2 - y", "y^2")
    assert i.contains("x^4")
    assert "x^2*y - y^2" in i
    assert not i.contains("x")


def test_normal_form_ring_mismatch():
    other = PolynomialRing(["x", "y"])
    with pytest.raises(RingMismatchError):
        normal_form(other.gen("x"), ideal("x").groebner())


def test_divide():
    i = ideal("x^2 - y", "y^2")
    basis = i.groebner()
    poly = parse_polynomial("x^3 + x*y^2 + z", R)
    quotients, remainder = divide(poly, basis)
    total = remainder
    for q, g in zip(quotients, basis.elements):
        total = total + q * g
    assert total == poly
    assert remainder == normal_form(poly, basis)


@parametrize(
    "first, second, expected",
    [
        (("x", "y"), ("x + y", "x - y"), True),
        (("x^2", "y"), ("x", "y"), False),
        (("x*y", "x^2 - y^2"), ("x^2 - y^2", "x*y + x^2 - y^2"), True),
    ],
)
def test_ideal_equal(first, second, expected):
    assert ideal_equal(ideal(*first), ideal(*second)) is expected


def test_ideal_equal_ring_mismatch():
    other = PolynomialRing(["x", "y"])
    with pytest.raises(RingMismatchError):
        ideal_equal(ideal("x"), Ideal(other, [other.gen("x")]))


def test_ideal_intersect():
    meet = ideal_intersect(ideal("x"), ideal("y"))
    assert ideal_equal(meet, ideal("x*y"))


def test_ideal_intersect_of_points():
    origin = ideal("x", "y", "z")
    point = ideal("x - 1", "y", "z")
    meet = ideal_intersect(origin, point)
    assert ideal_equal(meet, ideal("x^2 - x", "y", "z"))


@parametrize(
    "texts, expected",
    [
        (("x^2", "y^2", "z"), [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0)]),
        (("x", "y", "z"), [(0, 0, 0)]),
    ],
)
def test_standard_monomials(texts, expected):
    assert sorted(standard_monomials(ideal(*texts).groebner())) == expected


def test_standard_monomials_not_zero_dimensional():
    basis = ideal("x^2", "y").groebner()
    assert not is_zero_dimensional(basis)
    with pytest.raises(NotZeroDimensionalError):
        standard_monomials(basis)


def test_hilbert_function_value():
    basis = ideal("x*y", "x^2 - y^2", "z").groebner()
    values = [hilbert_function_value(basis, degree) for degree in range(5)]
    assert values == [1, 2, 1, 0, 0]


def test_syzygies_of_monomials():
    i = ideal("x", "y")
    rows = syzygies(i)
    assert rows
    for row in rows:
        assert sum((a * g for a, g in zip(row, i.generators)), R.zero) == 0


def test_radical_membership():
    i = ideal("x^3", "y^2")
    assert radical_membership(x + y, i)
    assert not radical_membership(z, i)
    assert radical_membership(R.zero, i)


def test_prime_field_basis():
    ring = PolynomialRing(["x", "y"], PrimeField(11))
    i = ideal("x^2 - 3*y", "y^2", ring=ring)
    assert len(standard_monomials(i.groebner())) == 4


def test_ideal_operations():
    i = ideal("x", "0")
    assert len(i) == 1
    assert len(i + ideal("y")) == 2
    assert ideal_equal(i * ideal("y"), ideal("x*y"))
    assert ideal_equal(i.specialize("z", 1), Ideal(R.drop(["z"]), ["x"]))
    assert str(ideal("x", "y")) == "(x, y)"


# Membership against linear algebra on a graded piece of a homogeneous ideal.

quadric_terms = st.dictionaries(
    st.sampled_from(exponents_of_degree(3, 2)),
    st.integers(min_value=-3, max_value=3),
    min_size=1,
    max_size=3,
)
cubic_terms = st.dictionaries(
    st.sampled_from(exponents_of_degree(3, 3)),
    st.integers(min_value=-3, max_value=3),
    max_size=4,
)


def _graded_piece(generators, degree):
    monomials = exponents_of_degree(3, degree)
    index = {m: k for k, m in enumerate(monomials)}
    vectors = []
    for g in generators:
        for shift in exponents_of_degree(3, degree - g.degree()):
            product = g.shift(shift, 1)
            vectors.append({index[e]: c for e, c in product.terms.items()})
    return Subspace(len(monomials), vectors), index


@settings(max_examples=100, deadline=None)
@given(st.lists(quadric_terms, min_size=1, max_size=3), cubic_terms)
def test_membership_matches_linear_algebra(generator_terms, candidate_terms):
    generators = [Polynomial(R, terms) for terms in generator_terms]
    generators = [g for g in generators if not g.is_zero()]
    if not generators:
        return
    i = Ideal(R, generators)
    candidate = Polynomial(R, candidate_terms)
    piece, index = _graded_piece(generators, 3)
    vector = {index[e]: c for e, c in candidate.terms.items()}
    assert i.contains(candidate) == piece.contains(vector)


@settings(max_examples=30, deadline=None)
@given(st.lists(quadric_terms, min_size=1, max_size=3))
def test_syzygy_rows_vanish(generator_terms):
    generators = [Polynomial(R, terms) for terms in generator_terms]
    generators = [g for g in generators if not g.is_zero()]
    if not generators:
        return
    i = Ideal(R, generators)
    for row in syzygies(i):
        assert sum((a * g for a, g in zip(row, i.generators)), R.zero).is_zero()


def test_buchberger_track_cofactors():
    i = ideal("x^2 - y", "x*y - z")
    basis = buchberger(i, track=True)
    for element, cofactors in zip(basis.elements, basis.cofactors):
        combination = sum((c * g for c, g in zip(cofactors, i.generators)), R.zero)
        assert combination == element
