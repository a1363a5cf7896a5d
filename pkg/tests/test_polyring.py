from fractions import Fraction

from hypothesis import given, settings, strategies as st
import pytest

from gorlocus.fields import QQ, PrimeField
from gorlocus.parser import parse_polynomial
from gorlocus.polyring import (
    DEGREVLEX_ORDER,
    LEX_ORDER,
    MonomialOrder,
    NotSkewSymmetricError,
    Polynomial,
    PolynomialRing,
    RingMismatchError,
    det3,
    differentiate,
    elimination_order,
    minor_det4,
    pfaffians_4x4,
    rational_roots,
    univariate_coefficients,
)


parametrize = pytest.mark.parametrize

R = PolynomialRing(["x1", "x2", "x3"])
x1, x2, x3 = R.gens

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exponents = st.tuples(*[st.integers(min_value=0, max_value=3)] * 3)
polynomials = st.dictionaries(exponents, coefficients, max_size=4).map(
    lambda terms: Polynomial(R, terms)
)
monomials = exponents


def p(text, ring=R):
    return parse_polynomial(text, ring)


def test_ring_basics():
    assert R.ngens == 3
    assert R.index("x2") == 1
    assert R.has("x3")
    assert not R.has("b")
    assert R.zero.is_zero()
    assert R.one == 1
    assert str(R) == "Q[x1, x2, x3]"
    assert R.extend(["b"]).names == ("x1", "x2", "x3", "b")
    assert R.extend(["t"], prepend=True).names == ("t", "x1", "x2", "x3")
    assert R.drop(["x2"]).names == ("x1", "x3")


def test_ring_duplicate_names():
    with pytest.raises(ValueError):
        PolynomialRing(["x", "x"])


def test_ring_unknown_variable():
    with pytest.raises(ValueError):
        R.index("y")


def test_ring_call():
    assert R("x1*x2") == x1 * x2
    assert R(3) == R.constant(3)
    assert R(x1) is x1


def test_polynomial_drops_zero_terms():
    poly = Polynomial(R, {(1, 0, 0): 0, (0, 1, 0): Fraction(1, 2)})
    assert len(poly) == 1
    assert poly.coefficient((0, 1, 0)) == Fraction(1, 2)


def test_polynomial_wrong_exponent_length():
    with pytest.raises(ValueError):
        Polynomial(R, {(1, 0): 1})


def test_polynomial_arithmetic():
    f = x1 + x2
    g = x1 - x2
    assert f * g == x1 ** 2 - x2 ** 2
    assert f - f == 0
    assert 2 * f == f + f
    assert 1 - x1 == -(x1 - 1)
    assert (f ** 3).degree() == 3
    assert f ** 0 == 1


def test_polynomial_negative_power():
    with pytest.raises(ValueError):
        x1 ** -1


def test_ring_mismatch():
    other = PolynomialRing(["x1", "x2", "x3"], PrimeField(11))
    with pytest.raises(RingMismatchError):
        x1 + other.gen("x1")


def test_polynomial_queries():
    f = p("x1^2*x2 - 3*x3 + 2")
    assert f.degree() == 3
    assert f.degree_in("x1") == 2
    assert f.variables() == [0, 1, 2]
    assert not f.is_homogeneous()
    assert f.homogeneous_component(1) == -3 * x3
    assert f.constant_value() == 2
    assert R.zero.degree() == -1
    assert R.constant(5).is_constant()


def test_leading_terms():
    f = p("x1*x3 + x2^2 + x1")
    assert f.leading_monomial(DEGREVLEX_ORDER) == (0, 2, 0)
    assert f.leading_monomial(LEX_ORDER) == (1, 0, 1)
    assert (2 * f).monic() == f
    with pytest.raises(ValueError):
        R.zero.leading_monomial()


def test_differentiate():
    f = p("x1^3*x2 + x2^2")
    assert differentiate(f, "x1") == 3 * x1 ** 2 * x2
    assert f.differentiate(1) == x1 ** 3 + 2 * x2
    with pytest.raises(ValueError):
        differentiate(f, 5)


def test_substitute_and_specialize():
    ring = R.extend(["b"])
    f = p("x1^2 - b*x2", ring)
    assert f.specialize("b", 2) == p("x1^2 - 2*x2", ring.drop(["b"]))
    assert f.evaluate([1, 2, 0, 3]) == -5
    swapped = f.substitute([ring.gen("x2"), ring.gen("x1"), 0, ring.gen("b")])
    assert swapped == p("x2^2 - b*x1", ring)


def test_convert_by_name():
    small = PolynomialRing(["x2", "x1"])
    assert R.convert(p("x2*x1^2", small)) == x1 ** 2 * x2
    with pytest.raises(RingMismatchError):
        small.convert(x3)


@parametrize(
    "kind, block",
    [("degrevlex", 0), ("lex", 0), ("elimination", 1), ("elimination", 2)],
)
def test_monomial_order_equality(kind, block):
    assert MonomialOrder(kind, block) == MonomialOrder(kind, block)
    assert hash(MonomialOrder(kind, block)) == hash(MonomialOrder(kind, block))


def test_monomial_order_invalid():
    with pytest.raises(ValueError):
        MonomialOrder("grlex")
    with pytest.raises(ValueError):
        MonomialOrder("elimination", 0)


def test_elimination_order_eliminates_first_block():
    order = elimination_order(1)
    assert order.key((1, 0, 0)) > order.key((0, 5, 5))
    assert order.key((0, 2, 0)) > order.key((0, 0, 1))


@given(monomials, monomials, monomials)
def test_orders_are_multiplicative(a, b, c):
    for order in (DEGREVLEX_ORDER, LEX_ORDER, elimination_order(1)):
        if order.key(a) > order.key(b):
            ac = tuple(i + k for i, k in zip(a, c))
            bc = tuple(j + k for j, k in zip(b, c))
            assert order.key(ac) > order.key(bc)


@settings(max_examples=50)
@given(polynomials, polynomials, polynomials)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == R.zero


def test_det3():
    matrix = [[x1, x2, 0], [x2, x3, 1], [0, 1, x1]]
    assert det3(matrix) == x1 * (x3 * x1 - 1) - x2 * (x2 * x1)


def test_det3_shape():
    with pytest.raises(ValueError):
        det3([[x1, x2], [x2, x1]])


def _skew(entries):
    m = [[R.zero] * 5 for _ in range(5)]
    for (i, j), value in entries.items():
        m[i][j] = value
        m[j][i] = -value
    return m


def test_pfaffians_4x4():
    m = _skew({(0, 1): x1, (2, 3): x2, (1, 4): x3, (0, 3): 1})
    pf = pfaffians_4x4(m)
    assert len(pf) == 5
    # Removing index 4 leaves rows 0..3, pfaffian m01*m23 - m02*m13 + m03*m12.
    assert pf[4] == x1 * x2


@settings(max_examples=20)
@given(st.lists(coefficients, min_size=10, max_size=10))
def test_pfaffian_squared_is_principal_minor(values):
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    m = _skew({pair: R.constant(value) for pair, value in zip(pairs, values)})
    pf = pfaffians_4x4(m)
    for i in range(5):
        rest = [k for k in range(5) if k != i]
        assert pf[i] ** 2 == minor_det4(m, rest)


def test_pfaffians_not_skew():
    m = _skew({(0, 1): x1})
    m[2][2] = x1
    with pytest.raises(NotSkewSymmetricError):
        pfaffians_4x4(m)


@parametrize(
    "text, expected",
    [
        ("x1^2 - 1", [Fraction(-1), Fraction(1)]),
        ("9*x1^2 - 1", [Fraction(-1, 3), Fraction(1, 3)]),
        ("x1^3 - x1", [Fraction(-1), Fraction(0), Fraction(1)]),
        ("x1^2 + 1", []),
        ("2*x1 - 3", [Fraction(3, 2)]),
    ],
)
def test_rational_roots(text, expected):
    assert rational_roots(p(text)) == expected


def test_rational_roots_prime_field():
    ring = PolynomialRing(["t"], PrimeField(11))
    roots = rational_roots(parse_polynomial("t^2 + 1", ring))
    assert roots == []
    roots = rational_roots(parse_polynomial("t^2 - 4", ring))
    assert sorted(int(root) for root in roots) == [2, 9]


def test_univariate_coefficients():
    assert univariate_coefficients(p("3*x2^2 + 1"), "x2") == [1, 0, 3]
    with pytest.raises(ValueError):
        univariate_coefficients(p("x1*x2"), "x1")
    with pytest.raises(ValueError):
        rational_roots(R.zero)
