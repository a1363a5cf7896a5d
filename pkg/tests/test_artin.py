import random

import pytest

from gorlocus.artin import (
    NotLocalError,
    SingularMatrixError,
    apply_linear_substitution,
    direct_sum,
    factor_profiles,
    field_algebra,
    graded_multiplication,
    point_algebra,
    profile,
    quotient_algebra,
    socle,
    square_zero_profile,
)
from gorlocus.catalog import CatalogId, listing, presentation
from gorlocus.fields import QQ, PrimeField
from gorlocus.groebner import Ideal, NotZeroDimensionalError
from gorlocus.linalg import rank
from gorlocus.parser import parse_ideal_text


parametrize = pytest.mark.parametrize


def algebra_of(text, field=QQ):
    ring, generators = parse_ideal_text(text, field)
    return quotient_algebra(Ideal(ring, generators))


def random_invertible(size, rng):
    while True:
        matrix = [[rng.randint(-2, 2) for _ in range(size)] for _ in range(size)]
        if rank(matrix) == size:
            return matrix


def test_quotient_algebra_basis():
    algebra = algebra_of("ring: x, y\nx*y\nx^2 - y^2\n")
    assert algebra.dim == 4
    assert algebra.labels == ("1", "y", "x", "y^2")
    assert algebra.is_local
    assert algebra.is_origin_local


def test_multiplication_and_elements():
    algebra = algebra_of("ring: x, y\nx*y\nx^2 - y^2\n")
    x = algebra.element("x")
    assert algebra.multiply(x, x) == algebra.element("y^2")
    assert algebra.multiply(x, algebra.element("y")) == {}
    assert algebra.power(x, 3) == {}
    assert algebra.is_nilpotent(x)
    assert algebra.trace(algebra.unit) == 4


def test_quotient_algebra_errors():
    with pytest.raises(NotZeroDimensionalError):
        algebra_of("ring: x, y\nx^2\n")
    with pytest.raises(ValueError):
        algebra_of("ring: x\nx - 1\nx\n")


@parametrize(
    "text, hilbert, socle_dim, gorenstein, as_flag",
    [
        ("ring: x1..x4\nx1*x2\nx1*x3\nx1*x4\nx2*x3\nx2*x4\nx3*x4\n"
         "x2^2 - x1^3\nx3^2 - x1^3\nx4^2 - x1^3\nx1^4\n",
         (1, 4, 1, 1), 1, True, False),
        ("ring: x, y\nx^2\nx*y\ny^2\n", (1, 2), 2, False, True),
        ("ring: x\nx^5\n", (1, 1, 1, 1, 1), 1, True, True),
        ("ring: x, y, z\nx^2\ny^2\nz^2\n", (1, 3, 3, 1), 1, True, True),
    ],
)
def test_profile(text, hilbert, socle_dim, gorenstein, as_flag):
    result = profile(algebra_of(text))
    assert result.hilbert == hilbert
    assert result.degree == sum(hilbert)
    assert result.level == len(hilbert) - 1
    assert result.socle_dim == socle_dim
    assert result.gorenstein is gorenstein
    assert result.as_flag is as_flag
    assert result.to_dict()["hilbert"] == list(hilbert)


def test_profile_off_origin():
    algebra = algebra_of("ring: x, y\nx^2 - 2*x + 1\ny\n")
    assert algebra.is_local
    assert not algebra.is_origin_local
    assert algebra.support == (1, 0)
    assert profile(algebra).hilbert == (1, 1)
    with pytest.raises(NotLocalError):
        square_zero_profile(algebra)


def test_non_local_algebra():
    algebra = algebra_of("ring: x\nx^2 - x\n")
    assert not algebra.is_local
    with pytest.raises(NotLocalError):
        profile(algebra)
    with pytest.raises(NotLocalError):
        socle(algebra)


def test_point_and_field_algebras():
    point = point_algebra(3)
    assert point.dim == 1
    assert profile(point).hilbert == (1,)
    assert field_algebra(QQ).dim == 1
    assert point_algebra(2, PrimeField(11)).field == PrimeField(11)


def test_direct_sum():
    first = algebra_of("ring: x\nx^2\n")
    total = direct_sum(first, point_algebra(1))
    assert total.dim == 3
    assert len(total.components) == 2
    assert not total.is_local
    assert [p.hilbert for p in factor_profiles(total)] == [(1, 1), (1,)]
    assert total.multiply(total.unit, total.unit) == total.unit


def test_direct_sum_field_mismatch():
    with pytest.raises(ValueError):
        direct_sum(point_algebra(1), point_algebra(1, PrimeField(11)))


@parametrize(
    "cid, nu",
    [
        ("A1[4,2,9]", 3),
        ("A2[4,2,9]", 2),
        ("A1[3,2,7]", 2),
        ("A2[3,2,8]", 1),
    ],
)
def test_square_zero_profile(cid, nu):
    algebra = quotient_algebra(presentation(cid).ideal)
    result = square_zero_profile(algebra)
    assert result.nu == nu
    assert len(result.directions) == algebra.ideal.ring.ngens


def test_graded_multiplication_of_net():
    algebra = quotient_algebra(presentation("A3[h=4,n=3]").ideal)
    squares = graded_multiplication(algebra, 1, 1)
    assert squares.source_dims == (3, 3)
    assert squares.target_dim == 3
    assert squares.image_dim == 3
    top = graded_multiplication(algebra, 1, 2)
    assert top.target_dim == 1
    assert top.image_dim == 1


def test_linear_substitution_singular():
    ideal = presentation("A[2,4]").ideal
    with pytest.raises(SingularMatrixError):
        apply_linear_substitution(ideal, [[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        apply_linear_substitution(ideal, [[1, 0, 0]] * 3)


def _check_substitutions(cid, count, seed):
    entry = presentation(cid)
    expected = profile(quotient_algebra(entry.ideal))
    rng = random.Random(seed)
    for _ in range(count):
        matrix = random_invertible(cid.n, rng)
        moved = apply_linear_substitution(entry.ideal, matrix)
        observed = profile(quotient_algebra(moved))
        assert observed.hilbert == expected.hilbert
        assert observed.socle_dim == expected.socle_dim


@parametrize("cid", ["A[2,5]", "A[3,6]", "A1[2,2,6]", "A2[2,2,7]", "A3[h=2,n=3]"])
def test_profile_invariant_under_substitution(cid):
    _check_substitutions(CatalogId.parse(cid), 3, seed=7)


@pytest.mark.slow
@parametrize("cid", listing(), ids=str)
def test_catalog_profile_invariant_under_substitution(cid):
    _check_substitutions(cid, 10, seed=11)
