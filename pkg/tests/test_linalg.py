from fractions import Fraction

from hypothesis import given, settings, strategies as st
import pytest

from gorlocus.fields import QQ, PrimeField
from gorlocus.linalg import (
    Echelon,
    Subspace,
    kernel_basis,
    rank,
    rref,
    to_dense,
    to_sparse,
    transpose,
)


parametrize = pytest.mark.parametrize

F11 = PrimeField(11)

entries = st.integers(min_value=-3, max_value=3)
matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda ncols: st.lists(
        st.lists(entries, min_size=ncols, max_size=ncols), max_size=5
    )
)


def test_sparse_dense():
    assert to_sparse([0, 2, 0, Fraction(1, 2)]) == {1: 2, 3: Fraction(1, 2)}
    assert to_sparse({0: 0, 2: 5}) == {2: 5}
    assert to_dense({1: 3}, 3) == [0, 3, 0]


@parametrize(
    "rows, expected",
    [
        ([[1, 2], [2, 4]], 1),
        ([[1, 0], [0, 1], [1, 1]], 2),
        ([[0, 0]], 0),
        ([], 0),
        ([[Fraction(1, 2), Fraction(1, 3)], [3, 2]], 1),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 10]], 3),
    ],
)
def test_rank(rows, expected):
    assert rank(rows) == expected


def test_rank_prime_field():
    rows = [[F11(1), F11(2)], [F11(6), F11(1)]]
    # 6 * (1, 2) = (6, 12) = (6, 1) modulo 11.
    assert rank(rows, F11) == 1
    assert rank([[1, 2], [6, 1]]) == 2


def test_rref():
    basis, pivots = rref([[2, 4, 0], [1, 2, 1]])
    assert pivots == [0, 2]
    assert basis == [{0: 1, 1: 2}, {2: 1}]


def test_echelon_add():
    echelon = Echelon()
    assert echelon.add([1, 1])
    assert not echelon.add([2, 2])
    assert echelon.add([0, 1])
    assert len(echelon) == 2
    assert echelon.basis() == [{0: 1}, {1: 1}]


def test_kernel_basis():
    kernel = kernel_basis([[1, 1, 0], [0, 0, 1]], 3)
    assert kernel == [{1: 1, 0: -1}]


def test_kernel_basis_has_fraction_entries():
    (vector,) = kernel_basis([[2, 3]], 2)
    assert vector == {0: Fraction(-3, 2), 1: 1}
    assert all(isinstance(value, Fraction) for value in vector.values())
    assert rank([[2, 3]]) == 1


@settings(max_examples=60)
@given(matrices)
def test_rank_nullity(rows):
    if not rows:
        return
    ncols = len(rows[0])
    kernel = kernel_basis(rows, ncols)
    assert rank(rows) + len(kernel) == ncols
    for vector in kernel:
        for row in rows:
            assert sum(row[c] * v for c, v in vector.items()) == 0


@settings(max_examples=60)
@given(matrices)
def test_rank_matches_echelon(rows):
    assert rank(rows) == len(rref(rows)[0])
    if rows:
        assert rank(transpose(rows, len(rows), len(rows[0]))) == rank(rows)


def test_subspace():
    space = Subspace(3, [[1, 0, 1], [0, 1, 1]])
    assert space.dim == 2
    assert [2, 3, 5] in space
    assert [0, 0, 1] not in space
    assert space.coordinates([2, 3, 5]) == [2, 3]
    assert space.reduce([0, 0, 1]) == {2: 1}
    assert space.vectors() == [[1, 0, 1], [0, 1, 1]]

    with pytest.raises(ValueError):
        space.coordinates([0, 0, 1])


def test_subspace_equality_is_basis_independent():
    first = Subspace(3, [[1, 0, 1], [0, 1, 1]])
    second = Subspace(3, [[1, 1, 2], [1, -1, 0]])
    assert first == second
    assert hash(first) == hash(second)
    assert first != Subspace(3, [[1, 0, 0]])


def test_subspace_sum_and_inclusion():
    line = Subspace(3, [[1, 0, 0]])
    plane = Subspace(3, [[0, 1, 0], [0, 0, 1]])
    assert line.is_subspace_of(Subspace.full(3))
    assert not line.is_subspace_of(plane)
    assert (line + plane) == Subspace.full(3)
    assert Subspace.zero(3).dim == 0
    assert repr(plane) == "Subspace(ambient=3, dim=2)"


def test_subspace_prime_field():
    space = Subspace(2, [[F11(1), F11(2)]], F11)
    assert [F11(6), F11(1)] in space
    assert space.field == F11
    assert QQ != F11
