from unittest import mock

import pytest

import gorlocus
from gorlocus.catalog import FamilyId


parametrize = pytest.mark.parametrize


A24_TEXT = "ring: x1, x2\nx1*x2\nx2^2 - x1^2\nx1^3\n"


@parametrize(
    "api_func, args, target_func",
    [
        (gorlocus.entry, ("A[4,7]",), "gorlocus.api.presentation"),
        (gorlocus.embed, (None,), "gorlocus.api.ag_embed"),
        (gorlocus.algebra, ("A[4,7]",), "gorlocus.api.quotient_algebra"),
        (gorlocus.family, ("a1-jump:A1[4,2,8]",), "gorlocus.api.certificate"),
    ],
)
def test_api_mapping(api_func, args, target_func):
    with mock.patch(target_func) as mocked_target_func:
        api_func(*args)

    assert mocked_target_func.called


def test_family_parses_id():
    with mock.patch("gorlocus.api.certificate") as mocked:
        gorlocus.family("a1-jump:A1[4,2,8]@corrected")

    fid = mocked.call_args[0][0]
    assert fid == FamilyId.parse("a1-jump:A1[4,2,8]@corrected")


def test_ideal_from_text():
    ideal = gorlocus.ideal(A24_TEXT)
    assert ideal.ring.names == ("x1", "x2")
    assert len(ideal.generators) == 3


def test_algebra_from_text_and_id():
    from_text = gorlocus.algebra(A24_TEXT)
    from_id = gorlocus.algebra("A[2,4]")
    assert from_text.dim == from_id.dim == 4
    assert gorlocus.profile(from_text) == gorlocus.profile(from_id)


def test_algebra_from_ideal():
    ideal = gorlocus.entry("A[3,5]").ideal
    assert gorlocus.algebra(ideal).dim == 5
