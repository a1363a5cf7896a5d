from fractions import Fraction

import pytest

from gorlocus.artin import profile, quotient_algebra
from gorlocus.catalog import (
    A1_JUMP,
    CORRECTED,
    H4_LIMIT,
    NET,
    NET_SPLIT,
    PARAMETER,
    PRINTED,
    STRETCHED,
    STRETCHED_SPLIT,
    CatalogError,
    CatalogId,
    FamilyId,
    expected_net_class,
    expected_profile,
    family,
    family_ideal,
    family_listing,
    listing,
    pfaffian_matrix,
    presentation,
)
from gorlocus.fields import PrimeField
from gorlocus.groebner import ideal_equal
from gorlocus.polyring import is_skew_symmetric


parametrize = pytest.mark.parametrize


@parametrize(
    "text, expected",
    [
        ("A[4,7]", CatalogId(STRETCHED, 4, 7)),
        ("A1[4,2,9]", CatalogId("A1", 4, 9)),
        ("A2[3,2,8]", CatalogId("A2", 3, 8)),
        ("A3[h=4,n=4]", CatalogId(NET, 4, h=4)),
        ("A3[h=1,a=2,n=4]", CatalogId(NET, 4, h=1, alpha=2)),
        ("A3[h=1,n=3]", CatalogId(NET, 3, h=1, alpha=0)),
        ("A3[h=2,n=4,d=7]", CatalogId(NET, 4, h=2)),
        ("A3[h=1,a=-1/2,n=3]", CatalogId(NET, 3, h=1, alpha=Fraction(-1, 2))),
    ],
)
def test_parse_catalog_id(text, expected):
    assert CatalogId.parse(text) == expected


@parametrize(
    "text",
    [
        "A[4,7]",
        "A1[4,2,9]",
        "A3[h=4,n=4]",
        "A3[h=1,a=2,n=4]",
        "A3[h=1,a=-1/2,n=3]",
    ],
)
def test_catalog_id_str_round_trip(text):
    assert str(CatalogId.parse(text)) == text


@parametrize(
    "text",
    [
        "A[4,5]",
        "A[1,3]",
        "A[4,10]",
        "A1[4,2,7]",
        "A2[4,3,9]",
        "A3[h=7,n=3]",
        "A3[h=1,n=5]",
        "A3[n=3]",
        "A3[h=1,n=3,d=9]",
        "B[4,7]",
        "A[x,7]",
        "A3[h=2,a=1,n=3]",
        "A3[q=1,n=3]",
    ],
)
def test_parse_catalog_id_invalid(text):
    with pytest.raises(CatalogError):
        CatalogId.parse(text)


def test_catalog_id_properties():
    cid = CatalogId.parse("A3[h=1,a=2,n=4]")
    assert cid.d == 9
    assert cid.alias_degree == 7
    assert cid.p == Fraction(1, 3)
    assert CatalogId.parse("A[4,7]").p is None


def test_listing():
    ids = listing()
    assert len(ids) == 53
    assert len(set(ids)) == len(ids)
    assert all(cid.d <= 9 for cid in ids)
    assert sum(1 for cid in ids if cid.family == NET) == 12
    assert CatalogId(NET, 4, h=1, alpha=5) in listing(alpha=5)


@parametrize("cid", listing(), ids=str)
def test_catalog_profiles(cid):
    entry = presentation(cid)
    observed = profile(quotient_algebra(entry.ideal))
    assert observed.hilbert == entry.expected.hilbert
    assert observed.degree == cid.d
    assert observed.socle_dim == 1


def test_presentation_accepts_text():
    entry = presentation("A[2,4]")
    assert entry.id == CatalogId(STRETCHED, 2, 4)
    assert entry.ideal.ring.names == ("x1", "x2")


def test_presentation_prime_field():
    entry = presentation("A3[h=1,a=2,n=3]", PrimeField(32003))
    assert profile(quotient_algebra(entry.ideal)).hilbert == (1, 3, 3, 1)


@parametrize(
    "text, expected",
    [
        ("A3[h=1,n=3]", "integral-smooth"),
        ("A3[h=1,a=2,n=3]", "integral-nodal"),
        ("A3[h=1,a=-2,n=4]", "integral-nodal"),
        ("A3[h=2,n=3]", "D"),
        ("A3[h=3,n=3]", "E"),
        ("A3[h=4,n=4]", "E*"),
        ("A3[h=5,n=3]", "G*"),
        ("A3[h=6,n=3]", "H"),
    ],
)
def test_expected_net_class(text, expected):
    assert expected_net_class(CatalogId.parse(text)) == expected


def test_expected_profile():
    assert expected_profile(CatalogId.parse("A1[4,2,9]")).nu == 3
    assert expected_profile(CatalogId.parse("A2[4,2,9]")).hilbert == (1, 4, 2, 1, 1)
    assert expected_profile(CatalogId.parse("A[4,7]")).to_dict() == {
        "degree": 7,
        "hilbert": [1, 4, 1, 1],
        "gorenstein": True,
        "nu": None,
        "net_class": None,
    }


@parametrize("h", [4, 5, 6])
def test_pfaffian_matrix_is_skew(h):
    assert is_skew_symmetric(pfaffian_matrix(h))


def test_pfaffian_matrix_invalid():
    with pytest.raises(CatalogError):
        pfaffian_matrix(3)


@parametrize(
    "text, expected",
    [
        (
            "stretched-split:A[4,7]",
            FamilyId(STRETCHED_SPLIT, CatalogId(STRETCHED, 4, 7), PRINTED),
        ),
        (
            "net-split:A3[h=4,n=4]@corrected",
            FamilyId(NET_SPLIT, CatalogId(NET, 4, h=4), CORRECTED),
        ),
    ],
)
def test_parse_family_id(text, expected):
    fid = FamilyId.parse(text)
    assert fid == expected
    assert FamilyId.parse(str(fid)) == fid


@parametrize(
    "text",
    [
        "net-split:A3[h=4,n=3]",
        "h4-limit:A3[h=5,n=4]",
        "a1-jump:A[4,7]",
        "bogus:A[4,7]",
        "stretched-split:A[4,7]@draft",
        "A[4,7]",
    ],
)
def test_parse_family_id_invalid(text):
    with pytest.raises(CatalogError):
        FamilyId.parse(text)


def test_family_listing():
    ids = family_listing()
    assert len(set(ids)) == len(ids)
    assert all(fid.variant in (PRINTED, CORRECTED) for fid in ids)
    kinds = {fid.kind for fid in ids}
    assert kinds == {STRETCHED_SPLIT, "a2-split", A1_JUMP, NET_SPLIT, H4_LIMIT}
    assert not any(fid.kind == NET_SPLIT and fid.base.n == 3 for fid in ids)
    assert sum(1 for fid in ids if fid.kind == H4_LIMIT) == 4


def test_family_structure():
    fam = family("net-split:A3[h=2,n=4]@corrected")
    assert fam.ideal.ring.names == (PARAMETER, "x1", "x2", "x3", "x4")
    assert fam.special == CatalogId(NET, 4, h=2)
    assert len(fam.components) == 2
    assert fam.general.hilbert == ((1,), (1, 3, 3, 1))
    assert family("a1-jump:A1[4,2,8]").components is None
    assert family("a1-jump:A1[4,2,8]").general.nu == 2


@parametrize(
    "text, description, nu",
    [
        ("h4-limit:A3[h=4,n=4]@corrected", "A2[4,2,8] + pt", 2),
        ("h4-limit:A3[h=4,n=3]@corrected", "A2[3,2,7] + pt", 1),
        ("h4-limit:A3[h=4,n=4]@printed", "A1[4,2,8] + pt", 3),
    ],
)
def test_h4_limit_general_target(text, description, nu):
    general = family(text).general
    assert general.description == description
    assert general.nu == nu


def test_family_ideal():
    ideal = family_ideal("stretched-split:A[2,4]@corrected")
    assert ideal.ring.names == (PARAMETER, "x1", "x2")
    assert ideal_equal(ideal, family("stretched-split:A[2,4]@corrected").ideal)
