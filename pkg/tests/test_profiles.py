"""Group-spec parsing, degree profiles, and splitting-field checks."""

from __future__ import annotations

import pytest

from glhom import (
    DegreeProfile,
    ParseError,
    UnsupportedFamily,
    ValidationError,
    parse_group_spec,
    profile_of,
    splitting_field_check,
    validate_profile,
)


def test_parse_cyclic():
    spec = parse_group_spec("cyclic:4")
    assert spec.family == "cyclic" and spec.m == 4


def test_parse_sym():
    spec = parse_group_spec("sym:4")
    assert spec.family == "sym" and spec.m == 4


def test_parse_custom():
    spec = parse_group_spec("custom:order=24,degrees=1,1,2,3,3")
    assert spec.family == "custom"
    assert spec.order == 24
    assert spec.degrees == (1, 1, 2, 3, 3)


def test_parse_abelian():
    spec = parse_group_spec("abelian:2x4")
    assert spec.invariant_factors == (2, 4)
    assert parse_group_spec("abelian:6").invariant_factors == (6,)


def test_parse_dihedral():
    assert parse_group_spec("dihedral:5").m == 5


@pytest.mark.parametrize(
    "text",
    [
        "cyclic",  # no colon
        "cyclic:",  # missing integer
        "cyclic:x",
        "cyclic:4x",  # trailing garbage
        "cyclic: 4",  # whitespace is not permitted
        "abelian:2x",
        "abelian:2y3",
        "custom:order=24",
        "custom:order=24,degrees=",
        "custom:order=24,degrees=1,",
        "custom:degrees=1,order=4",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_group_spec(text)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as exc:
        parse_group_spec("cyclic:4x")
    assert exc.value.position == 8


def test_unknown_family():
    with pytest.raises(UnsupportedFamily):
        parse_group_spec("frobenius:3")


@pytest.mark.parametrize("text", ["sym:6", "sym:3", "dihedral:2", "cyclic:0"])
def test_parse_rejects_bad_parameters(text):
    with pytest.raises(ValidationError):
        parse_group_spec(text)


def test_profile_cyclic4():
    p = profile_of(parse_group_spec("cyclic:4"))
    assert p.order == 4 and p.degrees == (1, 1, 1, 1)


def test_profile_dihedral_odd():
    p = profile_of(parse_group_spec("dihedral:5"))
    assert p.order == 10 and p.degrees == (1, 1, 2, 2)


def test_profile_dihedral_even():
    p = profile_of(parse_group_spec("dihedral:6"))
    assert p.order == 12 and p.degrees == (1, 1, 1, 1, 2, 2)


def test_profile_sym():
    assert profile_of(parse_group_spec("sym:4")).degrees == (1, 1, 2, 3, 3)
    p5 = profile_of(parse_group_spec("sym:5"))
    assert p5.order == 120 and p5.degrees == (1, 1, 4, 4, 5, 5, 6)


def test_profile_abelian():
    p = profile_of(parse_group_spec("abelian:2x4"))
    assert p.order == 8 and p.degrees == (1,) * 8


def test_profile_custom_sorts_degrees():
    p = profile_of(parse_group_spec("custom:order=14,degrees=1,3,2"))
    assert p.degrees == (1, 2, 3)


def test_profile_custom_invalid():
    with pytest.raises(ValidationError):
        profile_of(parse_group_spec("custom:order=6,degrees=1,2"))
    with pytest.raises(ValidationError):
        profile_of(parse_group_spec("custom:order=4,degrees=2"))


def test_validate_profile():
    validate_profile(DegreeProfile(order=24, degrees=(1, 1, 2, 3, 3)))
    with pytest.raises(ValidationError, match="degree-square sum"):
        validate_profile(DegreeProfile(order=6, degrees=(1, 2)))
    with pytest.raises(ValidationError, match="d_1"):
        validate_profile(DegreeProfile(order=4, degrees=(2,)))
    with pytest.raises(ValidationError, match="sorted"):
        validate_profile(DegreeProfile(order=6, degrees=(1, 2, 1)))
    with pytest.raises(ValidationError, match="empty"):
        validate_profile(DegreeProfile(order=0, degrees=()))
    with pytest.raises(ValidationError, match="positive"):
        validate_profile(DegreeProfile(order=1, degrees=(0, 1)))


def test_splitting_cyclic():
    ok, _ = splitting_field_check(parse_group_spec("cyclic:2"), 3)
    assert ok
    ok, reason = splitting_field_check(parse_group_spec("cyclic:3"), 5)
    assert not ok and "mod 3" in reason
    ok, _ = splitting_field_check(parse_group_spec("cyclic:1"), 2)
    assert ok


def test_splitting_abelian_uses_exponent():
    spec = parse_group_spec("abelian:2x4")
    assert splitting_field_check(spec, 5)[0]  # 5 == 1 mod 4
    assert not splitting_field_check(spec, 7)[0]  # 7 - 1 not divisible by 4


def test_splitting_dihedral():
    spec = parse_group_spec("dihedral:5")
    assert splitting_field_check(spec, 11)[0]
    assert not splitting_field_check(spec, 16)[0]  # even q
    assert not splitting_field_check(spec, 7)[0]  # 7 != 1 mod 5


def test_splitting_sym():
    assert splitting_field_check(parse_group_spec("sym:4"), 5)[0]
    assert not splitting_field_check(parse_group_spec("sym:4"), 9)[0]  # p = 3
    assert not splitting_field_check(parse_group_spec("sym:4"), 2)[0]
    assert splitting_field_check(parse_group_spec("sym:5"), 7)[0]
    assert splitting_field_check(parse_group_spec("sym:5"), 49)[0]
    assert not splitting_field_check(parse_group_spec("sym:5"), 5)[0]
    assert not splitting_field_check(parse_group_spec("sym:5"), 25)[0]


def test_splitting_custom_is_caller_asserted():
    ok, reason = splitting_field_check(
        parse_group_spec("custom:order=24,degrees=1,1,2,3,3"), 5
    )
    assert ok and reason == "caller-asserted"


@pytest.mark.parametrize("q", [1, 0, 6, 12, 100])
def test_splitting_rejects_non_prime_powers(q):
    with pytest.raises(ValidationError):
        splitting_field_check(parse_group_spec("cyclic:2"), q)


@pytest.mark.parametrize(
    "text",
    [
        "cyclic:1",
        "cyclic:7",
        "abelian:2x2x3",
        "abelian:12",
        "dihedral:3",
        "dihedral:8",
        "sym:4",
        "sym:5",
        "custom:order=10,degrees=1,3",
    ],
)
def test_profile_of_parse_always_validates(text):
    profile = profile_of(parse_group_spec(text))
    validate_profile(profile)
    assert sum(d * d for d in profile.degrees) == profile.order
    # label round-trips through the parser
    assert profile_of(parse_group_spec(str(profile))) == profile


def test_family_degree_square_sums():
    for m in range(3, 20):
        p = profile_of(parse_group_spec(f"dihedral:{m}"))
        assert sum(d * d for d in p.degrees) == 2 * m
    for m in range(1, 20):
        p = profile_of(parse_group_spec(f"cyclic:{m}"))
        assert p.order == m
