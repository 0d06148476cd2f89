"""Shared fixtures and the small-profile pool used by the property suites."""

from __future__ import annotations

import random

import pytest

from glhom import DegreeProfile, parse_group_spec, profile_of

SEED = 20260811


def make_profile(spec_text: str) -> DegreeProfile:
    return profile_of(parse_group_spec(spec_text))


def small_profiles(max_order: int = 24, max_coords: int = 10, max_ones: int = 12):
    """Every degree profile with sum d_i^2 <= max_order, d_1 = 1.

    Profiles here are abstract inputs for the minimisation machinery; they
    need not belong to an actual group.  The coordinate/ones caps keep the
    all-ones profiles from exploding the tuple counts in property runs.
    """
    out: list[DegreeProfile] = []

    def rec(degrees: list[int], sumsq: int, last: int):
        out.append(DegreeProfile(order=sumsq, degrees=tuple(degrees)))
        if len(degrees) >= max_coords:
            return
        d = last
        while sumsq + d * d <= max_order:
            if d > 1 or degrees.count(1) < max_ones:
                rec(degrees + [d], sumsq + d * d, d)
            d += 1

    rec([1], 1, 1)
    return out


# Profiles of the built-in families, exercised by every property suite.
BUILTIN_SPECS = (
    "cyclic:1",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:6",
    "abelian:2x2",
    "abelian:2x4",
    "dihedral:3",
    "dihedral:4",
    "dihedral:5",
    "dihedral:6",
    "dihedral:7",
    "sym:4",
)


@pytest.fixture(scope="session")
def s4():
    return make_profile("sym:4")


@pytest.fixture(scope="session")
def s5():
    return make_profile("sym:5")


@pytest.fixture(scope="session")
def c2():
    return make_profile("cyclic:2")


@pytest.fixture(scope="session")
def c3():
    return make_profile("cyclic:3")


@pytest.fixture(scope="session")
def d3():
    return make_profile("dihedral:3")


@pytest.fixture(scope="session")
def profile_pool():
    return small_profiles()


@pytest.fixture
def rng():
    return random.Random(SEED)
