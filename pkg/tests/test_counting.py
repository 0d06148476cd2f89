"""Orbit polynomials, full count polynomials, leading terms, variety data."""

from __future__ import annotations

from fractions import Fraction

import pytest

from glhom import (
    IneligibleTuple,
    minimal_tuples_for_n,
    IntPolynomial,
    LengthMismatch,
    RangeError,
    ResourceLimit,
    UnstableRegime,
    div_exact,
    eligible_tuples,
    gl_order_poly,
    hom_count_poly,
    leading_term,
    minimal_tuples,
    orbit_poly,
    variety_report,
)
from conftest import make_profile


def test_orbit_poly_examples(c2, s4):
    assert orbit_poly(c2, (1, 1)) == IntPolynomial([0, 1, 1])  # q^2 + q
    assert orbit_poly(c2, (2, 0)) == IntPolynomial.one()
    assert orbit_poly(s4, (1, 0, 0, 0, 0)) == IntPolynomial.one()


def test_orbit_poly_single_irreducible_block(d3):
    # V = the 2-dimensional irreducible: stabilizer GL_1, orbit q^3 - q.
    # Such orbits are where negative coefficients genuinely appear.
    assert orbit_poly(d3, (0, 0, 1)) == IntPolynomial([0, -1, 0, 1])


def test_orbit_poly_errors(s4):
    with pytest.raises(IneligibleTuple):
        orbit_poly(s4, (2, -1, 0, 0, 1))
    with pytest.raises(LengthMismatch):
        orbit_poly(s4, (1, 0))


def test_orbit_poly_degree_and_monic(s4, d3):
    for profile in (s4, d3):
        for n in range(0, 7):
            for t in eligible_tuples(profile, n):
                p = orbit_poly(profile, t)
                assert p.degree == n * n - sum(e * e for e in t)
                assert p.leading_coefficient == 1


def test_hom_count_poly_examples(c2, s4):
    assert hom_count_poly(c2, 2) == IntPolynomial([2, 1, 1])
    assert hom_count_poly(c2, 2).evaluate(3) == 14
    assert hom_count_poly(s4, 0) == IntPolynomial.one()
    assert hom_count_poly(c2, 1) == IntPolynomial([2])


def test_hom_count_poly_s4_n2(s4):
    # eligible: (2,0,0,0,0), (1,1,0,0,0), (0,2,0,0,0), (0,0,1,0,0)
    f2 = hom_count_poly(s4, 2)
    assert f2 == IntPolynomial([2, 0, 1, 1])  # q^3 + q^2 + 2
    assert f2.evaluate(5) == 152


def test_hom_count_poly_matches_orbit_sum():
    cases = [
        ("cyclic:2", range(0, 13)),
        ("cyclic:3", range(0, 10)),
        ("dihedral:3", range(0, 9)),
        ("dihedral:4", range(0, 8)),
        ("sym:4", range(0, 9)),
        ("custom:order=10,degrees=1,3", range(0, 10)),
    ]
    for text, ns in cases:
        profile = make_profile(text)
        for n in ns:
            total = IntPolynomial.zero()
            for t in eligible_tuples(profile, n):
                total = total + orbit_poly(profile, t)
            assert hom_count_poly(profile, n) == total, (text, n)


def test_hom_count_poly_partition_identity(s4, d3):
    for profile, n in ((s4, 6), (d3, 5)):
        f = hom_count_poly(profile, n)
        gl_n = gl_order_poly(n)
        for q in (2, 3, 5, 7):
            parts = [orbit_poly(profile, t).evaluate(q) for t in eligible_tuples(profile, n)]
            assert sum(parts) == f.evaluate(q)
            for part in parts:
                assert part > 0
                assert gl_n.evaluate(q) % part == 0  # orbit-stabilizer


def test_hom_count_poly_resource_limit(c2):
    with pytest.raises(ResourceLimit):
        hom_count_poly(c2, 50, max_tuples=10)


def test_hom_count_poly_range(c2):
    with pytest.raises(RangeError):
        hom_count_poly(c2, -1)


def test_leading_term_examples(s4, c2):
    lt = leading_term(s4, 25)
    assert (lt.coefficient, lt.exponent, lt.stable) == (2, 598, True)
    assert (lt.n, lt.r) == (25, 1)
    lt = leading_term(s4, 24)
    assert (lt.coefficient, lt.exponent) == (1, 552)
    lt = leading_term(c2, 2)
    assert (lt.coefficient, lt.exponent, lt.stable) == (1, 2, True)
    assert hom_count_poly(c2, 2).degree == 2


def test_leading_term_unstable_flag(s5):
    lt = leading_term(s5, 3)
    assert not lt.stable
    assert lt.coefficient == 4
    lt = leading_term(s5, 120)
    assert lt.stable and lt.exponent == 14280


def test_leading_term_degree_window(s4, s5):
    for profile in (s4, s5):
        a = profile.order
        for n in range(0, 2 * a + 1, 7):
            lt = leading_term(profile, n)
            r = n % a
            upper = Fraction(n * n) * Fraction(a - 1, a)
            lower = Fraction(n * n - r * r) * Fraction(a - 1, a)
            assert lower <= lt.exponent <= upper


def test_variety_report(s4, c2, s5):
    assert variety_report(s4, 25) == variety_report(s4, 25)
    vr = variety_report(s4, 25)
    assert vr.dimension == 598 and vr.top_components == 2
    vr = variety_report(c2, 4)
    assert vr.dimension == 8 and vr.top_components == 1
    vr = variety_report(s5, 120)
    assert vr.dimension == 14280 and vr.top_components == 1


def test_variety_report_unstable(s5):
    with pytest.raises(UnstableRegime):
        variety_report(s5, 119)


def test_variety_matches_leading(s4):
    for n in (24, 25, 30):
        lt = leading_term(s4, n)
        vr = variety_report(s4, n)
        assert (vr.dimension, vr.top_components) == (lt.exponent, lt.coefficient)


def test_division_route_equals_assembly_on_random_tuples(rng):
    profile = make_profile("sym:4")
    for n in range(1, 11):
        tuples = eligible_tuples(profile, n)
        for t in rng.sample(tuples, min(4, len(tuples))):
            num = gl_order_poly(n)
            den = IntPolynomial.one()
            for e in t:
                den = den * gl_order_poly(e)
            assert div_exact(num, den) == orbit_poly(profile, t)
            assert den * orbit_poly(profile, t) == num


def test_leading_term_law_small_profiles():
    for text in ("cyclic:1", "cyclic:4", "abelian:2x2", "dihedral:3", "dihedral:4"):
        profile = make_profile(text)
        for n in range(0, 13):
            f = hom_count_poly(profile, n)
            lt = leading_term(profile, n)
            rep = minimal_tuples(profile, n % profile.order)
            assert f.degree == lt.exponent
            assert f.leading_coefficient == lt.coefficient == rep.m_r


def test_s5_leading_term_via_eligibility(s5):
    # the full polynomial is out of reach at order 120, so the law is
    # checked through the lifting data: past the threshold every minimal
    # tuple is eligible, and the formula exponent equals n^2 minus their
    # square-sum
    for n in (120, 123, 127, 240, 360):
        lifted = minimal_tuples_for_n(s5, n)
        assert lifted.all_eligible
        lt = leading_term(s5, n)
        assert lt.stable
        assert lt.exponent == n * n - lifted.square_sum
        assert lt.coefficient == lifted.count
    # below the threshold some residues still carry negative entries
    assert not minimal_tuples_for_n(s5, 3).all_eligible
