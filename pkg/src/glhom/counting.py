"""Homomorphism-count polynomials, leading terms, and variety dimensions.

Each eligible tuple t = (n_1, ..., n_s) for dimension n indexes one
conjugation orbit of homomorphisms, of size |GL_n(q)| / prod |GL_{n_i}(q)|
(a polynomial in q).  Summing over all eligible tuples gives the full
count polynomial f_n with f_n(q) = |Hom(A, GL_n(q))| whenever F_q splits
the group.  The top of f_n is controlled by the minimal tuples alone:
degree n^2(1 - 1/a) - eps_r and leading coefficient m_r, with r = n mod a.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    IneligibleTuple,
    LengthMismatch,
    RangeError,
    ResourceLimit,
    UnstableRegime,
)
from .intpoly import IntPolynomial, _add_shifted_into, _mul_lists, div_exact, gl_order_poly
from .minimize import iter_eligible_tuples, minimal_tuples, stability_bound
from .profiles import DegreeProfile, validate_profile

DEFAULT_MAX_TUPLES = 10**6


@dataclass(frozen=True)
class LeadingTerm:
    """Leading term m_r * q^(n^2(1-1/a) - eps_r) of the count polynomial.

    ``stable`` is True when n is at or past the stability bound N, where
    the formula is guaranteed to match the true degree and leading
    coefficient; below N the formula values are still reported but are
    not certified against the full polynomial.
    """

    coefficient: int
    exponent: int
    n: int
    r: int
    stable: bool


@dataclass(frozen=True)
class VarietyReport:
    """Dimension and top-component count of Hom(A, GL_n(K)), K algebraically closed."""

    dimension: int
    top_components: int


def orbit_poly(profile: DegreeProfile, entries: tuple[int, ...]) -> IntPolynomial:
    """Orbit size |GL_n| / prod |GL_{n_i}| as a polynomial in q.

    The quotient is always exact (the denominator is the order polynomial
    of the orbit stabilizer); a nonzero remainder would indicate a logic
    bug and raises NonZeroRemainder.  Degree is n^2 - sum n_i^2, leading
    coefficient 1.
    """
    validate_profile(profile)
    if len(entries) != profile.s:
        raise LengthMismatch(
            f"tuple has {len(entries)} entries, profile has {profile.s} coordinates"
        )
    if any(e < 0 for e in entries):
        raise IneligibleTuple(f"tuple {entries} has negative entries")
    n = sum(e * d for e, d in zip(entries, profile.degrees))
    den = IntPolynomial.one()
    for e in entries:
        if e:
            den = den * gl_order_poly(e)
    quot = div_exact(gl_order_poly(n), den)
    assert quot.degree == n * n - sum(e * e for e in entries)
    assert quot.leading_coefficient == 1
    return quot


@lru_cache(maxsize=None)
def _gauss_binomial(m: int, k: int) -> tuple[int, ...]:
    """Coefficients of the Gaussian binomial [m choose k]_q (non-negative)."""
    if not 0 <= k <= m:
        raise RangeError("Gaussian binomial needs 0 <= k <= m")
    k = min(k, m - k)
    if k == 0:
        return (1,)
    # [m, k] = [m-1, k-1] + q^k * [m-1, k]; k <= m/2 keeps both calls valid
    low = list(_gauss_binomial(m - 1, k - 1))
    _add_shifted_into(low, _gauss_binomial(m - 1, k), k)
    return tuple(low)


@lru_cache(maxsize=None)
def _phi_tail(n: int, m: int) -> tuple[int, ...]:
    """Coefficients of prod_{i=m+1}^{n} (q^i - 1)."""
    coeffs = [1]
    for i in range(m + 1, n + 1):
        nxt = [0] * (len(coeffs) + i)
        for e, c in enumerate(coeffs):
            if c:
                nxt[e + i] += c
                nxt[e] -= c
        coeffs = nxt
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _orbit_parts(degrees: tuple[int, ...], entries: tuple[int, ...]) -> tuple[int, list[int], int]:
    """Shift exponent, multiplicity-multinomial coefficients, and M = sum n_i.

    The orbit polynomial factors as
        q^alpha * [M; n_1, ..., n_s]_q * prod_{i=M+1}^{n} (q^i - 1)
    with alpha = (n(n-1) - sum n_i(n_i - 1)) / 2; this is what makes the
    full-polynomial assembly cheap enough to run at desk scale.
    """
    n = sum(e * d for e, d in zip(entries, degrees))
    m_total = 0
    multinom = [1]
    drop = 0
    for e in entries:
        if e:
            m_total += e
            multinom = _mul_lists(multinom, list(_gauss_binomial(m_total, e)))
            drop += e * (e - 1)
    num = n * (n - 1) - drop
    assert num % 2 == 0 and num >= 0
    return num // 2, multinom, m_total


def hom_count_poly(
    profile: DegreeProfile, n: int, max_tuples: int | None = DEFAULT_MAX_TUPLES
) -> IntPolynomial:
    """Full count polynomial f_n: sum of orbit polynomials over all eligible tuples.

    Evaluating at any prime power q for which F_q splits the group gives
    |Hom(A, GL_n(q))| exactly.  Orbit contributions are grouped by total
    multiplicity M = sum n_i so the expensive tail products are multiplied
    once per group; the result is identical to summing ``orbit_poly`` over
    ``eligible_tuples`` and the assembly is deterministic (lexicographic
    tuple order).  Raises ResourceLimit past ``max_tuples`` eligible tuples.
    """
    validate_profile(profile)
    if n < 0:
        raise RangeError("dimension must be >= 0")
    groups: dict[int, list[int]] = {}
    count = 0
    for t in iter_eligible_tuples(profile.degrees, n):
        count += 1
        if max_tuples is not None and count > max_tuples:
            raise ResourceLimit(f"more than {max_tuples} eligible tuples for n={n}")
        alpha, multinom, m_total = _orbit_parts(profile.degrees, t)
        acc = groups.setdefault(m_total, [])
        _add_shifted_into(acc, multinom, alpha)
    total: list[int] = []
    for m_total in sorted(groups):
        part = _mul_lists(groups[m_total], list(_phi_tail(n, m_total)))
        _add_shifted_into(total, part, 0)
    return IntPolynomial(total)


def leading_term(profile: DegreeProfile, n: int) -> LeadingTerm:
    """Leading term of f_n from the minimal-tuple data for r = n mod a.

    The exponent n^2 - (n^2 - r^2)/a - S_r is provably integral; this is
    asserted rather than trusted.  For n below the stability bound the
    formula values are returned with ``stable=False``.
    """
    validate_profile(profile)
    if n < 0:
        raise RangeError("dimension must be >= 0")
    a = profile.order
    r = n % a
    rep = minimal_tuples(profile, r)
    assert (n * n - r * r) % a == 0
    exponent = n * n - (n * n - r * r) // a - rep.s_r
    assert exponent >= 0
    bound = stability_bound(profile)
    return LeadingTerm(
        coefficient=rep.m_r,
        exponent=exponent,
        n=n,
        r=r,
        stable=n >= bound.n_threshold,
    )


def variety_report(profile: DegreeProfile, n: int) -> VarietyReport:
    """Dimension and number of top-dimensional components of the representation variety.

    Only valid in the stable regime n >= N; below it the leading-term
    formula is uncertified and UnstableRegime is raised.
    """
    bound = stability_bound(profile)
    if n < bound.n_threshold:
        raise UnstableRegime(
            f"n={n} is below the stability threshold N={bound.n_threshold}"
        )
    lt = leading_term(profile, n)
    return VarietyReport(dimension=lt.exponent, top_components=lt.coefficient)
