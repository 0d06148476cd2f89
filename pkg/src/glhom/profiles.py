"""Irreducible-degree profiles, built-in group families, and the spec parser.

A degree profile is the data the whole pipeline runs on: the group order
``a`` together with the multiset of irreducible representation degrees
``d_1 <= ... <= d_s`` over a splitting field, satisfying ``d_1 = 1`` and
``sum d_i^2 = a``.  Profiles are inputs; beyond the built-in families no
character theory is performed.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import ParseError, UnsupportedFamily, ValidationError

FAMILIES = ("cyclic", "abelian", "dihedral", "sym", "custom")

_SYM_PROFILES = {
    4: (1, 1, 2, 3, 3),
    5: (1, 1, 4, 4, 5, 5, 6),
}


@dataclass(frozen=True)
class DegreeProfile:
    """Group order plus the sorted degrees of its irreducible representations."""

    order: int
    degrees: tuple[int, ...]
    label: str | None = None

    @property
    def s(self) -> int:
        """Number of irreducible representations (tuple coordinates)."""
        return len(self.degrees)

    def __str__(self) -> str:
        return self.label or f"order={self.order},degrees={','.join(map(str, self.degrees))}"


@dataclass(frozen=True)
class GroupSpec:
    """A parsed group description, one of the supported families."""

    family: str
    m: int | None = None  # cyclic / dihedral modulus, sym index
    invariant_factors: tuple[int, ...] | None = None  # abelian
    order: int | None = None  # custom
    degrees: tuple[int, ...] | None = None  # custom

    def __str__(self) -> str:
        if self.family == "cyclic":
            return f"cyclic:{self.m}"
        if self.family == "abelian":
            return "abelian:" + "x".join(map(str, self.invariant_factors))
        if self.family == "dihedral":
            return f"dihedral:{self.m}"
        if self.family == "sym":
            return f"sym:{self.m}"
        return f"custom:order={self.order},degrees=" + ",".join(map(str, self.degrees))


def validate_profile(profile: DegreeProfile) -> None:
    """Raise ValidationError naming the first violated profile invariant."""
    if not profile.degrees:
        raise ValidationError("degree list is empty")
    if any(d < 1 for d in profile.degrees):
        raise ValidationError("degrees must be positive integers")
    if any(a > b for a, b in zip(profile.degrees, profile.degrees[1:])):
        raise ValidationError("degrees must be sorted non-decreasing")
    if profile.degrees[0] != 1:
        raise ValidationError("d_1 != 1: the trivial representation must be present")
    sq = sum(d * d for d in profile.degrees)
    if sq != profile.order:
        raise ValidationError(
            f"degree-square sum {sq} != {profile.order} (group order)"
        )


_INT_RE = re.compile(r"\d+")


def _take_int(text: str, pos: int) -> tuple[int, int]:
    m = _INT_RE.match(text, pos)
    if not m:
        raise ParseError("expected integer", pos)
    return int(m.group()), m.end()


def _expect(text: str, pos: int, literal: str) -> int:
    if not text.startswith(literal, pos):
        raise ParseError(f"expected {literal!r}", pos)
    return pos + len(literal)


def parse_group_spec(text: str) -> GroupSpec:
    """Parse ``family:params`` group-spec text.

    Grammar (no whitespace, decimal integers):
      cyclic:M | abelian:M(xM)* | dihedral:M | sym:4 | sym:5 |
      custom:order=A,degrees=D(,D)*
    """
    colon = text.find(":")
    if colon < 0:
        raise ParseError("expected ':' after family name", len(text))
    family = text[:colon]
    if family not in FAMILIES:
        raise UnsupportedFamily(f"unknown group family {family!r}", 0)
    pos = colon + 1

    if family in ("cyclic", "dihedral", "sym"):
        m, pos = _take_int(text, pos)
        if pos != len(text):
            raise ParseError("trailing characters after group spec", pos)
        if family == "cyclic" and m < 1:
            raise ValidationError("cyclic modulus must be >= 1")
        if family == "dihedral" and m < 3:
            raise ValidationError("dihedral modulus must be >= 3")
        if family == "sym" and m not in _SYM_PROFILES:
            raise ValidationError("sym supports only sym:4 and sym:5")
        return GroupSpec(family=family, m=m)

    if family == "abelian":
        factors = []
        m, pos = _take_int(text, pos)
        factors.append(m)
        while pos < len(text):
            pos = _expect(text, pos, "x")
            m, pos = _take_int(text, pos)
            factors.append(m)
        if any(f < 1 for f in factors):
            raise ValidationError("abelian invariant factors must be >= 1")
        return GroupSpec(family="abelian", invariant_factors=tuple(factors))

    pos = _expect(text, pos, "order=")
    order, pos = _take_int(text, pos)
    pos = _expect(text, pos, ",degrees=")
    degrees = []
    d, pos = _take_int(text, pos)
    degrees.append(d)
    while pos < len(text):
        pos = _expect(text, pos, ",")
        d, pos = _take_int(text, pos)
        degrees.append(d)
    return GroupSpec(family="custom", order=order, degrees=tuple(degrees))


def profile_of(spec: GroupSpec) -> DegreeProfile:
    """Degree profile of a group spec; always validated before returning.

    Custom degree lists are sorted into canonical (non-decreasing) order.
    """
    label = str(spec)
    if spec.family == "cyclic":
        profile = DegreeProfile(order=spec.m, degrees=(1,) * spec.m, label=label)
    elif spec.family == "abelian":
        a = math.prod(spec.invariant_factors)
        profile = DegreeProfile(order=a, degrees=(1,) * a, label=label)
    elif spec.family == "dihedral":
        m = spec.m
        if m % 2 == 1:
            degrees = (1, 1) + (2,) * ((m - 1) // 2)
        else:
            degrees = (1, 1, 1, 1) + (2,) * ((m - 2) // 2)
        profile = DegreeProfile(order=2 * m, degrees=degrees, label=label)
    elif spec.family == "sym":
        profile = DegreeProfile(
            order=math.factorial(spec.m), degrees=_SYM_PROFILES[spec.m], label=label
        )
    elif spec.family == "custom":
        profile = DegreeProfile(
            order=spec.order, degrees=tuple(sorted(spec.degrees)), label=label
        )
    else:  # pragma: no cover - families are closed
        raise UnsupportedFamily(f"unknown group family {spec.family!r}")
    validate_profile(profile)
    return profile


def _prime_of(q: int) -> int:
    """Smallest prime factor of q, insisting q is a prime power."""
    if q < 2:
        raise ValidationError("q must be a prime power >= 2")
    p = None
    for cand in range(2, math.isqrt(q) + 1):
        if q % cand == 0:
            p = cand
            break
    if p is None:
        return q  # q itself is prime
    rest = q
    while rest % p == 0:
        rest //= p
    if rest != 1:
        raise ValidationError(f"q={q} is not a prime power")
    return p


def splitting_field_check(spec: GroupSpec, q: int) -> tuple[bool, str]:
    """Decide whether F_q satisfies the stated splitting conditions.

    These are the necessary congruence/characteristic conditions for each
    built-in family; custom profiles cannot carry enough information, so
    the check is delegated to the caller there.
    """
    p = _prime_of(q)
    if spec.family == "cyclic":
        m = spec.m
        if (q - 1) % m == 0:
            return True, f"q == 1 (mod {m})"
        return False, f"requires q == 1 (mod {m}); got q={q}"
    if spec.family == "abelian":
        e = math.lcm(*spec.invariant_factors)
        if (q - 1) % e == 0:
            return True, f"q == 1 (mod exponent {e})"
        return False, f"requires q == 1 (mod exponent {e}); got q={q}"
    if spec.family == "dihedral":
        m = spec.m
        if q % 2 == 0:
            return False, "requires odd q"
        if (q - 1) % m != 0:
            return False, f"requires q == 1 (mod {m}); got q={q}"
        return True, f"q odd and q == 1 (mod {m})"
    if spec.family == "sym":
        if spec.m == 4:
            if p in (2, 3):
                return False, f"requires characteristic not in {{2, 3}}; got p={p}"
            return True, f"characteristic {p} not in {{2, 3}}"
        if p <= 5:
            return False, f"requires characteristic > 5; got p={p}"
        return True, f"characteristic {p} > 5"
    return True, "caller-asserted"
