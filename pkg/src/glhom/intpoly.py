"""Exact arithmetic for univariate polynomials over the integers.

Polynomials live in Z[q] and are stored densely (coefficient index =
exponent).  Coefficients are arbitrary-precision Python ints; inner
coefficients of the polynomials built here grow combinatorially even
when the leading ones stay small.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DivisionByZero, NonZeroRemainder, RangeError

#: Degree of the zero polynomial.  Compares below every integer degree.
NEG_INFINITY = float("-inf")

# Above this many coefficient products, multiplication switches from
# schoolbook to Kronecker substitution (packing into one big int).
_SCHOOLBOOK_CUTOFF = 4096


def _trimmed(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _add_lists(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trimmed(out)


def _add_shifted_into(target: list[int], src: Iterable[int], shift: int) -> None:
    """In-place target += q^shift * src, growing target as needed."""
    src = list(src)
    need = shift + len(src)
    if len(target) < need:
        target.extend([0] * (need - len(target)))
    for i, c in enumerate(src):
        target[shift + i] += c


def _mul_schoolbook(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _trimmed(out)


def _mul_kronecker_nonneg(a: list[int], b: list[int]) -> list[int]:
    """Product of coefficient lists with non-negative entries.

    Packs each polynomial into a single big integer with a fixed number
    of bytes per coefficient, multiplies once (CPython's big-int multiply
    is subquadratic), and unpacks.  The slot width is sized so that no
    product coefficient can carry into its neighbour.
    """
    ma = max(a)
    mb = max(b)
    if ma == 0 or mb == 0:
        return []
    bound = min(len(a), len(b)) * ma * mb
    nbytes = (bound.bit_length() + 8) // 8
    pa = int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in a), "little")
    pb = int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in b), "little")
    prod = pa * pb
    terms = len(a) + len(b) - 1
    raw = prod.to_bytes(terms * nbytes + nbytes, "little")
    out = [
        int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little")
        for i in range(terms)
    ]
    return _trimmed(out)


def _mul_lists(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) * len(b) <= _SCHOOLBOOK_CUTOFF:
        return _mul_schoolbook(a, b)
    a_neg = [-c if c < 0 else 0 for c in a]
    b_neg = [-c if c < 0 else 0 for c in b]
    if not any(a_neg) and not any(b_neg):
        return _mul_kronecker_nonneg(a, b)
    a_pos = [c if c > 0 else 0 for c in a]
    b_pos = [c if c > 0 else 0 for c in b]
    out: list[int] = []
    for left, right, sign in (
        (a_pos, b_pos, 1),
        (a_neg, b_neg, 1),
        (a_pos, b_neg, -1),
        (a_neg, b_pos, -1),
    ):
        if any(left) and any(right):
            part = _mul_kronecker_nonneg(left, right)
            if sign < 0:
                part = [-c for c in part]
            out = _add_lists(out, part)
    return out


class IntPolynomial:
    """Dense univariate polynomial with integer coefficients.

    Canonical form: the highest stored coefficient is nonzero except for
    the zero polynomial, which stores nothing.  Instances are immutable
    and hashable; all operations return new polynomials.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        self._coeffs = tuple(_trimmed(coeffs))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise RangeError("monomial exponent must be >= 0")
        return cls([0] * exponent + [coefficient])

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int | float:
        """Degree, or NEG_INFINITY for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INFINITY

    @property
    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    @property
    def constant_term(self) -> int:
        return self._coeffs[0] if self._coeffs else 0

    def coefficient(self, exponent: int) -> int:
        if 0 <= exponent < len(self._coeffs):
            return self._coeffs[exponent]
        return 0

    def shifted(self, k: int) -> "IntPolynomial":
        """Multiply by q^k."""
        if self.is_zero:
            return self
        if k < 0:
            raise RangeError("shift must be >= 0")
        return IntPolynomial((0,) * k + self._coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(_add_lists(list(self._coeffs), list(other._coeffs)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self._coeffs)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self._coeffs)
        return IntPolynomial(_mul_lists(list(self._coeffs), list(other._coeffs)))

    __rmul__ = __mul__

    def __floordiv__(self, other: "IntPolynomial") -> "IntPolynomial":
        return div_exact(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.to_text()!r})"

    def evaluate(self, x: int) -> int:
        """Horner evaluation at an integer point; exact."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def terms(self) -> Iterator[tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs, descending exponent."""
        for e in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[e]
            if c:
                yield e, c

    def to_text(self) -> str:
        """Render in descending exponent order, e.g. ``q^4 - q^3 - q^2 + q``."""
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if mag == 1 else f"{mag}*{qpart}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def to_json_obj(self) -> dict[str, str]:
        """Exponent -> coefficient map, both as decimal strings."""
        return {str(e): str(c) for e, c in self.terms()}

    @classmethod
    def from_json_obj(cls, obj: dict[str, str]) -> "IntPolynomial":
        coeffs: list[int] = []
        for e_str, c_str in obj.items():
            e = int(e_str)
            if e < 0:
                raise RangeError("negative exponent in polynomial JSON")
            if e >= len(coeffs):
                coeffs.extend([0] * (e + 1 - len(coeffs)))
            coeffs[e] = int(c_str)
        return cls(coeffs)


def div_exact(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Exact quotient num / den, asserting the division leaves no remainder.

    Long division runs over exact rationals (a pure integer path is used
    for a unit leading coefficient, where no denominators can appear) and
    the result is asserted integral with zero remainder.  A nonzero
    remainder raises NonZeroRemainder rather than returning anything.
    """
    if den.is_zero:
        raise DivisionByZero("division by the zero polynomial")
    if num.is_zero:
        return IntPolynomial.zero()
    dn = len(num.coefficients) - 1
    dd = len(den.coefficients) - 1
    if dn < dd:
        raise NonZeroRemainder("dividend degree below divisor degree")
    lead = den.coefficients[-1]
    d = den.coefficients
    if lead in (1, -1):
        rem: list[int] = list(num.coefficients)
        quot: list[int] = [0] * (dn - dd + 1)
        for k in range(dn - dd, -1, -1):
            c = rem[k + dd] * lead  # lead is its own inverse
            if c:
                quot[k] = c
                for j in range(dd + 1):
                    rem[k + j] -= c * d[j]
        if any(rem):
            raise NonZeroRemainder("polynomial division left a remainder")
        return IntPolynomial(quot)
    frem: list[Fraction] = [Fraction(c) for c in num.coefficients]
    fquot: list[Fraction] = [Fraction(0)] * (dn - dd + 1)
    flead = Fraction(lead)
    for k in range(dn - dd, -1, -1):
        c = frem[k + dd] / flead
        if c:
            fquot[k] = c
            for j in range(dd + 1):
                frem[k + j] -= c * d[j]
    if any(frem):
        raise NonZeroRemainder("polynomial division left a remainder")
    if any(c.denominator != 1 for c in fquot):
        raise NonZeroRemainder("quotient is not integral")
    return IntPolynomial(int(c) for c in fquot)


@lru_cache(maxsize=None)
def gl_order_poly(n: int) -> IntPolynomial:
    """Order of GL_n as a polynomial in q: prod_{i=0}^{n-1} (q^n - q^i).

    Degree is exactly n^2 and the leading coefficient is 1.
    """
    if n < 0:
        raise RangeError("matrix dimension must be >= 0")
    coeffs = [1]
    for i in range(n):
        nxt = [0] * (len(coeffs) + n)
        for e, c in enumerate(coeffs):
            if c:
                nxt[e + n] += c
                nxt[e + i] -= c
        coeffs = _trimmed(nxt)
    return IntPolynomial(coeffs)
