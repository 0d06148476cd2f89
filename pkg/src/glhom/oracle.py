"""Independent brute-force ground truth over small finite matrix groups.

Everything here recomputes, by direct enumeration, quantities the rest of
the package derives through polynomial identities: the order of GL_n(q)
for prime q and n <= 3, the number of homomorphisms from a finitely
presented group into GL_n(q), and minimal tuples by unpruned box
enumeration.  The implementations deliberately share no logic with the
modules they check.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import ParseError, RangeError, ResourceLimit, ValidationError
from .minimize import MinimalReport
from .profiles import DegreeProfile, GroupSpec, validate_profile

DEFAULT_MAX_CANDIDATES = 10**8

_BLOCK_ROWS = 1 << 16


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    for d in range(2, int(q**0.5) + 1):
        if q % d == 0:
            return False
    return True


def _require_prime(q: int) -> None:
    if not is_prime(q):
        raise ValidationError(f"q={q} must be prime for brute-force enumeration")


@dataclass(frozen=True)
class PrimeFieldMatrix:
    """Square matrix over the prime field F_q, entries reduced mod q."""

    n: int
    q: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows, q: int) -> "PrimeFieldMatrix":
        ent = tuple(tuple(int(x) % q for x in row) for row in rows)
        return cls(n=len(ent), q=q, entries=ent)

    @classmethod
    def identity(cls, n: int, q: int) -> "PrimeFieldMatrix":
        return cls(n=n, q=q, entries=tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        ))

    def __mul__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        n, q = self.n, self.q
        a, b = self.entries, other.entries
        rows = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) % q for j in range(n))
            for i in range(n)
        )
        return PrimeFieldMatrix(n=n, q=q, entries=rows)

    def det(self) -> int:
        n, q, e = self.n, self.q, self.entries
        if n == 1:
            return e[0][0] % q
        if n == 2:
            return (e[0][0] * e[1][1] - e[0][1] * e[1][0]) % q
        if n == 3:
            return (
                e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
                - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
                + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
            ) % q
        raise RangeError("determinant implemented for n <= 3 only")

    def inverse(self) -> "PrimeFieldMatrix":
        """Inverse via the adjugate; supports n <= 3."""
        n, q, e = self.n, self.q, self.entries
        d = self.det()
        if d == 0:
            raise ValidationError("matrix is singular")
        dinv = pow(d, -1, q)
        if n == 1:
            adj = ((1,),)
        elif n == 2:
            adj = ((e[1][1], -e[0][1]), (-e[1][0], e[0][0]))
        else:
            adj = tuple(
                tuple(
                    (-1) ** (i + j) * _minor3(e, j, i) for j in range(3)
                )
                for i in range(3)
            )
        rows = tuple(tuple((x * dinv) % q for x in row) for row in adj)
        return PrimeFieldMatrix(n=n, q=q, entries=rows)

    def power(self, exponent: int) -> "PrimeFieldMatrix":
        base = self if exponent >= 0 else self.inverse()
        result = PrimeFieldMatrix.identity(self.n, self.q)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    @property
    def is_identity(self) -> bool:
        return self == PrimeFieldMatrix.identity(self.n, self.q)


def _minor3(e, i: int, j: int) -> int:
    rows = [r for r in range(3) if r != i]
    cols = [c for c in range(3) if c != j]
    return (
        e[rows[0]][cols[0]] * e[rows[1]][cols[1]]
        - e[rows[0]][cols[1]] * e[rows[1]][cols[0]]
    )


def _check_enum_args(n: int, q: int, max_candidates: int) -> int:
    if not 1 <= n <= 3:
        raise RangeError("matrix enumeration supports 1 <= n <= 3")
    _require_prime(q)
    total = q ** (n * n)
    if total > max_candidates:
        raise ResourceLimit(
            f"q^(n^2) = {total} exceeds the candidate cap {max_candidates}"
        )
    return total


def gl_enumerate(
    n: int, q: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> Iterator[PrimeFieldMatrix]:
    """Every invertible n x n matrix over F_q exactly once, as a lazy stream.

    Argument problems are reported immediately; the companion count lives
    in ``gl_count``.
    """
    _check_enum_args(n, q, max_candidates)

    def stream() -> Iterator[PrimeFieldMatrix]:
        for flat in itertools.product(range(q), repeat=n * n):
            m = PrimeFieldMatrix(
                n=n, q=q, entries=tuple(flat[i * n : (i + 1) * n] for i in range(n))
            )
            if m.det() != 0:
                yield m

    return stream()


def _matrix_blocks(n: int, q: int, total: int) -> Iterator[np.ndarray]:
    """All n x n matrices over F_q as int64 arrays, in index order, in blocks."""
    powers = q ** np.arange(n * n, dtype=np.int64)
    for start in range(0, total, _BLOCK_ROWS):
        idx = np.arange(start, min(start + _BLOCK_ROWS, total), dtype=np.int64)
        digits = (idx[:, None] // powers) % q
        yield digits.reshape(-1, n, n)


def _det_mod(mats: np.ndarray, q: int) -> np.ndarray:
    n = mats.shape[-1]
    if n == 1:
        return mats[:, 0, 0] % q
    if n == 2:
        return (mats[:, 0, 0] * mats[:, 1, 1] - mats[:, 0, 1] * mats[:, 1, 0]) % q
    a, b, c = mats[:, 0, 0], mats[:, 0, 1], mats[:, 0, 2]
    d, e, f = mats[:, 1, 0], mats[:, 1, 1], mats[:, 1, 2]
    g, h, i = mats[:, 2, 0], mats[:, 2, 1], mats[:, 2, 2]
    return (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % q


def gl_count(n: int, q: int, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> int:
    """|GL_n(q)| by direct enumeration (vectorised); the stream's companion count."""
    total = _check_enum_args(n, q, max_candidates)
    count = 0
    for mats in _matrix_blocks(n, q, total):
        count += int(np.count_nonzero(_det_mod(mats, q)))
    return count


def _pow_identity_mask(mats: np.ndarray, m: int, q: int) -> np.ndarray:
    cur = mats % q
    for _ in range(m - 1):
        cur = np.matmul(cur, mats) % q
    n = mats.shape[-1]
    return (cur == np.eye(n, dtype=np.int64)).all(axis=(1, 2))


def _order_filtered_candidates(
    n: int, q: int, m: int, max_candidates: int
) -> np.ndarray:
    """All matrices with g^m = identity (such g are automatically invertible)."""
    total = _check_enum_args(n, q, max_candidates)
    found = []
    for mats in _matrix_blocks(n, q, total):
        mask = _pow_identity_mask(mats, m, q)
        if mask.any():
            found.append(mats[mask])
    return np.concatenate(found) if found else np.empty((0, n, n), dtype=np.int64)


def _invertible_candidates(n: int, q: int, max_candidates: int) -> np.ndarray:
    total = _check_enum_args(n, q, max_candidates)
    found = []
    for mats in _matrix_blocks(n, q, total):
        mask = _det_mod(mats, q) != 0
        if mask.any():
            found.append(mats[mask])
    return np.concatenate(found) if found else np.empty((0, n, n), dtype=np.int64)


def count_units_of_order_dividing(
    n: int, q: int, m: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> int:
    """One-pass order filter over the matrix stream (pure Python, no numpy).

    Slow reference path kept separate from the vectorised enumeration so
    the two can be checked against each other.
    """
    count = 0
    for g in gl_enumerate(n, q, max_candidates):
        if g.power(m).is_identity:
            count += 1
    return count


@dataclass(frozen=True)
class Presentation:
    """Finitely presented group: generator count plus relator words.

    A word is a sequence of signed 1-based generator indices; negative
    means the inverse of that generator.
    """

    generator_count: int
    relators: tuple[tuple[int, ...], ...]
    label: str = ""

    def __post_init__(self):
        if self.generator_count < 1:
            raise ValidationError("presentation needs at least one generator")
        if not self.relators:
            raise ValidationError("presentation needs at least one relator")
        for word in self.relators:
            if not word:
                raise ValidationError("empty relator word")
            for letter in word:
                if letter == 0 or abs(letter) > self.generator_count:
                    raise ValidationError(f"relator letter {letter} out of range")


_GEN_RE = re.compile(r"x(\d+)")
_INT_RE = re.compile(r"-?\d+")


class _WordParser:
    """Recursive-descent parser for relator words: x1, *, ^int, parentheses."""

    def __init__(self, text: str, offset: int):
        self.text = text
        self.pos = 0
        self.offset = offset  # for error positions in the enclosing string

    def fail(self, message: str):
        raise ParseError(message, self.offset + self.pos)

    def parse(self) -> tuple[int, ...]:
        word = self.word()
        if self.pos != len(self.text):
            self.fail("trailing characters in relator word")
        return tuple(word)

    def word(self) -> list[int]:
        letters = self.factor()
        while self.text.startswith("*", self.pos):
            self.pos += 1
            letters += self.factor()
        return letters

    def factor(self) -> list[int]:
        base = self.atom()
        if self.text.startswith("^", self.pos):
            self.pos += 1
            m = _INT_RE.match(self.text, self.pos)
            if not m:
                self.fail("expected integer exponent after '^'")
            self.pos = m.end()
            e = int(m.group())
            if e >= 0:
                return base * e
            return [-g for g in reversed(base)] * (-e)
        return base

    def atom(self) -> list[int]:
        if self.text.startswith("(", self.pos):
            self.pos += 1
            inner = self.word()
            if not self.text.startswith(")", self.pos):
                self.fail("expected ')'")
            self.pos += 1
            return inner
        m = _GEN_RE.match(self.text, self.pos)
        if not m:
            self.fail("expected generator 'x<k>' or '('")
        self.pos = m.end()
        return [int(m.group(1))]


def parse_presentation(text: str) -> Presentation:
    """Parse presentation text: ``gens=2; rel=x1^3; rel=(x1*x2)^2``."""
    segments = [seg.strip() for seg in text.split(";")]
    segments = [seg for seg in segments if seg]
    if not segments or not segments[0].startswith("gens="):
        raise ParseError("presentation must start with 'gens=<k>'", 0)
    try:
        k = int(segments[0][len("gens=") :])
    except ValueError:
        raise ParseError("expected integer after 'gens='", len("gens="))
    relators = []
    for seg in segments[1:]:
        if not seg.startswith("rel="):
            raise ParseError(f"expected 'rel=' segment, got {seg!r}", text.find(seg))
        body = seg[len("rel=") :]
        word = _WordParser(body, text.find(body)).parse()
        if not word:
            raise ValidationError("relator word reduces to the empty word")
        relators.append(word)
    return Presentation(generator_count=k, relators=tuple(relators), label=text)


def builtin_presentation(spec: GroupSpec) -> Presentation | None:
    """Presentation paired with a built-in group spec, or None.

    The pairing with a degree profile is a fixture-level claim, validated
    end to end by the agreement between polynomial evaluation and brute
    force counting.
    """
    if spec.family == "cyclic":
        return Presentation(1, ((1,) * spec.m,), label=f"cyclic:{spec.m}")
    if spec.family == "dihedral":
        return Presentation(
            2, ((1,) * spec.m, (2, 2), (1, 2, 1, 2)), label=f"dihedral:{spec.m}"
        )
    if spec.family == "sym" and spec.m == 4:
        return Presentation(2, ((1, 1), (2, 2, 2), (1, 2) * 4), label="sym:4")
    return None


def _pure_power(word: tuple[int, ...]) -> tuple[int, int] | None:
    """If the word is g^m or g^-m for a single generator g, return (g, m)."""
    letters = set(word)
    if len(letters) == 1:
        return abs(word[0]), len(word)
    return None


def _single_generator(word: tuple[int, ...]) -> int | None:
    gens = {abs(g) for g in word}
    if len(gens) == 1:
        return gens.pop()
    return None


def _inv_table(q: int) -> np.ndarray:
    return np.array([0] + [pow(x, -1, q) for x in range(1, q)], dtype=np.int64)


def _batch_inverse(mats: np.ndarray, q: int) -> np.ndarray:
    """Inverses of a batch of invertible matrices via the adjugate (n <= 3)."""
    n = mats.shape[-1]
    det = _det_mod(mats, q)
    dinv = _inv_table(q)[det]
    if n == 1:
        return (dinv[:, None, None]) % q
    if n == 2:
        adj = np.empty_like(mats)
        adj[:, 0, 0] = mats[:, 1, 1]
        adj[:, 0, 1] = -mats[:, 0, 1]
        adj[:, 1, 0] = -mats[:, 1, 0]
        adj[:, 1, 1] = mats[:, 0, 0]
        return (adj * dinv[:, None, None]) % q
    adj = np.empty_like(mats)
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != j]
            cols = [c for c in range(3) if c != i]
            minor = (
                mats[:, rows[0], cols[0]] * mats[:, rows[1], cols[1]]
                - mats[:, rows[0], cols[1]] * mats[:, rows[1], cols[0]]
            )
            adj[:, i, j] = (-1) ** (i + j) * minor
    return (adj * dinv[:, None, None]) % q


def _eval_word_single(
    word: tuple[int, ...], x: np.ndarray, x_inv: np.ndarray | None, q: int
) -> np.ndarray:
    """Evaluate a one-generator word over a candidate batch; (N, n, n) result."""
    n = x.shape[-1]
    cur = np.broadcast_to(np.eye(n, dtype=np.int64), x.shape).copy()
    for letter in word:
        factor = x if letter > 0 else x_inv
        cur = np.matmul(cur, factor) % q
    return cur


def _eval_word_pair(
    word: tuple[int, ...],
    xs: np.ndarray,
    ys: np.ndarray,
    xs_inv: np.ndarray | None,
    ys_inv: np.ndarray | None,
    q: int,
) -> np.ndarray:
    """Evaluate a two-generator word on the full candidate grid; (Nx, Ny, n, n)."""
    n = xs.shape[-1]
    cur = np.broadcast_to(
        np.eye(n, dtype=np.int64), (xs.shape[0], ys.shape[0], n, n)
    ).copy()
    for letter in word:
        if abs(letter) == 1:
            factor = xs if letter > 0 else xs_inv
            cur = np.einsum("xyij,xjk->xyik", cur, factor) % q
        else:
            factor = ys if letter > 0 else ys_inv
            cur = np.einsum("xyij,yjk->xyik", cur, factor) % q
    return cur


def hom_count_bruteforce(
    presentation: Presentation,
    n: int,
    q: int,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> int:
    """Count homomorphisms from the presented group into GL_n(q) directly.

    Counts generator tuples (g_1, ..., g_k) of invertible matrices under
    which every relator evaluates to the identity.  Generators appearing
    in a pure power relator g^m are pre-filtered to the matrices of order
    dividing m, which is what keeps two-generator presentations feasible
    at n = 2.
    """
    _require_prime(q)
    if n < 0:
        raise RangeError("dimension must be >= 0")
    if n == 0:
        return 1  # GL_0 is trivial: exactly the empty representation
    k = presentation.generator_count

    power_of: dict[int, int] = {}
    for word in presentation.relators:
        pp = _pure_power(word)
        if pp and pp[0] not in power_of:
            power_of[pp[0]] = pp[1]

    cands: list[np.ndarray] = []
    for gen in range(1, k + 1):
        if gen in power_of:
            cands.append(_order_filtered_candidates(n, q, power_of[gen], max_candidates))
        else:
            cands.append(_invertible_candidates(n, q, max_candidates))

    needs_inverse = any(letter < 0 for word in presentation.relators for letter in word)
    inverses: list[np.ndarray | None] = [
        _batch_inverse(c, q) if needs_inverse and len(c) else None for c in cands
    ]

    # Single-generator relators cut down their own candidate axis first.
    grid_words = []
    for word in presentation.relators:
        gen = _single_generator(word)
        if gen is None:
            grid_words.append(word)
            continue
        pp = _pure_power(word)
        if pp and power_of.get(gen) == pp[1]:
            continue  # already enforced by the order filter
        x = cands[gen - 1]
        if len(x) == 0:
            continue
        shifted = tuple(1 if g > 0 else -1 for g in word)
        cur = _eval_word_single(shifted, x, inverses[gen - 1], q)
        mask = (cur == np.eye(n, dtype=np.int64)).all(axis=(1, 2))
        cands[gen - 1] = x[mask]
        if inverses[gen - 1] is not None:
            inverses[gen - 1] = inverses[gen - 1][mask]

    total_tuples = 1
    for c in cands:
        total_tuples *= len(c)
    if total_tuples > max_candidates:
        raise ResourceLimit(
            f"{total_tuples} candidate tuples exceed the cap {max_candidates}"
        )
    if total_tuples == 0:
        return 0
    if not grid_words:
        # every relator was single-generator, so the filtered axes are the answer
        return total_tuples

    if k == 2:
        xs, ys = cands
        eye = np.eye(n, dtype=np.int64)
        count = 0
        block = max(1, (1 << 21) // max(1, len(ys) * n * n))
        for start in range(0, len(xs), block):
            xb = xs[start : start + block]
            xb_inv = inverses[0][start : start + block] if inverses[0] is not None else None
            mask = np.ones((len(xb), len(ys)), dtype=bool)
            for word in grid_words:
                cur = _eval_word_pair(word, xb, ys, xb_inv, inverses[1], q)
                mask &= (cur == eye).all(axis=(2, 3))
            count += int(mask.sum())
        return count

    # Generic fallback for three or more generators: plain nested loops.
    mat_lists = [
        [PrimeFieldMatrix(n=n, q=q, entries=tuple(map(tuple, m.tolist()))) for m in c]
        for c in cands
    ]
    inv_lists = [[m.inverse() for m in lst] if needs_inverse else None for lst in mat_lists]
    count = 0
    for combo in itertools.product(*[range(len(lst)) for lst in mat_lists]):
        ok = True
        for word in grid_words:
            cur = PrimeFieldMatrix.identity(n, q)
            for letter in word:
                idx = combo[abs(letter) - 1]
                if letter > 0:
                    cur = cur * mat_lists[abs(letter) - 1][idx]
                else:
                    cur = cur * inv_lists[abs(letter) - 1][idx]
            if not cur.is_identity:
                ok = False
                break
        if ok:
            count += 1
    return count


def minimal_tuples_naive(
    profile: DegreeProfile, r: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> MinimalReport:
    """Minimal tuples for r by full enumeration of the box [-r, r]^s.

    Same contract as ``minimize.minimal_tuples`` but with no pruning at
    all; the box is valid because the tuple (r, 0, ..., 0) already gives
    square-sum r^2.  Intended as the cross-validation oracle for the
    branch-and-bound search.
    """
    validate_profile(profile)
    if not 0 <= r < profile.order:
        raise RangeError(f"residue r={r} outside [0, {profile.order})")
    s = profile.s
    side = 2 * r + 1
    total = side**s
    if total > max_candidates:
        raise ResourceLimit(
            f"box size {total} exceeds the candidate cap {max_candidates}"
        )
    degrees = np.array(profile.degrees, dtype=np.int64)
    powers = side ** np.arange(s, dtype=np.int64)
    best: int | None = None
    rows: list[tuple[int, ...]] = []
    for start in range(0, total, _BLOCK_ROWS):
        idx = np.arange(start, min(start + _BLOCK_ROWS, total), dtype=np.int64)
        digits = (idx[:, None] // powers) % side - r
        hit = digits[(digits @ degrees) == r]
        if not len(hit):
            continue
        sq = (hit * hit).sum(axis=1)
        block_best = int(sq.min())
        if best is None or block_best < best:
            best = block_best
            rows = [tuple(map(int, row)) for row in hit[sq == block_best]]
        elif block_best == best:
            rows.extend(tuple(map(int, row)) for row in hit[sq == best])
    assert best is not None  # (r, 0, ..., 0) is always in the box
    rows.sort()
    return MinimalReport(
        r=r,
        tuples=tuple(rows),
        s_r=best,
        eps_r=Fraction(best) - Fraction(r * r, profile.order),
    )
