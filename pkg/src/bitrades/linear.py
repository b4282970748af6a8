"""Linear codes presented by explicit parity checks over GF(q)."""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator

from .fields import FieldTable
from .hamming import ENUMERATION_CEILING, Code, HammingParams, Word, min_distance


class ParityCheckCode:
    """The kernel of a small stack of parity-check rows.

    A word w belongs to the code exactly when sum_i row[i] * w[i] = 0 for
    every row.  Enumeration sweeps the free coordinates in lexicographic
    order and solves for the pivot coordinates; pivots are chosen as far to
    the right as possible, so each emitted word is a free prefix plus a
    solved suffix.
    """

    __slots__ = ("field", "n", "checks", "_pivots", "_reduced")

    def __init__(self, field: FieldTable, n: int, checks):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"code length must be an integer >= 1, got {n!r}")
        self.field = field
        self.n = n
        rows = []
        for row in checks:
            row = tuple(row)
            if len(row) != n:
                raise ValueError(f"check row {row!r} does not have length {n}")
            for entry in row:
                field._check(entry)
            rows.append(row)
        self.checks = tuple(rows)
        self._reduce()

    def _reduce(self) -> None:
        """Row-reduce the checks, picking the rightmost usable pivot per row."""
        f = self.field
        rows = [list(row) for row in self.checks]
        pivots: list[int] = []
        reduced: list[list[int]] = []
        for row in rows:
            for done, col in zip(reduced, pivots):
                c = row[col]
                if c:
                    for i in range(self.n):
                        row[i] = f.sub(row[i], f.mul(c, done[i]))
            pivot = next(
                (col for col in range(self.n - 1, -1, -1) if row[col]), None
            )
            if pivot is None:
                continue  # dependent row
            scale = f.inv(row[pivot])
            row = [f.mul(scale, x) for x in row]
            for done in reduced:
                c = done[pivot]
                if c:
                    for i in range(self.n):
                        done[i] = f.sub(done[i], f.mul(c, row[i]))
            reduced.append(row)
            pivots.append(pivot)
        order = sorted(range(len(pivots)), key=lambda i: pivots[i])
        self._pivots = tuple(pivots[i] for i in order)
        self._reduced = tuple(tuple(reduced[i]) for i in order)

    @property
    def params(self) -> HammingParams:
        return HammingParams(self.n, self.field.q)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def size(self) -> int:
        return self.field.q ** (self.n - self.rank)

    def __contains__(self, word: Word) -> bool:
        return self.contains(word)

    def contains(self, word: Word) -> bool:
        if len(word) != self.n or any(
            not isinstance(s, int) or not 0 <= s < self.field.q for s in word
        ):
            return False
        return all(self.field.dot(row, word) == 0 for row in self.checks)

    def words(self) -> Iterator[Word]:
        """Yield all codewords, sweeping free coordinates lexicographically."""
        if self.size() > ENUMERATION_CEILING:
            raise ValueError(
                f"refusing to enumerate {self.size()} codewords; the ceiling is 2**48"
            )
        f = self.field
        free = [i for i in range(self.n) if i not in self._pivots]
        for values in itertools.product(f.elements, repeat=len(free)):
            word = [0] * self.n
            for pos, val in zip(free, values):
                word[pos] = val
            for row, pivot in zip(self._reduced, self._pivots):
                acc = 0
                for pos, val in zip(free, values):
                    acc = f.add(acc, f.mul(row[pos], val))
                word[pivot] = f.neg(acc)
            yield tuple(word)

    def to_code(self) -> Code:
        return Code(self.params, frozenset(self.words()))


# ---------------------------------------------------------------------------
# constructors


def sum_zero_code(field: FieldTable, n: int) -> ParityCheckCode:
    """All words whose coordinates sum to zero: one all-ones check, q^(n-1) words."""
    return ParityCheckCode(field, n, [(1,) * n])


def rs_mds_code(
    field: FieldTable, n: int | None = None, multipliers: tuple[int, ...] | None = None
) -> ParityCheckCode:
    """Sum-zero words that also satisfy one check with pairwise distinct weights.

    Any two columns of the resulting check pair (1, w_i), (1, w_j) are
    independent, so the minimum distance is 3 and the code meets the
    Singleton bound: q^(n-2) words.  By default n = q and the weights are
    the field elements in enumeration order.
    """
    n = field.q if n is None else n
    if not 3 <= n <= field.q:
        raise ValueError(
            f"need 3 <= n <= q for a distance-3 weighted check, got n={n}, q={field.q}"
        )
    if multipliers is None:
        multipliers = tuple(range(n))
    else:
        multipliers = tuple(multipliers)
    if len(multipliers) != n:
        raise ValueError(f"expected {n} multipliers, got {len(multipliers)}")
    if len(set(multipliers)) != n:
        raise ValueError(f"multipliers must be pairwise distinct, got {multipliers!r}")
    for m in multipliers:
        field._check(m)
    return ParityCheckCode(field, n, [(1,) * n, multipliers])


def coset(field: FieldTable, code: ParityCheckCode | Code, shift: Word) -> Code:
    """Translate every codeword by shift (coordinatewise field addition)."""
    base = code.to_code() if isinstance(code, ParityCheckCode) else code
    base.params.check_word(shift)
    if base.params.q != field.q:
        raise ValueError(f"code over GF({base.params.q}) but field is GF({field.q})")
    shifted = frozenset(
        tuple(field.add(a, s) for a, s in zip(w, shift)) for w in base.words
    )
    return Code(base.params, shifted)


def verify_mds(code: ParityCheckCode) -> bool:
    """Check |C| = q^(n-d+1) by enumeration, i.e. the Singleton bound met exactly.

    Codes with at most one word are trivially MDS by convention.
    """
    c = code.to_code()
    d = min_distance(c)
    if d == math.inf:
        return True
    return len(c) == code.field.q ** (code.n - d + 1)
