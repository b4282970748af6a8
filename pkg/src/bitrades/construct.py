"""Constructions of spherical and perfect bitrades in Hamming graphs.

A pair of disjoint codes (t0, t1) is a spherical bitrade when every vertex
of the graph sees equally many t0 and t1 words among its neighbours, and
never more than one of each; it is a perfect bitrade when the same holds
with the vertex itself included.  The difference of the parts' indicator
functions is then an eigenfunction for eigenvalue 0 or -1 respectively,
and since the eigenvalues of H(n, q) are n(q-1) - q*i, spherical bitrades
need q | n and perfect ones n = 1 (mod q).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .fields import build_field
from .hamming import HammingParams, Word
from .linear import coset, rs_mds_code

SPHERICAL = "spherical"
PERFECT = "perfect"
KINDS = (SPHERICAL, PERFECT)


@dataclass(frozen=True)
class Bitrade:
    """Two disjoint parts in a common Hamming graph, tagged by kind.

    Construction validates word sanity, disjointness and the existence
    constraint on (n, q) for the claimed kind.  It does not prove the pair
    is actually a bitrade; that is what the verify module is for, and it
    must also hold |t0| = |t1| for any pair that passes.
    """

    params: HammingParams
    kind: str
    t0: frozenset[Word]
    t1: frozenset[Word]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        object.__setattr__(self, "t0", frozenset(self.t0))
        object.__setattr__(self, "t1", frozenset(self.t1))
        for part in (self.t0, self.t1):
            for w in part:
                self.params.check_word(w)
        overlap = self.t0 & self.t1
        if overlap:
            raise ValueError(
                f"parts must be disjoint; {len(overlap)} shared words, "
                f"e.g. {min(overlap)!r}"
            )
        n, q = self.params.n, self.params.q
        if self.kind == SPHERICAL and n % q != 0:
            raise ValueError(
                f"no spherical bitrade exists in H({n}, {q}): the parts' indicator "
                f"difference would be an eigenfunction for 0, but the eigenvalues "
                f"are n(q-1) - q*i, and 0 is among them only when q divides n"
            )
        if self.kind == PERFECT and n % q != 1:
            raise ValueError(
                f"no perfect bitrade exists in H({n}, {q}): the parts' indicator "
                f"difference would be an eigenfunction for -1, but the eigenvalues "
                f"are n(q-1) - q*i, and -1 is among them only when n = 1 (mod q)"
            )

    @property
    def volume(self) -> int:
        """Number of words in the first part (equal to |t1| for valid bitrades)."""
        return len(self.t0)

    @property
    def support(self) -> frozenset[Word]:
        return self.t0 | self.t1

    def signed_values(self) -> dict[Word, int]:
        """The indicator difference: +1 on t0, -1 on t1."""
        values = {w: 1 for w in self.t0}
        values.update((w, -1) for w in self.t1)
        return values

    def sorted_parts(self) -> tuple[list[Word], list[Word]]:
        return sorted(self.t0), sorted(self.t1)


# ---------------------------------------------------------------------------
# constructions


def _is_even(word: Word) -> bool:
    inversions = sum(
        1
        for i, j in itertools.combinations(range(len(word)), 2)
        if word[i] > word[j]
    )
    return inversions % 2 == 0


def alt_bitrade(q: int) -> Bitrade:
    """Spherical bitrade in H(q, q) split by permutation parity.

    The parts are the one-line forms of the even and the odd permutations
    of {0, ..., q-1}; each has q!/2 words, pairwise at distance >= 3
    because two permutations can never differ in exactly one place (or,
    for equal parity, in exactly two).
    """
    if not isinstance(q, int) or q < 3:
        raise ValueError(f"the permutation bitrade needs an integer q >= 3, got {q!r}")
    even, odd = [], []
    for word in itertools.permutations(range(q)):
        (even if _is_even(word) else odd).append(word)
    return Bitrade(HammingParams(q, q), SPHERICAL, frozenset(even), frozenset(odd))


def mds_bitrade(q: int, variant: str = "swap", shift: Word | None = None) -> Bitrade:
    """Spherical bitrade in H(q, q) carved out of weighted-check codes.

    Both parts sit inside the sum-zero code.  The swap variant takes the
    two distance-3 codes whose weight rows differ by transposing the first
    two weights and keeps the words unique to each part: q^(q-2) - q^(q-3)
    words per part when the codes are genuinely different.  The coset
    variant pairs one distance-3 code with a translate of itself by a
    sum-zero shift outside the code: q^(q-2) words per part.
    """
    if not isinstance(q, int) or q < 3:
        raise ValueError(f"the weighted-check bitrade needs an integer q >= 3, got {q!r}")
    field = build_field(q)
    base = rs_mds_code(field, q)
    params = HammingParams(q, q)

    if variant == "swap":
        if shift is not None:
            raise ValueError("shift only applies to the coset variant")
        weights = list(range(q))
        weights[0], weights[1] = weights[1], weights[0]
        other = rs_mds_code(field, q, tuple(weights))
        w0, w1 = set(base.words()), set(other.words())
        t0, t1 = w0 - w1, w1 - w0
        if not t0:
            raise ValueError(
                f"the swap variant degenerates for q = {q}: both weight rows span "
                f"the same code once the all-ones row is added, so no words are "
                f"unique to either part (for q = 3 every distinct-weight row gives "
                f"the one distance-3 subcode of the sum-zero code)"
            )
        return Bitrade(params, SPHERICAL, frozenset(t0), frozenset(t1))

    if variant == "coset":
        if shift is None:
            shift = (1, field.neg(1)) + (0,) * (q - 2)
        params.check_word(shift)
        if field.sum(shift) != 0:
            raise ValueError(
                f"the coset shift must have coordinate sum zero, got {shift!r}"
            )
        if shift in base:
            raise ValueError(
                f"the coset shift {shift!r} lies in the base code, so the translate "
                f"coincides with it and the trade would be empty"
            )
        t0 = frozenset(base.words())
        t1 = coset(field, base, shift).words
        return Bitrade(params, SPHERICAL, t0, t1)

    raise ValueError(f"unknown variant {variant!r}: expected 'swap' or 'coset'")


def tensor_combine(a: Bitrade, b: Bitrade) -> Bitrade:
    """Join two spherical bitrades over the same alphabet by concatenation.

    Straight pairs (t0 x t0' and t1 x t1') form the new first part, cross
    pairs the second, so the volume is twice the product of the input
    volumes.  Inputs are taken on trust: combining pairs that are not
    actually spherical bitrades yields garbage, so callers holding
    unverified data should verify first (the command-line tool does).
    """
    if a.params.q != b.params.q:
        raise ValueError(
            f"alphabet mismatch: cannot combine q={a.params.q} with q={b.params.q}"
        )
    if a.kind != SPHERICAL or b.kind != SPHERICAL:
        raise ValueError("only spherical bitrades combine; lift afterwards instead")
    t0 = {x + y for x in a.t0 for y in b.t0} | {x + y for x in a.t1 for y in b.t1}
    t1 = {x + y for x in a.t0 for y in b.t1} | {x + y for x in a.t1 for y in b.t0}
    params = HammingParams(a.params.n + b.params.n, a.params.q)
    return Bitrade(params, SPHERICAL, frozenset(t0), frozenset(t1))


def tensor_power(b: Bitrade, r: int) -> Bitrade:
    """The r-fold tensor_combine of a spherical bitrade with itself."""
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"tensor power needs an integer r >= 1, got {r!r}")
    return functools.reduce(tensor_combine, [b] * (r - 1), b)


def lift_to_perfect(b: Bitrade) -> Bitrade:
    """Append one coordinate to turn a spherical bitrade into a perfect one.

    Every word keeps its part with symbol 0 appended and switches parts
    with symbol 1 appended; the volume doubles and the result lives in
    H(n+1, q), where n+1 = 1 (mod q) as required.
    """
    if b.kind != SPHERICAL:
        raise ValueError(f"can only lift spherical bitrades, got kind {b.kind!r}")
    t0 = {w + (0,) for w in b.t0} | {w + (1,) for w in b.t1}
    t1 = {w + (1,) for w in b.t0} | {w + (0,) for w in b.t1}
    params = HammingParams(b.params.n + 1, b.params.q)
    return Bitrade(params, PERFECT, frozenset(t0), frozenset(t1))
