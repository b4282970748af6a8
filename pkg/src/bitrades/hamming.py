"""Metric primitives for Hamming graphs H(n, q).

The vertices of H(n, q) are the length-n words over {0, ..., q-1}; two
words are adjacent when they differ in exactly one coordinate.  Words are
plain tuples of ints and codes are immutable sets of words, so everything
in this module is pure and safe to share.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

Word = tuple[int, ...]

# Whole-graph and whole-face enumerations are refused above this many words.
ENUMERATION_CEILING = 2**48

# min_distance switches from the exact pairwise scan to deletion-bucket
# screening above this code size.  Past the switch only distances <= 2 are
# resolved exactly and 3 means ">= 3", which is all that callers need.
PAIRWISE_LIMIT = 20000


@dataclass(frozen=True, slots=True)
class HammingParams:
    """Parameters (n, q) of the Hamming graph H(n, q)."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"word length must be an integer >= 1, got n={self.n!r}")
        if not isinstance(self.q, int) or self.q < 2:
            raise ValueError(f"alphabet size must be an integer >= 2, got q={self.q!r}")

    @property
    def vertex_count(self) -> int:
        return self.q**self.n

    @property
    def degree(self) -> int:
        return self.n * (self.q - 1)

    def eigenvalues(self) -> list[int]:
        """Adjacency eigenvalues n(q-1) - q*i for i = 0..n, in descending order."""
        return [self.degree - self.q * i for i in range(self.n + 1)]

    def contains(self, word: Word) -> bool:
        return len(word) == self.n and all(
            isinstance(s, int) and 0 <= s < self.q for s in word
        )

    def check_word(self, word: Word) -> None:
        if not self.contains(word):
            raise ValueError(f"{word!r} is not a word of H({self.n}, {self.q})")


@dataclass(frozen=True)
class Code:
    """A set of words in a common Hamming graph."""

    params: HammingParams
    words: frozenset[Word]

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", frozenset(self.words))
        for w in self.words:
            self.params.check_word(w)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self.words

    def sorted_words(self) -> list[Word]:
        return sorted(self.words)


@dataclass(frozen=True)
class Face:
    """An axis-aligned subcube of H(n, q): some positions pinned to symbols.

    Fixed positions are 1-based on the public surface (position 1 is the
    first coordinate); free positions range over the whole alphabet.
    ``fixed`` accepts a mapping or an iterable of (position, symbol) pairs
    and is stored as a sorted tuple, so faces are hashable and compare by
    value.
    """

    params: HammingParams
    fixed: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = dict(self.fixed)
        for pos, sym in pairs.items():
            if not isinstance(pos, int) or not 1 <= pos <= self.params.n:
                raise ValueError(
                    f"fixed position {pos!r} out of range 1..{self.params.n}"
                )
            if not isinstance(sym, int) or not 0 <= sym < self.params.q:
                raise ValueError(
                    f"fixed symbol {sym!r} at position {pos} out of range 0..{self.params.q - 1}"
                )
        object.__setattr__(self, "fixed", tuple(sorted(pairs.items())))

    @property
    def free_positions(self) -> tuple[int, ...]:
        """The 1-based positions not pinned by the face."""
        pinned = {pos for pos, _ in self.fixed}
        return tuple(p for p in range(1, self.params.n + 1) if p not in pinned)

    def word_count(self) -> int:
        return self.params.q ** len(self.free_positions)


# ---------------------------------------------------------------------------
# distances


def hamming_distance(x: Word, y: Word) -> int:
    """Number of coordinates where the two words differ."""
    if len(x) != len(y):
        raise ValueError(f"cannot compare words of lengths {len(x)} and {len(y)}")
    return sum(a != b for a, b in zip(x, y))


def min_distance(code: Code, *, pairwise_limit: int = PAIRWISE_LIMIT) -> int | float:
    """Minimum distance between distinct codewords; +inf below two words.

    Codes up to ``pairwise_limit`` words get the exact pairwise scan.
    Larger codes are screened by coordinate deletion: a shared single
    deletion means distance 1, a shared double deletion distance 2, and
    otherwise 3 is returned, standing for "at least 3".
    """
    words = list(code.words)
    if len(words) <= 1:
        return math.inf
    if len(words) <= pairwise_limit:
        best = code.params.n
        for i, w in enumerate(words):
            for v in words[i + 1 :]:
                d = hamming_distance(w, v)
                if d < best:
                    best = d
                    if best == 1:
                        return 1
        return best

    n = code.params.n
    seen_single: set[tuple[int, Word]] = set()
    for w in words:
        for i in range(n):
            key = (i, w[:i] + w[i + 1 :])
            if key in seen_single:
                return 1
            seen_single.add(key)
    seen_double: set[tuple[int, int, Word]] = set()
    for w in words:
        for i in range(n):
            for j in range(i + 1, n):
                key = (i, j, w[:i] + w[i + 1 : j] + w[j + 1 :])
                if key in seen_double:
                    return 2
                seen_double.add(key)
    return 3


def code_distance(c: Code, d: Code) -> int | float:
    """Minimum distance between a word of c and a word of d; +inf if either is empty."""
    if c.params != d.params:
        raise ValueError(f"codes live in different graphs: {c.params} vs {d.params}")
    if not c.words or not d.words:
        return math.inf
    best: int | float = math.inf
    for w in c.words:
        for v in d.words:
            dist = hamming_distance(w, v)
            if dist < best:
                best = dist
                if best == 0:
                    return 0
    return best


# ---------------------------------------------------------------------------
# neighbourhoods


def sphere(params: HammingParams, center: Word) -> list[Word]:
    """The n(q-1) words at distance exactly 1 from center.

    Listed by increasing changed position, then increasing symbol.
    """
    params.check_word(center)
    out: list[Word] = []
    for i in range(params.n):
        head, tail = center[:i], center[i + 1 :]
        for s in range(params.q):
            if s != center[i]:
                out.append(head + (s,) + tail)
    return out


def ball(params: HammingParams, center: Word) -> list[Word]:
    """The center together with its sphere: n(q-1) + 1 words."""
    return [center] + sphere(params, center)


# ---------------------------------------------------------------------------
# enumeration


def face_words(face: Face) -> Iterator[Word]:
    """Yield the words of the face in lexicographic order of the free coordinates."""
    params = face.params
    free = [p - 1 for p in face.free_positions]
    if params.q ** len(free) > ENUMERATION_CEILING:
        raise ValueError(
            f"refusing to enumerate {params.q}**{len(free)} words; "
            f"the ceiling is 2**48"
        )
    template = [0] * params.n
    for pos, sym in face.fixed:
        template[pos - 1] = sym
    for combo in itertools.product(range(params.q), repeat=len(free)):
        for pos, sym in zip(free, combo):
            template[pos] = sym
        yield tuple(template)


def all_words(params: HammingParams) -> Iterator[Word]:
    """Yield every vertex of H(n, q) in lexicographic order."""
    if params.vertex_count > ENUMERATION_CEILING:
        raise ValueError(
            f"refusing to enumerate {params.q}**{params.n} words; the ceiling is 2**48"
        )
    return iter(itertools.product(range(params.q), repeat=params.n))


def concat(x: Word, y: Word, q: int | None = None) -> Word:
    """Concatenate two words; with q given, both are validated over that alphabet."""
    if not x or not y:
        raise ValueError("cannot concatenate empty words")
    if q is not None:
        for w in (x, y):
            for s in w:
                if not isinstance(s, int) or not 0 <= s < q:
                    raise ValueError(f"symbol {s!r} in {w!r} is not in 0..{q - 1}")
    return x + y
