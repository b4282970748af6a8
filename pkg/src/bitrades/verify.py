"""Checks that a candidate pair of codes really is a bitrade.

Every check returns a VerificationReport rather than a bare bool, so a
failure always carries witnesses.  The checks deliberately overlap:
definition_check applies the counting definition directly, while the
eigenfunction, distance-profile and face-sum checks test equivalent or
necessary characterisations.  Disagreement between the equivalent ones on
the same spherical input would expose a bug, and the test suite leans on
exactly that.
"""

from __future__ import annotations

import math
import random
import warnings
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations

from .construct import PERFECT, SPHERICAL, Bitrade
from .hamming import (
    Code,
    HammingParams,
    Word,
    all_words,
    ball,
    code_distance,
    hamming_distance,
    min_distance,
    sphere,
)

WITNESS_LIMIT = 10

# Full vertex sweeps are only allowed up to this graph size.
FULL_SWEEP_CEILING = 3**10

CRITERIA = ("definition", "eigen", "dist2count", "delsarte", "mindist")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check: pass/fail plus capped, sorted witnesses.

    ``failure_count`` is the total number of failures found even when the
    witness list is capped at WITNESS_LIMIT entries; ``passed`` holds
    exactly when nothing failed.
    """

    criterion: str
    passed: bool
    witnesses: tuple[tuple, ...]
    failure_count: int
    details: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.criterion not in CRITERIA:
            raise ValueError(f"unknown criterion {self.criterion!r}")
        if self.passed != (self.failure_count == 0):
            raise ValueError("passed must hold exactly when failure_count is 0")
        if bool(self.witnesses) == self.passed:
            raise ValueError("witnesses must be nonempty exactly on failure")
        if len(self.witnesses) > WITNESS_LIMIT:
            raise ValueError(f"at most {WITNESS_LIMIT} witnesses may be attached")


def _report(criterion: str, failures: list[tuple], details: dict) -> VerificationReport:
    failures.sort()
    return VerificationReport(
        criterion=criterion,
        passed=not failures,
        witnesses=tuple(failures[:WITNESS_LIMIT]),
        failure_count=len(failures),
        details=details,
    )


@dataclass(frozen=True)
class SignedFunction:
    """A function with values +-1 on a finite support and 0 elsewhere."""

    params: HammingParams
    values: dict[Word, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", dict(self.values))
        for w, v in self.values.items():
            self.params.check_word(w)
            if v not in (1, -1):
                raise ValueError(f"value at {w!r} must be +1 or -1, got {v!r}")

    @classmethod
    def from_bitrade(cls, b: Bitrade) -> "SignedFunction":
        return cls(b.params, b.signed_values())

    @property
    def support(self) -> frozenset[Word]:
        return frozenset(self.values)

    def __call__(self, w: Word) -> int:
        return self.values.get(w, 0)


# ---------------------------------------------------------------------------
# the counting definition


def _neighbourhood(params: HammingParams, kind: str, center: Word) -> list[Word]:
    return ball(params, center) if kind == PERFECT else sphere(params, center)


def definition_check(
    params: HammingParams,
    kind: str,
    t0: Iterable[Word],
    t1: Iterable[Word],
    *,
    full_sweep: bool = False,
) -> VerificationReport:
    """Counting definition: every vertex sees equal part counts, at most 1 each.

    The spherical count of a vertex is over its sphere, the perfect count
    over its ball.  By default only vertices whose counts can be nonzero
    are visited (the supports and their neighbourhoods); ``full_sweep``
    visits all q^n vertices instead, which is allowed up to 3**10 of them.
    """
    if kind not in (SPHERICAL, PERFECT):
        raise ValueError(f"kind must be 'spherical' or 'perfect', got {kind!r}")
    set0, set1 = frozenset(t0), frozenset(t1)
    if set0 & set1:
        raise ValueError("parts must be disjoint")
    for part in (set0, set1):
        for w in part:
            params.check_word(w)

    counts: dict[Word, list[int]] = {}
    for index, part in ((0, set0), (1, set1)):
        for w in part:
            for y in _neighbourhood(params, kind, w):
                entry = counts.get(y)
                if entry is None:
                    counts[y] = entry = [0, 0]
                entry[index] += 1

    failures: list[tuple] = []
    if full_sweep:
        if params.vertex_count > FULL_SWEEP_CEILING:
            raise ValueError(
                f"full sweep over {params.vertex_count} vertices refused; "
                f"the ceiling is 3**10"
            )
        checked = 0
        for x in all_words(params):
            checked += 1
            c0, c1 = counts.get(x, (0, 0))
            if c0 != c1 or c0 > 1:
                failures.append((x, c0, c1))
    else:
        checked = len(counts)
        for x, (c0, c1) in counts.items():
            if c0 != c1 or c0 > 1:
                failures.append((x, c0, c1))

    details = {"mode": "full" if full_sweep else "closure", "vertices_checked": checked}
    return _report("definition", failures, details)


def verify_spherical(b: Bitrade, *, full_sweep: bool = False) -> VerificationReport:
    """Apply the counting definition to a spherical bitrade candidate."""
    if b.kind != SPHERICAL:
        raise ValueError(f"expected a spherical bitrade, got kind {b.kind!r}")
    return definition_check(b.params, SPHERICAL, b.t0, b.t1, full_sweep=full_sweep)


def verify_perfect(b: Bitrade, *, full_sweep: bool = False) -> VerificationReport:
    """Apply the counting definition to a perfect bitrade candidate."""
    if b.kind != PERFECT:
        raise ValueError(f"expected a perfect bitrade, got kind {b.kind!r}")
    return definition_check(b.params, PERFECT, b.t0, b.t1, full_sweep=full_sweep)


# ---------------------------------------------------------------------------
# eigenfunction characterisation


def eigen_check(f: SignedFunction, eigenvalue: int) -> VerificationReport:
    """Check sum of f over each sphere against eigenvalue * f pointwise.

    The equation is tested at every vertex where either side can be
    nonzero: the support and its neighbourhood.  Everywhere else both
    sides vanish.
    """
    if eigenvalue not in f.params.eigenvalues():
        warnings.warn(
            f"{eigenvalue} is not an eigenvalue of H({f.params.n}, {f.params.q}); "
            f"the check can only fail",
            stacklevel=2,
        )
    sums: dict[Word, int] = {}
    for w, v in f.values.items():
        for y in sphere(f.params, w):
            sums[y] = sums.get(y, 0) + v

    failures: list[tuple] = []
    for x in set(sums) | f.support:
        lhs = eigenvalue * f(x)
        rhs = sums.get(x, 0)
        if lhs != rhs:
            failures.append((x, lhs, rhs))
    return _report("eigen", failures, {"eigenvalue": eigenvalue})


# ---------------------------------------------------------------------------
# distance profile


def min_distance_check(
    params: HammingParams, t0: Iterable[Word], t1: Iterable[Word]
) -> VerificationReport:
    """Both parts must have minimum distance exactly 3.

    An empty pair passes trivially; a single-word part fails because its
    minimum distance is undefined (+inf).
    """
    set0, set1 = frozenset(t0), frozenset(t1)
    if not set0 and not set1:
        return _report("mindist", [], {"trivial": True})
    failures: list[tuple] = []
    for name, part in (("t0", set0), ("t1", set1)):
        d = min_distance(Code(params, part))
        if d != 3:
            failures.append(("min_distance", name, d, 3))
    return _report("mindist", failures, {})


def dist2_pair_check(
    params: HammingParams, kind: str, t0: Iterable[Word], t1: Iterable[Word]
) -> VerificationReport:
    """Distance profile between the parts.

    Spherical: both parts have minimum distance 3, the parts are at
    distance exactly 2, and every word has exactly (q-1)n/2 opposite-part
    words at distance 2.  Together these are equivalent to the counting
    definition.

    Perfect: minimum distances 3, and every word has exactly one
    opposite-part word at distance 1 and (q-1)(n-1)/2 at distance 2.
    These are necessary; the counting definition remains the authority.
    """
    if kind not in (SPHERICAL, PERFECT):
        raise ValueError(f"kind must be 'spherical' or 'perfect', got {kind!r}")
    set0, set1 = frozenset(t0), frozenset(t1)
    n, q = params.n, params.q
    if not set0 and not set1:
        return _report("dist2count", [], {"trivial": True})

    failures: list[tuple] = []
    for name, part in (("t0", set0), ("t1", set1)):
        d = min_distance(Code(params, part))
        if d != 3:
            failures.append(("min_distance", name, d, 3))

    if kind == SPHERICAL:
        expected_pairs = (q - 1) * n // 2
        cross = code_distance(Code(params, set0), Code(params, set1))
        if cross != 2:
            failures.append(("part_distance", cross, 2))
        details = {"expected_distance2": expected_pairs}
    else:
        expected_pairs = (q - 1) * (n - 1) // 2
        details = {"expected_distance2": expected_pairs, "expected_distance1": 1}

    for name, part, other in (("t0", set0, set1), ("t1", set1, set0)):
        for w in sorted(part):
            at1 = at2 = 0
            for v in other:
                d = hamming_distance(w, v)
                if d == 1:
                    at1 += 1
                elif d == 2:
                    at2 += 1
            if kind == PERFECT and at1 != 1:
                failures.append(("count_distance1", name, w, at1, 1))
            if at2 != expected_pairs:
                failures.append(("count_distance2", name, w, at2, expected_pairs))

    return _report("dist2count", failures, details)


def dist2_count_check(b: Bitrade) -> VerificationReport:
    """Distance-profile check for a Bitrade; see dist2_pair_check."""
    return dist2_pair_check(b.params, b.kind, b.t0, b.t1)


# ---------------------------------------------------------------------------
# face sums


def delsarte_order(params: HammingParams, eigenvalue: int) -> int:
    """The index m with eigenvalue = n(q-1) - mq; the face-sum order."""
    m, rem = divmod(params.degree - eigenvalue, params.q)
    if rem != 0 or not 0 <= m <= params.n:
        raise ValueError(
            f"{eigenvalue} is not an eigenvalue of H({params.n}, {params.q})"
        )
    return m


def bitrade_delsarte_order(b: Bitrade) -> int:
    """The face-sum order matching the bitrade's kind (eigenvalue 0 or -1)."""
    return delsarte_order(b.params, 0 if b.kind == SPHERICAL else -1)


def delsarte_face_check(
    f: SignedFunction,
    m: int,
    sample_budget: int = 10**6,
    *,
    seed: int = 0,
) -> VerificationReport:
    """Face sums of an alleged (n(q-1) - mq)-eigenfunction.

    Over every face with exactly m-1 fixed positions, such a function must
    sum to zero, and must take at least two nonzero values unless it is
    zero on the whole face.  When the number of faces is at most
    ``sample_budget`` they are all checked (by a single scan over the
    support, so untouched faces pass implicitly); otherwise a seeded
    uniform sample of faces is checked, sized so the total work stays
    near the budget.
    """
    n, q = f.params.n, f.params.q
    if not isinstance(m, int) or not 1 <= m <= n + 1:
        raise ValueError(f"face-sum order m must be in 1..{n + 1}, got {m!r}")
    k = m - 1
    faces_total = math.comb(n, k) * q**k
    failures: list[tuple] = []

    if faces_total <= sample_budget:
        acc: dict[tuple[tuple[int, ...], Word], list[int]] = {}
        for w, v in f.values.items():
            for positions in combinations(range(n), k):
                key = (positions, tuple(w[i] for i in positions))
                entry = acc.get(key)
                if entry is None:
                    acc[key] = entry = [0, 0]
                entry[0] += v
                entry[1] += 1
        for (positions, symbols), (total, nonzeros) in acc.items():
            fixed = tuple((p + 1, s) for p, s in zip(positions, symbols))
            if total != 0:
                failures.append(("zero_sum", fixed, total))
            if nonzeros == 1:
                failures.append(("support", fixed, nonzeros))
        details = {
            "mode": "exhaustive",
            "faces_total": faces_total,
            "faces_with_support": len(acc),
        }
    else:
        rng = random.Random(seed)
        support = list(f.values.items())
        checked = max(1, min(faces_total, sample_budget // max(1, len(support))))
        for _ in range(checked):
            positions = tuple(sorted(rng.sample(range(n), k)))
            symbols = tuple(rng.randrange(q) for _ in positions)
            total = nonzeros = 0
            for w, v in support:
                if all(w[p] == s for p, s in zip(positions, symbols)):
                    total += v
                    nonzeros += 1
            fixed = tuple((p + 1, s) for p, s in zip(positions, symbols))
            if total != 0:
                failures.append(("zero_sum", fixed, total))
            if nonzeros == 1:
                failures.append(("support", fixed, nonzeros))
        details = {
            "mode": "sampled",
            "faces_total": faces_total,
            "faces_checked": checked,
            "seed": seed,
        }

    return _report("delsarte", failures, details)
