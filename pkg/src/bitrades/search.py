"""Exhaustive and local search for minimum-volume bitrades.

The exhaustive engine grows a partial pair of parts one word at a time,
always repairing the least vertex whose two coverage counts disagree:
any completed bitrade extending the current state must cover that vertex
on its deficient side, the candidates are exactly the words of the
vertex's own neighbourhood, and since no two same-part words may cover a
common vertex, every completion is reachable along exactly one branch.
The engine is therefore complete, duplicate-free and, with candidates
tried in a fixed order, deterministic.

Vertices are numbered 0..q^n-1 (first coordinate most significant) and
coverage is kept in one bitmask per part, so the per-node work is a few
word-level integer operations.

The local engine is a tabu walk over add/remove/move word moves scoring
the number of violated vertices; it proves nothing and is best-effort.
"""

from __future__ import annotations

import random
import sys
import time
from collections import deque
from dataclasses import dataclass

from .construct import PERFECT, SPHERICAL, Bitrade
from .hamming import HammingParams, Word, ball, sphere
from .verify import definition_check

# Whole-graph exhaustive search is refused above this vertex count.
EXHAUSTIVE_CEILING = 3**10

LOCAL_TIME_BUDGET = 60.0
TABU_LENGTH = 50
STAGNATION_LIMIT = 200

MODES = ("exhaustive", "local")


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one search run.

    ``volume_upper_bound`` restricts the search to volumes at most that
    value; ``time_budget`` is in seconds (exhaustive mode defaults to
    unlimited, local mode to 60); ``move_budget`` caps the number of
    applied local-search moves so runs can be cut off deterministically;
    ``start`` seeds the local walk with a known bitrade.
    """

    params: HammingParams
    mode: str = "exhaustive"
    volume_upper_bound: int | None = None
    symmetry_breaking: bool = True
    time_budget: float | None = None
    seed: int = 0
    move_budget: int | None = None
    start: Bitrade | None = None

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.volume_upper_bound is not None:
            if not isinstance(self.volume_upper_bound, int) or self.volume_upper_bound < 0:
                raise ValueError("volume_upper_bound must be a nonnegative integer")
        if self.time_budget is not None and not self.time_budget > 0:
            raise ValueError("time_budget must be positive")
        if self.move_budget is not None:
            if not isinstance(self.move_budget, int) or self.move_budget < 1:
                raise ValueError("move_budget must be a positive integer")


@dataclass(frozen=True)
class SearchResult:
    """What a search run found.

    ``proven_minimum`` is set only when an exhaustive run finished inside
    its budget; then ``best`` is a true minimum-volume bitrade, or None
    when no bitrade exists within the volume bound.  Local runs and
    budget-exhausted runs report their incumbent with
    ``proven_minimum`` False.
    """

    best: Bitrade | None
    proven_minimum: bool
    nodes_explored: int
    wall_time: float

    @property
    def volume(self) -> int | None:
        return None if self.best is None else self.best.volume


def min_perfect_volume(config: SearchConfig) -> SearchResult:
    """Search H(n, q) for a minimum-volume perfect bitrade."""
    params = config.params
    if (params.n - 1) % params.q != 0:
        raise ValueError(
            f"no perfect bitrade exists in H({params.n}, {params.q}): "
            f"n must be 1 (mod q) for perfect bitrades"
        )
    return _run(config, PERFECT)


def find_spherical(config: SearchConfig) -> SearchResult:
    """Search H(n, q) for a minimum-volume spherical bitrade."""
    params = config.params
    if params.n % params.q != 0:
        raise ValueError(
            f"no spherical bitrade exists in H({params.n}, {params.q}): "
            f"n must be a multiple of q for spherical bitrades"
        )
    return _run(config, SPHERICAL)


def _run(config: SearchConfig, kind: str) -> SearchResult:
    if config.mode == "exhaustive":
        return _exhaustive(config, kind)
    return _local(config, kind)


# ---------------------------------------------------------------------------
# vertex numbering and neighbourhood tables


def _encode(word: Word, q: int) -> int:
    v = 0
    for s in word:
        v = v * q + s
    return v


def _decode(v: int, n: int, q: int) -> Word:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        v, out[i] = divmod(v, q)
    return tuple(out)


class _Regions:
    """Lazy per-vertex neighbourhood ids and bitmasks (ball or sphere)."""

    __slots__ = ("params", "kind", "_ids", "_masks")

    def __init__(self, params: HammingParams, kind: str) -> None:
        self.params = params
        self.kind = kind
        self._ids: dict[int, tuple[int, ...]] = {}
        self._masks: dict[int, int] = {}

    @property
    def size(self) -> int:
        return self.params.degree + (1 if self.kind == PERFECT else 0)

    def ids(self, x: int) -> tuple[int, ...]:
        got = self._ids.get(x)
        if got is None:
            word = _decode(x, self.params.n, self.params.q)
            hood = ball if self.kind == PERFECT else sphere
            got = tuple(sorted(_encode(w, self.params.q) for w in hood(self.params, word)))
            self._ids[x] = got
        return got

    def mask(self, x: int) -> int:
        got = self._masks.get(x)
        if got is None:
            got = 0
            for y in self.ids(x):
                got |= 1 << y
            self._masks[x] = got
        return got


# ---------------------------------------------------------------------------
# exhaustive branch and bound


class _RepairSearch:
    __slots__ = (
        "regions", "allowed", "deadline", "cov", "parts",
        "nodes", "exhausted", "best",
    )

    def __init__(self, regions: _Regions, allowed: int, deadline: float | None) -> None:
        self.regions = regions
        self.allowed = allowed
        self.deadline = deadline
        self.cov = [0, 0]
        self.parts: tuple[set[int], set[int]] = (set(), set())
        self.nodes = 0
        self.exhausted = False
        self.best: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def can_add(self, w: int, side: int) -> bool:
        if w in self.parts[0] or w in self.parts[1]:
            return False
        return not self.regions.mask(w) & self.cov[side]

    def push(self, w: int, side: int) -> None:
        self.parts[side].add(w)
        self.cov[side] |= self.regions.mask(w)

    def pop(self, w: int, side: int) -> None:
        self.parts[side].remove(w)
        self.cov[side] ^= self.regions.mask(w)

    def dfs(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 256 == 0:
            if time.monotonic() > self.deadline:
                self.exhausted = True
                return
        cov0, cov1 = self.cov
        diff = cov0 ^ cov1
        if diff == 0:
            volume = len(self.parts[0])
            # lengths agree: each part covers region-size vertices per word
            if volume and volume <= self.allowed:
                self.best = (tuple(sorted(self.parts[0])), tuple(sorted(self.parts[1])))
                self.allowed = volume - 1
            return
        size = self.regions.size
        need0 = (diff & cov1).bit_count()
        need1 = (diff & cov0).bit_count()
        bound = max(
            len(self.parts[0]) + (need0 + size - 1) // size,
            len(self.parts[1]) + (need1 + size - 1) // size,
        )
        if bound > self.allowed:
            return
        x = (diff & -diff).bit_length() - 1
        side = 0 if (cov1 >> x) & 1 else 1
        part0, part1 = self.parts
        covered = self.cov[side]
        for w in self.regions.ids(x):
            if w in part0 or w in part1:
                continue
            m = self.regions.mask(w)
            if m & covered:
                continue
            self.parts[side].add(w)
            self.cov[side] = covered | m
            self.dfs()
            self.parts[side].remove(w)
            self.cov[side] = covered
            if self.exhausted:
                return


def _exhaustive(config: SearchConfig, kind: str) -> SearchResult:
    params = config.params
    total = params.vertex_count
    if total > EXHAUSTIVE_CEILING:
        raise ValueError(
            f"exhaustive search over the {total} vertices of "
            f"H({params.n}, {params.q}) refused; the ceiling is 3**10"
        )
    regions = _Regions(params, kind)
    if config.volume_upper_bound is not None:
        allowed = config.volume_upper_bound
    else:
        allowed = total // regions.size
    deadline = None if config.time_budget is None else time.monotonic() + config.time_budget
    engine = _RepairSearch(regions, allowed, deadline)

    if config.symmetry_breaking:
        # Translations put some t0 word at 0; for the perfect kind the
        # stabilizer of 0 then moves 0's unique partner to (0,..,0,1).
        seeds = [((0,), (1,))] if kind == PERFECT else [((0,), ())]
    else:
        seeds = [((w,), ()) for w in range(total)]

    started = time.perf_counter()
    depth_needed = 2 * (total // regions.size) + 100
    old_limit = sys.getrecursionlimit()
    if depth_needed > old_limit:
        sys.setrecursionlimit(depth_needed)
    try:
        for seed0, seed1 in seeds:
            for w in seed0:
                engine.push(w, 0)
            for w in seed1:
                engine.push(w, 1)
            engine.dfs()
            for w in seed1:
                engine.pop(w, 1)
            for w in seed0:
                engine.pop(w, 0)
            if engine.exhausted:
                break
    finally:
        sys.setrecursionlimit(old_limit)
    wall = time.perf_counter() - started

    best = None
    if engine.best is not None:
        n, q = params.n, params.q
        t0 = frozenset(_decode(w, n, q) for w in engine.best[0])
        t1 = frozenset(_decode(w, n, q) for w in engine.best[1])
        best = Bitrade(params, kind, t0, t1)
        _check_result(best)
    return SearchResult(
        best=best,
        proven_minimum=not engine.exhausted,
        nodes_explored=engine.nodes,
        wall_time=wall,
    )


def _check_result(b: Bitrade) -> None:
    report = definition_check(b.params, b.kind, b.t0, b.t1)
    if not report.passed:
        raise RuntimeError("internal error: search produced an invalid bitrade")


# ---------------------------------------------------------------------------
# local search


class _LocalState:
    __slots__ = ("regions", "counts", "parts", "violated")

    def __init__(self, regions: _Regions) -> None:
        self.regions = regions
        self.counts: tuple[dict[int, int], dict[int, int]] = ({}, {})
        self.parts: tuple[set[int], set[int]] = (set(), set())
        self.violated: set[int] = set()

    def objective(self) -> int:
        return len(self.violated)

    def clear(self) -> None:
        self.counts[0].clear()
        self.counts[1].clear()
        self.parts[0].clear()
        self.parts[1].clear()
        self.violated.clear()

    def toggle(self, w: int, side: int, add: bool) -> None:
        counts = self.counts[side]
        other = self.counts[1 - side]
        if add:
            self.parts[side].add(w)
        else:
            self.parts[side].remove(w)
        delta = 1 if add else -1
        for y in self.regions.ids(w):
            c = counts.get(y, 0) + delta
            if c:
                counts[y] = c
            else:
                counts.pop(y, None)
            if c == other.get(y, 0) and c <= 1:
                self.violated.discard(y)
            else:
                self.violated.add(y)


def _apply_move(state: _LocalState, move: tuple[str, int, int]) -> None:
    op, w, side = move
    if op == "add":
        state.toggle(w, side, True)
    elif op == "remove":
        state.toggle(w, side, False)
    else:
        state.toggle(w, side, False)
        state.toggle(w, 1 - side, True)


def _revert_move(state: _LocalState, move: tuple[str, int, int]) -> None:
    op, w, side = move
    if op == "add":
        state.toggle(w, side, False)
    elif op == "remove":
        state.toggle(w, side, True)
    else:
        state.toggle(w, 1 - side, False)
        state.toggle(w, side, True)


def _inverse_key(move: tuple[str, int, int]) -> tuple[str, int, int]:
    op, w, side = move
    if op == "add":
        return ("remove", w, side)
    if op == "remove":
        return ("add", w, side)
    return ("move", w, 1 - side)


def _candidate_moves(
    state: _LocalState, x: int, pinned: set[int]
) -> list[tuple[str, int, int]]:
    # pinned words stay put; they anchor the walk away from the empty state
    moves: list[tuple[str, int, int]] = []
    part0, part1 = state.parts
    for w in state.regions.ids(x):
        if w in part0:
            if w not in pinned:
                moves.append(("remove", w, 0))
                moves.append(("move", w, 0))
        elif w in part1:
            if w not in pinned:
                moves.append(("remove", w, 1))
                moves.append(("move", w, 1))
        else:
            moves.append(("add", w, 0))
            moves.append(("add", w, 1))
    return moves


def _local(config: SearchConfig, kind: str) -> SearchResult:
    params = config.params
    if config.start is not None:
        if config.start.params != params or config.start.kind != kind:
            raise ValueError("start bitrade does not match the search parameters")
    regions = _Regions(params, kind)
    rng = random.Random(config.seed)
    total = params.vertex_count
    budget = LOCAL_TIME_BUDGET if config.time_budget is None else config.time_budget
    deadline = time.monotonic() + budget

    state = _LocalState(regions)
    tabu: deque[tuple[str, int, int]] = deque(maxlen=TABU_LENGTH)
    pinned: set[int] = set()
    best_ids: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    moves = 0
    stagnation = 0
    restart_best = 0
    first_restart = True

    def restart() -> None:
        nonlocal stagnation, restart_best, first_restart
        state.clear()
        tabu.clear()
        pinned.clear()
        stagnation = 0
        q = params.q
        if first_restart and config.start is not None:
            first_restart = False
            for side, words in ((0, config.start.t0), (1, config.start.t1)):
                for word in words:
                    state.toggle(_encode(word, q), side, True)
            if state.parts[0]:
                pinned.add(min(state.parts[0]))
        else:
            first_restart = False
            a = rng.randrange(total)
            b = rng.randrange(total)
            while b == a:
                b = rng.randrange(total)
            state.toggle(a, 0, True)
            state.toggle(b, 1, True)
            pinned.add(a)
        restart_best = state.objective()

    started = time.perf_counter()
    restart()
    while time.monotonic() <= deadline:
        if config.move_budget is not None and moves >= config.move_budget:
            break
        if not state.violated:
            volume = len(state.parts[0])
            if volume and len(state.parts[1]) == volume:
                if best_ids is None or volume < len(best_ids[0]):
                    best_ids = (
                        tuple(sorted(state.parts[0])),
                        tuple(sorted(state.parts[1])),
                    )
            restart()
            continue
        x = rng.choice(sorted(state.violated))
        scored: list[tuple[int, tuple[str, int, int]]] = []
        for move in _candidate_moves(state, x, pinned):
            _apply_move(state, move)
            scored.append((state.objective(), move))
            _revert_move(state, move)
        if not scored:
            restart()
            continue
        open_moves = [sm for sm in scored if sm[1] not in tabu or sm[0] < restart_best]
        if not open_moves:
            open_moves = scored
        low = min(score for score, _ in open_moves)
        chosen = rng.choice([mv for score, mv in open_moves if score == low])
        _apply_move(state, chosen)
        tabu.append(_inverse_key(chosen))
        moves += 1
        if state.objective() < restart_best:
            restart_best = state.objective()
            stagnation = 0
        else:
            stagnation += 1
            if stagnation > STAGNATION_LIMIT:
                restart()
    wall = time.perf_counter() - started

    best = None
    if best_ids is not None:
        n, q = params.n, params.q
        t0 = frozenset(_decode(w, n, q) for w in best_ids[0])
        t1 = frozenset(_decode(w, n, q) for w in best_ids[1])
        best = Bitrade(params, kind, t0, t1)
        _check_result(best)
    return SearchResult(
        best=best,
        proven_minimum=False,
        nodes_explored=moves,
        wall_time=wall,
    )
