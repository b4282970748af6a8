"""Shared test utilities: corruptions, random pairs, and check bundles."""

import random

from bitrades import (
    Bitrade,
    HammingParams,
    SPHERICAL,
    SignedFunction,
    bitrade_delsarte_order,
    definition_check,
    delsarte_face_check,
    dist2_pair_check,
    eigen_check,
    min_distance_check,
)

CORRUPTIONS = ("delete", "move", "replace")


def random_word(params: HammingParams, rng: random.Random):
    return tuple(rng.randrange(params.q) for _ in range(params.n))


def corrupt(bitrade: Bitrade, rng: random.Random) -> tuple[str, Bitrade]:
    """Apply one random structural edit and rebuild the pair.

    The result is still a well-formed pair (disjoint parts, valid words)
    but should no longer satisfy the counting definition.
    """
    op = rng.choice(CORRUPTIONS)
    parts = [set(bitrade.t0), set(bitrade.t1)]
    side = rng.randrange(2)
    victim = rng.choice(sorted(parts[side]))
    if op == "delete":
        parts[side].remove(victim)
    elif op == "move":
        parts[side].remove(victim)
        parts[1 - side].add(victim)
    else:
        taken = parts[0] | parts[1]
        fresh = random_word(bitrade.params, rng)
        while fresh in taken:
            fresh = random_word(bitrade.params, rng)
        parts[side].remove(victim)
        parts[side].add(fresh)
    return op, Bitrade(
        bitrade.params, bitrade.kind, frozenset(parts[0]), frozenset(parts[1])
    )


def run_all_checks(bitrade: Bitrade) -> dict:
    """The four verification checks, keyed by name."""
    f = SignedFunction.from_bitrade(bitrade)
    eigenvalue = 0 if bitrade.kind == SPHERICAL else -1
    return {
        "definition": definition_check(
            bitrade.params, bitrade.kind, bitrade.t0, bitrade.t1
        ),
        "eigen": eigen_check(f, eigenvalue),
        "dist2": dist2_pair_check(bitrade.params, bitrade.kind, bitrade.t0, bitrade.t1),
        "delsarte": delsarte_face_check(f, bitrade_delsarte_order(bitrade)),
    }


def characterization_votes(params, kind, t0, t1) -> tuple[bool, bool, bool]:
    """Verdicts of the three equivalent characterizations on one pair.

    Returns (counting definition, eigenfunction + minimum distances,
    distance profile).  On any disjoint pair of word sets the three
    should agree.
    """
    eigenvalue = 0 if kind == SPHERICAL else -1
    values = {w: 1 for w in t0}
    values.update({w: -1 for w in t1})
    f = SignedFunction(params, values)
    by_definition = definition_check(params, kind, t0, t1).passed
    by_eigen = (
        eigen_check(f, eigenvalue).passed
        and min_distance_check(params, t0, t1).passed
    )
    by_profile = dist2_pair_check(params, kind, t0, t1).passed
    return by_definition, by_eigen, by_profile


def random_pair(params: HammingParams, rng: random.Random, max_words: int = 6):
    """Two disjoint random word sets with up to max_words words each."""
    total = rng.randrange(0, 2 * max_words + 1)
    seen: set = set()
    while len(seen) < total:
        seen.add(random_word(params, rng))
    pool = sorted(seen)
    rng.shuffle(pool)
    cut = rng.randrange(len(pool) + 1) if pool else 0
    return frozenset(pool[:cut]), frozenset(pool[cut:])


def translate_parts(params: HammingParams, t0, t1, shift):
    """Shift both parts by a fixed vector (a graph automorphism)."""

    def apply(part):
        return frozenset(
            tuple((a + s) % params.q for a, s in zip(w, shift)) for w in part
        )

    return apply(t0), apply(t1)
