"""Shared generators for the test suite.

Randomized tests draw from seeded numpy generators so every run sees the
same cases; hypothesis strategies cover the same ground with shrinking.
"""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from mayskit import Ballot, Profile

BALLOTS = (Ballot.INDIFFERENT, Ballot.FOR, Ballot.AGAINST)


def random_profile(rng: np.random.Generator, n: int) -> Profile:
    return Profile(tuple(BALLOTS[d] for d in rng.integers(0, 3, size=n)))


def random_voter_list(rng: np.random.Generator, n: int, *, unique: bool, max_len: int | None = None) -> list[int]:
    if n == 0:
        return []
    cap = n if unique else (max_len or n + 2)
    k = int(rng.integers(0, cap + 1))
    if unique:
        return [int(v) for v in rng.permutation(n)[:k]]
    return [int(v) for v in rng.integers(0, n, size=k)]


def permuted_partner(rng: np.random.Generator, p: Profile) -> Profile:
    """A profile with the same indifference set and the same For-count as p,
    built by permuting p's non-Indifferent ballots among their positions."""
    positions = [v for v in range(p.n) if p[v] is not Ballot.INDIFFERENT]
    shuffled = rng.permutation(len(positions))
    ballots = list(p)
    for slot, src in zip(positions, shuffled):
        ballots[slot] = p[positions[src]]
    return Profile(tuple(ballots))


ballot_st = st.sampled_from(BALLOTS)


def profile_st(min_n: int = 0, max_n: int = 8):
    return st.builds(lambda bs: Profile(tuple(bs)), st.lists(ballot_st, min_size=min_n, max_size=max_n))
