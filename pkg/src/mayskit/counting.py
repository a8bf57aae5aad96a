"""Ballot predicates and vote tallies, over the full voter set or a sub-list."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .core import Ballot, Profile

BallotPredicate = Callable[[Ballot], bool]


def is_for(b: Ballot) -> bool:
    return b is Ballot.FOR


def is_against(b: Ballot) -> bool:
    return b is Ballot.AGAINST


def is_indifferent(b: Ballot) -> bool:
    return b is Ballot.INDIFFERENT


@dataclass(frozen=True)
class Tally:
    """For / Against / Indifferent counts; components sum to n."""

    a: int  # For
    b: int  # Against
    i: int  # Indifferent

    @property
    def n(self) -> int:
        return self.a + self.b + self.i


def count_helper(f: BallotPredicate, p: Profile, voters: Sequence[int]) -> int:
    """How many positions in `voters` (with multiplicity) satisfy f.

    Ids may repeat; each id must be < p.n.
    """
    total = 0
    for v in voters:
        total += bool(f(p[v]))
    return total


def count(f: BallotPredicate, p: Profile) -> int:
    """count_helper over the full voter set 0..n-1."""
    return sum(bool(f(b)) for b in p.ballots)


def tally(p: Profile) -> Tally:
    a = count(is_for, p)
    b = count(is_against, p)
    return Tally(a=a, b=b, i=p.n - a - b)
