"""Ballots, outcomes, profiles, and the base-3 profile codec.

A profile assigns one ballot (For / Against / Indifferent) to each of n
voters, ids 0..n-1.  Profiles are indexed by an integer code in [0, 3**n):
voter v contributes digit(ballot) * 3**v, with Indifferent=0, For=1,
Against=2 and voter 0 as the least significant digit.  These digit values
and the little-endian voter order are fixed constants of every file format
in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator

import numpy as np


class ContractError(ValueError):
    """A documented precondition of an operation was violated."""


class SizeLimitError(ValueError):
    """An enumeration was requested beyond its configured budget."""


class Ballot(IntEnum):
    """One voter's stance.  The int value is the codec digit."""

    INDIFFERENT = 0
    FOR = 1
    AGAINST = 2


class Outcome(IntEnum):
    """Election result.  Same three-way carrier as Ballot, distinct role."""

    TIE = 0
    FOR_WINS = 1
    AGAINST_WINS = 2


OUTCOME_NAMES = {Outcome.TIE: "Tie", Outcome.FOR_WINS: "ForWins", Outcome.AGAINST_WINS: "AgainstWins"}
OUTCOME_BY_NAME = {name: o for o, name in OUTCOME_NAMES.items()}

_BALLOT_CHARS = {Ballot.FOR: "+", Ballot.AGAINST: "-", Ballot.INDIFFERENT: "0"}
_CHAR_BALLOTS = {c: b for b, c in _BALLOT_CHARS.items()}

# flip exchanges For and Against in either carrier; the third value is fixed.
_FLIP_DIGIT = (0, 2, 1)


@dataclass(frozen=True)
class Profile:
    """Immutable total assignment of a ballot to each of n voters."""

    ballots: tuple[Ballot, ...]

    @property
    def n(self) -> int:
        return len(self.ballots)

    def __len__(self) -> int:
        return len(self.ballots)

    def __iter__(self) -> Iterator[Ballot]:
        return iter(self.ballots)

    def __getitem__(self, voter: int) -> Ballot:
        if not 0 <= voter < len(self.ballots):
            raise IndexError(f"voter id {voter} out of range for {len(self.ballots)} voters")
        return self.ballots[voter]

    def digits(self) -> np.ndarray:
        """Ballot digits as an int8 array, index = voter id."""
        return np.fromiter((int(b) for b in self.ballots), dtype=np.int8, count=len(self.ballots))

    def literal(self) -> str:
        """Text form over {'+','-','0'}, voter 0 leftmost."""
        return "".join(_BALLOT_CHARS[b] for b in self.ballots)

    def __str__(self) -> str:
        return self.literal()

    def __repr__(self) -> str:
        return f"Profile({self.literal()!r})"


def profile(ballots: Iterable[Ballot | int]) -> Profile:
    """Build a Profile from ballots or raw digits."""
    return Profile(tuple(Ballot(b) for b in ballots))


def parse_profile(text: str) -> Profile:
    """Parse a '+/-/0' literal, voter 0 leftmost."""
    try:
        return Profile(tuple(_CHAR_BALLOTS[c] for c in text))
    except KeyError as exc:
        raise ValueError(f"bad ballot character {exc.args[0]!r} in profile literal {text!r}") from None


def encode_profile(p: Profile) -> int:
    """Profile -> code in [0, 3**n), voter 0 least significant."""
    code = 0
    for v in range(p.n - 1, -1, -1):
        code = code * 3 + int(p.ballots[v])
    return code


def decode_profile(n: int, code: int) -> Profile:
    """Inverse of encode_profile.  Raises ValueError for out-of-range codes."""
    if n < 0:
        raise ValueError(f"voter count must be non-negative, got {n}")
    if not 0 <= code < 3**n:
        raise ValueError(f"profile code {code} out of range [0, 3**{n})")
    ballots = []
    for _ in range(n):
        code, d = divmod(code, 3)
        ballots.append(Ballot(d))
    return Profile(tuple(ballots))


def all_profiles(n: int) -> Iterator[Profile]:
    """All 3**n profiles in increasing code order, no duplicates."""
    for code in range(3**n):
        yield decode_profile(n, code)
