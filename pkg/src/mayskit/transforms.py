"""Profile transformations: flip, swap, update, and their list-driven folds.

The fold orientation of `swaps` and `upgrade_vote_list` is normative: the
LAST list element is applied to the input profile first and the head is
applied last.  Certificate replay depends on this order being deterministic.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

from .core import Ballot, ContractError, Outcome, Profile, _FLIP_DIGIT
from .counting import count, is_for

SwapPair = tuple[int, int]

_C = TypeVar("_C", Ballot, Outcome)


def flip(c: _C) -> _C:
    """Exchange For and Against (or ForWins and AgainstWins); the neutral value is fixed."""
    return type(c)(_FLIP_DIGIT[int(c)])


def flip_vote(p: Profile) -> Profile:
    """Pointwise flip of every ballot."""
    return Profile(tuple(flip(b) for b in p.ballots))


def _check_voter(p: Profile, v: int) -> None:
    if not 0 <= v < p.n:
        raise IndexError(f"voter id {v} out of range for {p.n} voters")


def swap(v1: int, v2: int, p: Profile) -> Profile:
    """Exchange the ballots of v1 and v2; all other positions unchanged."""
    _check_voter(p, v1)
    _check_voter(p, v2)
    ballots = list(p.ballots)
    ballots[v1], ballots[v2] = ballots[v2], ballots[v1]
    return Profile(tuple(ballots))


def update(v: int, c: Ballot, p: Profile) -> Profile:
    """Set voter v's ballot to c; all other positions unchanged."""
    _check_voter(p, v)
    ballots = list(p.ballots)
    ballots[v] = Ballot(c)
    return Profile(tuple(ballots))


def swaps(p: Profile, pairs: Sequence[SwapPair]) -> Profile:
    """Apply a list of swaps, last pair first, head pair last."""
    for v1, v2 in reversed(pairs):
        p = swap(v1, v2, p)
    return p


def upgrade_vote_list(p: Profile, voters: Sequence[int]) -> Profile:
    """Set every listed voter's ballot to For; tail processed first, head last."""
    for v in reversed(voters):
        p = update(v, Ballot.FOR, p)
    return p


def left_true_right_false(p: Profile, q: Profile, voters: Sequence[int]) -> list[int]:
    """Sub-list of `voters` (scan order preserved) where p has For and q has Against."""
    return [v for v in voters if p[v] is Ballot.FOR and q[v] is Ballot.AGAINST]


def left_false_right_true(p: Profile, q: Profile, voters: Sequence[int]) -> list[int]:
    """Sub-list of `voters` (scan order preserved) where p has Against and q has For."""
    return [v for v in voters if p[v] is Ballot.AGAINST and q[v] is Ballot.FOR]


def build_swap_list(p: Profile, q: Profile) -> list[SwapPair]:
    """A swap list l with swaps(q, l) = p.

    Requires the two profiles to agree on which voters are Indifferent and
    to contain the same number of For ballots; rejects anything else rather
    than guessing.  The list pairs, in voter-scan order, each position that
    must change For->Against with one that must change Against->For.
    """
    if p.n != q.n:
        raise ContractError(f"profiles differ in voter count: {p.n} vs {q.n}")
    for v in range(p.n):
        if (p[v] is Ballot.INDIFFERENT) != (q[v] is Ballot.INDIFFERENT):
            raise ContractError(f"indifference sets differ at voter {v}")
    a_p, a_q = count(is_for, p), count(is_for, q)
    if a_p != a_q:
        raise ContractError(f"For-counts differ: {a_p} vs {a_q}")
    everyone = range(p.n)
    l1 = left_true_right_false(p, q, everyone)
    l2 = left_false_right_true(p, q, everyone)
    # Equal lengths are forced by the preconditions, so zip drops nothing.
    return list(zip(l1, l2, strict=True))
