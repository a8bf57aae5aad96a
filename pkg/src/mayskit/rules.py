"""Social choice functions as evaluable objects.

A Rule is either the built-in majority rule or an explicit outcome table of
length 3**n indexed by profile code.  Tables are total and single-valued by
construction, so every rule is decisive for free.

Rule file format (JSON): {"n": N, "table": [digits]} with 0=Tie, 1=ForWins,
2=AgainstWins, index = profile code; the built-in rule serializes as
{"n": N, "majority": true}.
"""

from __future__ import annotations

import json
from typing import Iterable

import numpy as np

from . import budgets
from ._maps import majority_vector
from .core import ContractError, Outcome, Profile, SizeLimitError, encode_profile
from .counting import tally


def majority_election(p: Profile) -> Outcome:
    """ForWins if For-count exceeds Against-count, AgainstWins if the reverse, else Tie."""
    t = tally(p)
    if t.a > t.b:
        return Outcome.FOR_WINS
    if t.b > t.a:
        return Outcome.AGAINST_WINS
    return Outcome.TIE


class Rule:
    """An n-voter social choice function: built-in majority or an outcome table."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table: np.ndarray | None):
        self.n = n
        self.table = table

    @classmethod
    def majority(cls, n: int) -> "Rule":
        return cls(n, None)

    @classmethod
    def from_table(cls, n: int, outcomes: Iterable[Outcome | int]) -> "Rule":
        table = np.asarray([int(o) for o in outcomes], dtype=np.int8)
        if table.shape != (3**n,):
            raise ValueError(f"table must have exactly 3**{n} = {3**n} entries, got {table.size}")
        if table.size and (table.min() < 0 or table.max() > 2):
            raise ValueError("table entries must be outcome digits 0, 1, or 2")
        table.flags.writeable = False
        return cls(n, table)

    @property
    def is_majority(self) -> bool:
        return self.table is None

    def evaluate(self, p: Profile) -> Outcome:
        if p.n != self.n:
            raise ContractError(f"profile has {p.n} voters but rule expects {self.n}")
        if self.table is None:
            return majority_election(p)
        return Outcome(int(self.table[encode_profile(p)]))

    def __repr__(self) -> str:
        body = "majority" if self.table is None else f"table[{self.table.size}]"
        return f"Rule(n={self.n}, {body})"


def evaluate(r: Rule, p: Profile) -> Outcome:
    return r.evaluate(p)


def outcome_vector(r: Rule) -> np.ndarray:
    """Outcome digits for every profile code, as a read-only int8 array."""
    if r.table is not None:
        return r.table
    return majority_vector(r.n)


def _check_enumerable(n: int) -> None:
    limit = budgets.max_check_n()
    if n > limit:
        raise SizeLimitError(f"profile space 3**{n} exceeds the check budget (max n = {limit})")


def majority_as_table(n: int) -> Rule:
    """The majority rule materialized as an explicit table."""
    _check_enumerable(n)
    return Rule(n, majority_vector(n))


def rules_equal(r1: Rule, r2: Rule) -> bool:
    """Pointwise agreement over the full profile space."""
    if r1.n != r2.n:
        raise ContractError(f"rules have different voter counts: {r1.n} vs {r2.n}")
    _check_enumerable(r1.n)
    return bool(np.array_equal(outcome_vector(r1), outcome_vector(r2)))


def rule_to_dict(r: Rule) -> dict:
    if r.table is None:
        return {"n": r.n, "majority": True}
    return {"n": r.n, "table": [int(x) for x in r.table]}


def rule_from_dict(data: dict) -> Rule:
    if not isinstance(data, dict) or "n" not in data:
        raise ValueError("rule file must be a JSON object with an 'n' field")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"'n' must be a non-negative integer, got {n!r}")
    if data.get("majority"):
        return Rule.majority(n)
    if "table" not in data:
        raise ValueError("rule file needs either 'majority': true or a 'table' array")
    table = data["table"]
    if not isinstance(table, list):
        raise ValueError("'table' must be an array of outcome digits")
    return Rule.from_table(n, table)


def save_rule(r: Rule, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(rule_to_dict(r), fh)
        fh.write("\n")


def load_rule(path: str) -> Rule:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"rule file {path} is not valid JSON: {exc}") from None
    return rule_from_dict(data)
