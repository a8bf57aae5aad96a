"""Decision procedures for the three fairness axioms, with concrete witnesses.

Each checker sweeps the full profile space and reports either a pass or the
first counterexample in a normative order: profile-code order, then voter
order, then clause order.  Reports are therefore reproducible and diffable.

Sampling (for n too large to enumerate) exists only behind the explicit
`sample` argument and is marked in the report; a sampled pass is evidence,
not proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from . import budgets
from ._maps import FLIP_DIGITS, digit_matrix, flip_codes, swap_codes, update_codes
from .core import Ballot, Outcome, Profile, SizeLimitError, decode_profile
from .rules import Rule, outcome_vector
from .transforms import flip, flip_vote, swap, update


class Axiom(Enum):
    ANONYMITY = "Anonymity"
    NEUTRALITY = "Neutrality"
    MONOTONICITY = "Monotonicity"


@dataclass(frozen=True)
class Witness:
    """Parameters that replay a violated axiom equation.

    Anonymity carries (profile, v1, v2); Neutrality carries the profile;
    Monotonicity carries (profile, voter, clause) with clause 1 = Against to
    Indifferent, 2 = Against to For, 3 = Indifferent to For.
    """

    profile: Profile
    v1: Optional[int] = None
    v2: Optional[int] = None
    voter: Optional[int] = None
    clause: Optional[int] = None

    def to_dict(self) -> dict:
        d: dict = {"profile": self.profile.literal()}
        for field in ("v1", "v2", "voter", "clause"):
            value = getattr(self, field)
            if value is not None:
                d[field] = value
        return d


@dataclass(frozen=True)
class AxiomReport:
    axiom: Axiom
    passed: bool
    witness: Optional[Witness] = None
    method: str = "exhaustive"

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        d: dict = {"axiom": self.axiom.value, "status": self.status, "method": self.method}
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        return d


def _exhaustive_guard(n: int, sample: Optional[int]) -> bool:
    """True if the check should enumerate; False if it should sample."""
    if n <= budgets.max_check_n():
        return True
    if sample is None:
        raise SizeLimitError(
            f"3**{n} profiles exceed the check budget (max n = {budgets.max_check_n()}); "
            "pass a sample count to check a random subset instead"
        )
    return False


def _random_profile(rng: np.random.Generator, n: int) -> Profile:
    return Profile(tuple(Ballot(int(d)) for d in rng.integers(0, 3, size=n)))


def check_anonymous(r: Rule, *, sample: Optional[int] = None, seed: int = 0) -> AxiomReport:
    """Outcome invariant under swapping any two voters' ballots."""
    n = r.n
    if _exhaustive_guard(n, sample):
        out = outcome_vector(r)
        best = None
        pair_idx = 0
        for v1 in range(n):
            for v2 in range(v1 + 1, n):
                mismatch = out != out[swap_codes(n, v1, v2)]
                if mismatch.any():
                    cand = (int(np.argmax(mismatch)), pair_idx, v1, v2)
                    if best is None or cand[:2] < best[:2]:
                        best = cand
                pair_idx += 1
        if best is None:
            return AxiomReport(Axiom.ANONYMITY, True)
        code, _, v1, v2 = best
        return AxiomReport(Axiom.ANONYMITY, False, Witness(decode_profile(n, code), v1=v1, v2=v2))
    rng = np.random.default_rng(seed)
    if n >= 2:
        for _ in range(sample):
            p = _random_profile(rng, n)
            v1, v2 = sorted(int(v) for v in rng.choice(n, size=2, replace=False))
            if r.evaluate(p) != r.evaluate(swap(v1, v2, p)):
                return AxiomReport(Axiom.ANONYMITY, False, Witness(p, v1=v1, v2=v2), method="sampled")
    return AxiomReport(Axiom.ANONYMITY, True, method="sampled")


def check_neutral(r: Rule, *, sample: Optional[int] = None, seed: int = 0) -> AxiomReport:
    """Flipping every ballot flips the outcome (Tie is flip-fixed)."""
    n = r.n
    if _exhaustive_guard(n, sample):
        out = outcome_vector(r)
        mismatch = out != FLIP_DIGITS[out[flip_codes(n)]]
        if not mismatch.any():
            return AxiomReport(Axiom.NEUTRALITY, True)
        return AxiomReport(Axiom.NEUTRALITY, False, Witness(decode_profile(n, int(np.argmax(mismatch)))))
    rng = np.random.default_rng(seed)
    for _ in range(sample):
        p = _random_profile(rng, n)
        if r.evaluate(p) != flip(r.evaluate(flip_vote(p))):
            return AxiomReport(Axiom.NEUTRALITY, False, Witness(p), method="sampled")
    return AxiomReport(Axiom.NEUTRALITY, True, method="sampled")


def check_monotone(r: Rule, *, sample: Optional[int] = None, seed: int = 0) -> AxiomReport:
    """Whenever the outcome is ForWins or Tie, improving one ballot toward For yields ForWins."""
    n = r.n
    if _exhaustive_guard(n, sample):
        out = outcome_vector(r)
        antecedent = out != 2
        digits = digit_matrix(n)
        best = None
        for v in range(n):
            dv = digits[:, v]
            to_indifferent = out[update_codes(n, v, 0)] != 1
            to_for = out[update_codes(n, v, 1)] != 1
            for clause, mask in (
                (1, antecedent & (dv == 2) & to_indifferent),
                (2, antecedent & (dv == 2) & to_for),
                (3, antecedent & (dv == 0) & to_for),
            ):
                if mask.any():
                    cand = (int(np.argmax(mask)), v, clause)
                    if best is None or cand < best:
                        best = cand
        if best is None:
            return AxiomReport(Axiom.MONOTONICITY, True)
        code, v, clause = best
        return AxiomReport(Axiom.MONOTONICITY, False, Witness(decode_profile(n, code), voter=v, clause=clause))
    rng = np.random.default_rng(seed)
    for _ in range(sample):
        p = _random_profile(rng, n)
        if r.evaluate(p) == Outcome.AGAINST_WINS:
            continue
        for v in range(n):
            for clause in _clauses_at(p, v):
                w = Witness(p, voter=v, clause=clause)
                if witness_violates(r, Axiom.MONOTONICITY, w):
                    return AxiomReport(Axiom.MONOTONICITY, False, w, method="sampled")
    return AxiomReport(Axiom.MONOTONICITY, True, method="sampled")


def _clauses_at(p: Profile, v: int) -> tuple[int, ...]:
    if p[v] is Ballot.AGAINST:
        return (1, 2)
    if p[v] is Ballot.INDIFFERENT:
        return (3,)
    return ()


def witness_violates(r: Rule, axiom: Axiom, w: Witness) -> bool:
    """Replay a witness through the rule and confirm the violated equation."""
    p = w.profile
    if axiom is Axiom.ANONYMITY:
        return r.evaluate(p) != r.evaluate(swap(w.v1, w.v2, p))
    if axiom is Axiom.NEUTRALITY:
        return r.evaluate(p) != flip(r.evaluate(flip_vote(p)))
    if r.evaluate(p) == Outcome.AGAINST_WINS:
        return False  # antecedent not met: no monotonicity obligation at p
    v, clause = w.voter, w.clause
    if clause == 1:
        return p[v] is Ballot.AGAINST and r.evaluate(update(v, Ballot.INDIFFERENT, p)) != Outcome.FOR_WINS
    if clause == 2:
        return p[v] is Ballot.AGAINST and r.evaluate(update(v, Ballot.FOR, p)) != Outcome.FOR_WINS
    if clause == 3:
        return p[v] is Ballot.INDIFFERENT and r.evaluate(update(v, Ballot.FOR, p)) != Outcome.FOR_WINS
    raise ValueError(f"monotonicity clause must be 1, 2, or 3, got {clause}")


def check_all(r: Rule, *, sample: Optional[int] = None, seed: int = 0) -> tuple[AxiomReport, AxiomReport, AxiomReport]:
    return (
        check_anonymous(r, sample=sample, seed=seed),
        check_neutral(r, sample=sample, seed=seed),
        check_monotone(r, sample=sample, seed=seed),
    )
