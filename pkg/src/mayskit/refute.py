"""Certificate-producing refutation of rules that disagree with majority.

Any rule whose table differs from simple majority somewhere can be refuted
constructively: starting from a disagreement profile, a short chain of
flip / upgrade / swap transitions is built in which each transition carries
the outcome constraint that one axiom (neutrality, monotonicity, anonymity
respectively) forces across it.  The chain returns to the original profile
claiming an outcome that contradicts the rule's actual value there, so when
the rule is evaluated along the chain at least one step's implication must
fail; the first failing step localizes a concrete axiom violation.

Certificates are self-contained: every step materializes both profiles, so
an independent checker needs only rule evaluation and the three transform
definitions to re-validate one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np

from .core import (
    Ballot,
    ContractError,
    OUTCOME_BY_NAME,
    OUTCOME_NAMES,
    Outcome,
    Profile,
    decode_profile,
    parse_profile,
)
from .counting import tally
from .properties import Axiom, Witness
from .rules import Rule, _check_enumerable, majority_election, outcome_vector
from ._maps import majority_vector
from .transforms import build_swap_list, flip, flip_vote, swap, update


class CertificateError(ValueError):
    """A certificate is malformed: broken chain, transform mismatch, bad
    constraint algebra, or inapplicable to the rule under validation.
    Distinct from Violation, which is a finding about the rule itself."""


_BALLOT_CHAR = {Ballot.FOR: "+", Ballot.AGAINST: "-", Ballot.INDIFFERENT: "0"}
_CHAR_BALLOT = {c: b for b, c in _BALLOT_CHAR.items()}

_WEAK_LABEL = "ForWins|Tie"


@dataclass(frozen=True)
class Constraint:
    """An outcome constraint: either a single exact outcome or the weak
    form "ForWins or Tie" used on intermediate upgrade steps."""

    outcomes: frozenset

    @staticmethod
    def exactly(o: Outcome) -> "Constraint":
        return Constraint(frozenset((Outcome(o),)))

    @staticmethod
    def for_or_tie() -> "Constraint":
        return Constraint(frozenset((Outcome.FOR_WINS, Outcome.TIE)))

    @property
    def is_exact(self) -> bool:
        return len(self.outcomes) == 1

    @property
    def outcome(self) -> Outcome:
        if not self.is_exact:
            raise ValueError("weak constraint has no single outcome")
        return next(iter(self.outcomes))

    def satisfied(self, o: Outcome) -> bool:
        return o in self.outcomes

    def implies(self, other: "Constraint") -> bool:
        return self.outcomes <= other.outcomes

    def label(self) -> str:
        if self.is_exact:
            return OUTCOME_NAMES[self.outcome]
        return _WEAK_LABEL

    @staticmethod
    def parse(text: str) -> "Constraint":
        parts = text.split("|")
        try:
            outcomes = frozenset(OUTCOME_BY_NAME[name] for name in parts)
        except KeyError as exc:
            raise ValueError(f"unknown outcome name in constraint {text!r}") from exc
        c = Constraint(outcomes)
        if not (c.is_exact or c == Constraint.for_or_tie()):
            raise ValueError(f"unsupported constraint {text!r}")
        return c


class StepKind(Enum):
    FLIP = "flip"
    UPGRADE = "upgrade"
    SWAP = "swap"


@dataclass(frozen=True)
class TraceStep:
    """One chain transition.  post_profile is exactly the named transform of
    pre_profile, and forced_pre => forced_post is an instance of the step's
    axiom: flip of neutrality, upgrade of monotonicity (clause 2 when the
    raised voter was Against, clause 3 from Indifferent), swap of anonymity."""

    kind: StepKind
    pre_profile: Profile
    post_profile: Profile
    forced_pre: Constraint
    forced_post: Constraint
    voter: int | None = None
    from_ballot: Ballot | None = None
    v1: int | None = None
    v2: int | None = None

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind.value}
        if self.kind is StepKind.UPGRADE:
            d["voter"] = self.voter
            d["from"] = _BALLOT_CHAR[self.from_ballot]
        elif self.kind is StepKind.SWAP:
            d["v1"] = self.v1
            d["v2"] = self.v2
        d["pre"] = self.pre_profile.literal()
        d["post"] = self.post_profile.literal()
        d["forced_pre"] = self.forced_pre.label()
        d["forced_post"] = self.forced_post.label()
        return d

    @staticmethod
    def from_dict(d: dict) -> "TraceStep":
        try:
            kind = StepKind(d["kind"])
            pre = parse_profile(d["pre"])
            post = parse_profile(d["post"])
            forced_pre = Constraint.parse(d["forced_pre"])
            forced_post = Constraint.parse(d["forced_post"])
            voter = from_ballot = v1 = v2 = None
            if kind is StepKind.UPGRADE:
                voter = int(d["voter"])
                from_ballot = _CHAR_BALLOT[d["from"]]
            elif kind is StepKind.SWAP:
                v1 = int(d["v1"])
                v2 = int(d["v2"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed trace step: {exc}") from exc
        return TraceStep(kind, pre, post, forced_pre, forced_post, voter, from_ballot, v1, v2)


@dataclass(frozen=True)
class Certificate:
    """A refutation chain for one rule: it starts and ends at `original`
    and its endpoint claims an outcome that contradicts the rule there."""

    n: int
    case_id: int
    original: Profile
    final_claim: Outcome
    steps: tuple[TraceStep, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "case": self.case_id,
            "original": self.original.literal(),
            "final_claim": OUTCOME_NAMES[self.final_claim],
            "steps": [s.to_dict() for s in self.steps],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @staticmethod
    def from_dict(d: dict) -> "Certificate":
        try:
            n = int(d["n"])
            case_id = int(d["case"])
            original = parse_profile(d["original"])
            final_claim = OUTCOME_BY_NAME[d["final_claim"]]
            steps = tuple(TraceStep.from_dict(s) for s in d["steps"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed certificate: {exc}") from exc
        return Certificate(n, case_id, original, final_claim, steps)

    @staticmethod
    def from_json(text: str) -> "Certificate":
        return Certificate.from_dict(json.loads(text))


def save_certificate(c: Certificate, path: str | Path) -> None:
    Path(path).write_text(c.to_json(), encoding="utf-8")


def load_certificate(path: str | Path) -> Certificate:
    return Certificate.from_json(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class Violation:
    """A localized axiom failure; the witness replays under the matching
    axiom checker's equations."""

    axiom: Axiom
    witness: Witness
    step: int | None = None

    def to_dict(self) -> dict:
        d: dict = {"verdict": "Violation", "axiom": self.axiom.value}
        if self.step is not None:
            d["step"] = self.step
        d["profile"] = self.witness.profile.literal()
        if self.axiom is Axiom.ANONYMITY:
            d["v1"] = self.witness.v1
            d["v2"] = self.witness.v2
        elif self.axiom is Axiom.MONOTONICITY:
            d["voter"] = self.witness.voter
            d["clause"] = self.witness.clause
        return d

    def describe(self) -> str:
        w = self.witness
        lit = repr(w.profile.literal())
        if self.axiom is Axiom.ANONYMITY:
            detail = f"Anonymity at profile {lit}, voters {w.v1} and {w.v2}"
        elif self.axiom is Axiom.NEUTRALITY:
            detail = f"Neutrality at profile {lit}"
        else:
            detail = f"Monotonicity at profile {lit}, voter {w.voter}, clause {w.clause}"
        if self.step is not None:
            detail += f" (step {self.step + 1})"
        return "Violation: " + detail


@dataclass(frozen=True)
class Verdict:
    """Either Equivalent (the rule is majority) or a Violation."""

    violation: Violation | None = None

    @property
    def equivalent(self) -> bool:
        return self.violation is None

    def to_dict(self) -> dict:
        if self.violation is None:
            return {"verdict": "Equivalent"}
        return self.violation.to_dict()

    def describe(self) -> str:
        if self.violation is None:
            return "Equivalent"
        return self.violation.describe()


def find_disagreement(r: Rule) -> Profile | None:
    """The lowest-code profile where the rule differs from majority, if any."""
    _check_enumerable(r.n)
    out = outcome_vector(r)
    maj = majority_vector(r.n)
    mismatched = np.nonzero(out != maj)[0]
    if mismatched.size == 0:
        return None
    return decode_profile(r.n, int(mismatched[0]))


def _classify(observed: Outcome, a: int, b: int) -> tuple[int, int, bool]:
    """Map a disagreement to (raw row 1..6, reduced case 1..3, flipped?).

    Rows 3, 4, 6 reduce to cases 1, 2, 3 by moving to the flipped profile."""
    if b < a:  # majority is ForWins; observed is AgainstWins or Tie
        return (1, 1, False) if observed is Outcome.AGAINST_WINS else (2, 2, False)
    if a < b:  # majority is AgainstWins; observed is ForWins or Tie
        return (3, 1, True) if observed is Outcome.FOR_WINS else (4, 2, True)
    # majority is Tie; observed is AgainstWins or ForWins
    return (5, 3, False) if observed is Outcome.AGAINST_WINS else (6, 3, True)


def reduce_case(r: Rule, p: Profile) -> tuple[int, Profile]:
    """Reduce the six disagreement rows to three cases, flipping the profile
    for rows 3, 4 and 6.  Requires an actual disagreement at p."""
    observed = r.evaluate(p)
    if observed == majority_election(p):
        raise ContractError(f"rule agrees with majority at profile {p.literal()!r}")
    t = tally(p)
    _, case_id, flipped = _classify(observed, t.a, t.b)
    return case_id, flip_vote(p) if flipped else p


def _flip_step(pre: Profile, pre_constraint: Constraint) -> TraceStep:
    post_constraint = Constraint.exactly(flip(pre_constraint.outcome))
    return TraceStep(StepKind.FLIP, pre, flip_vote(pre), pre_constraint, post_constraint)


def generate_certificate(r: Rule, p: Profile) -> Certificate:
    """Build the refutation chain for a disagreement at p.

    Chain shape: an optional reduction flip to the working profile w; the
    construction flip w -> p1; one upgrade per voter among the first (a - b)
    Against-voters of p1 in ascending voter order (a, b the tally of w),
    intermediate upgrades forcing "ForWins or Tie" and the last forcing
    ForWins exactly; one swap per pair of build_swap_list(w, p2) in replay
    order; and, when the reduction flipped, a closing flip back to p so the
    chain ends where it began."""
    observed = r.evaluate(p)
    if observed == majority_election(p):
        raise ContractError(f"rule agrees with majority at profile {p.literal()!r}")
    t = tally(p)
    _, case_id, flipped = _classify(observed, t.a, t.b)

    steps: list[TraceStep] = []
    constraint = Constraint.exactly(observed)
    w = p
    if flipped:
        steps.append(_flip_step(w, constraint))
        w = steps[-1].post_profile
        constraint = steps[-1].forced_post

    # construction flip: w -> p1, exchanging the For and Against counts
    steps.append(_flip_step(w, constraint))
    cur = steps[-1].post_profile
    constraint = steps[-1].forced_post

    wt = tally(w)
    upgrades = wt.a - wt.b  # > 0 in cases 1 and 2, zero in case 3
    if upgrades:
        targets = [v for v in range(p.n) if cur[v] is Ballot.AGAINST][:upgrades]
        weak = Constraint.for_or_tie()
        for i, v in enumerate(targets):
            post = update(v, Ballot.FOR, cur)
            post_c = Constraint.exactly(Outcome.FOR_WINS) if i == upgrades - 1 else weak
            steps.append(
                TraceStep(StepKind.UPGRADE, cur, post, weak, post_c, voter=v, from_ballot=Ballot.AGAINST)
            )
            cur = post
            constraint = post_c

    # p2 = cur has the tally of w and the same indifference set, so a swap
    # list back to w exists; replay applies the list tail-first
    pairs = build_swap_list(w, cur)
    for v1, v2 in reversed(pairs):
        post = swap(v1, v2, cur)
        steps.append(TraceStep(StepKind.SWAP, cur, post, constraint, constraint, v1=v1, v2=v2))
        cur = post
    assert cur == w, "swap chain failed to land on the working profile"

    if flipped:
        steps.append(_flip_step(cur, constraint))
        cur = steps[-1].post_profile
        constraint = steps[-1].forced_post
    assert cur == p, "chain failed to return to the original profile"

    return Certificate(p.n, case_id, p, constraint.outcome, tuple(steps))


def _check_step_structure(st: TraceStep, index: int, n: int) -> None:
    where = f"step {index}"
    if st.pre_profile.n != n or st.post_profile.n != n:
        raise CertificateError(f"{where}: profile arity differs from certificate arity {n}")
    if st.kind is StepKind.FLIP:
        if st.post_profile != flip_vote(st.pre_profile):
            raise CertificateError(f"{where}: post profile is not the flip of pre")
        if not st.forced_pre.is_exact:
            raise CertificateError(f"{where}: flip steps need an exact pre constraint")
        if st.forced_post != Constraint.exactly(flip(st.forced_pre.outcome)):
            raise CertificateError(f"{where}: flip constraint must be the flipped pre constraint")
    elif st.kind is StepKind.UPGRADE:
        if st.voter is None or st.from_ballot is None:
            raise CertificateError(f"{where}: upgrade step lacks voter or source ballot")
        if not 0 <= st.voter < n:
            raise CertificateError(f"{where}: voter {st.voter} out of range")
        if st.from_ballot is Ballot.FOR:
            raise CertificateError(f"{where}: upgrade source ballot must be Against or Indifferent")
        if st.pre_profile[st.voter] is not Ballot(st.from_ballot):
            raise CertificateError(f"{where}: source ballot does not match the pre profile")
        if st.post_profile != update(st.voter, Ballot.FOR, st.pre_profile):
            raise CertificateError(f"{where}: post profile is not the single-voter upgrade of pre")
        weak = Constraint.for_or_tie()
        if not st.forced_pre.implies(weak):
            raise CertificateError(f"{where}: upgrade pre constraint must sit inside ForWins|Tie")
        if not (st.forced_post.implies(weak) and st.forced_post.satisfied(Outcome.FOR_WINS)):
            raise CertificateError(f"{where}: upgrade post constraint must allow ForWins only or ForWins|Tie")
    elif st.kind is StepKind.SWAP:
        if st.v1 is None or st.v2 is None:
            raise CertificateError(f"{where}: swap step lacks voter ids")
        if not (0 <= st.v1 < n and 0 <= st.v2 < n):
            raise CertificateError(f"{where}: swap voters out of range")
        if st.post_profile != swap(st.v1, st.v2, st.pre_profile):
            raise CertificateError(f"{where}: post profile is not the stated swap of pre")
        if st.forced_post != st.forced_pre:
            raise CertificateError(f"{where}: swap steps must preserve the forced constraint")


def _violation_at(st: TraceStep, index: int) -> Violation:
    if st.kind is StepKind.FLIP:
        return Violation(Axiom.NEUTRALITY, Witness(profile=st.pre_profile), step=index)
    if st.kind is StepKind.UPGRADE:
        clause = 2 if st.from_ballot is Ballot.AGAINST else 3
        return Violation(
            Axiom.MONOTONICITY,
            Witness(profile=st.pre_profile, voter=st.voter, clause=clause),
            step=index,
        )
    return Violation(Axiom.ANONYMITY, Witness(profile=st.pre_profile, v1=st.v1, v2=st.v2), step=index)


def validate_certificate(r: Rule, c: Certificate) -> Verdict:
    """Check the chain structurally, then evaluate the rule along it and
    return the first step whose forced implication fails.

    A grounded, structurally valid certificate always yields a Violation,
    because its endpoint constraint contradicts the rule's value at the
    original profile.  Structural problems (broken chain, transform or
    constraint mismatch, a certificate that does not apply to this rule)
    raise CertificateError instead."""
    if r.n != c.n:
        raise CertificateError(f"certificate is for {c.n} voters but rule expects {r.n}")
    if not c.steps:
        raise CertificateError("certificate has no steps")
    if c.steps[0].pre_profile != c.original:
        raise CertificateError("chain does not start at the original profile")
    if c.steps[-1].post_profile != c.original:
        raise CertificateError("chain does not end at the original profile")
    for k, st in enumerate(c.steps):
        _check_step_structure(st, k, c.n)
        if k:
            prev = c.steps[k - 1]
            if prev.post_profile != st.pre_profile:
                raise CertificateError(f"step {k}: pre profile does not continue the chain")
            if not prev.forced_post.implies(st.forced_pre):
                raise CertificateError(f"step {k}: forced constraint weakens the chain")
    last = c.steps[-1].forced_post
    if not (last.is_exact and last.outcome is Outcome(c.final_claim)):
        raise CertificateError("final claim does not match the last step constraint")

    observed = r.evaluate(c.original)
    if not c.steps[0].forced_pre.satisfied(observed):
        raise CertificateError(
            f"certificate does not apply: rule yields {OUTCOME_NAMES[observed]} at the original "
            f"profile but the chain starts from {c.steps[0].forced_pre.label()}"
        )
    if last.satisfied(observed):
        raise CertificateError("certificate endpoint does not contradict the rule's value")

    for k, st in enumerate(c.steps):
        if not st.forced_post.satisfied(r.evaluate(st.post_profile)):
            if not st.forced_pre.satisfied(r.evaluate(st.pre_profile)):
                raise CertificateError(f"step {k}: chain lost its grounding before failing")
            return Verdict(_violation_at(st, k))
    raise CertificateError("contradictory chain evaluated without a failing step")


def refute(r: Rule) -> Verdict:
    """Equivalent when the rule is majority everywhere; otherwise generate
    and validate a certificate, returning its Violation."""
    p = find_disagreement(r)
    if p is None:
        return Verdict()
    return validate_certificate(r, generate_certificate(r, p))
