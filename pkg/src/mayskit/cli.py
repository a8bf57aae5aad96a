"""Command-line front end.

Subcommands: eval (apply a rule to one profile), check (run the axiom
checkers), verify-mays (sweep a rule space for axiom-satisfying rules),
refute (produce and validate a violation certificate), and validate
(re-check a rule file or a certificate independently).

Exit codes: 0 success or pass, 1 semantic failure (an axiom violation,
a failed verification), 2 usage or format error.  Stdout is byte-identical
for identical inputs regardless of worker count; timings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import OUTCOME_NAMES, parse_profile
from .mays import verify_anonymous_restricted, verify_biconditional_exhaustive
from .properties import (
    Axiom,
    AxiomReport,
    Witness,
    check_anonymous,
    check_monotone,
    check_neutral,
    witness_violates,
)
from .refute import (
    Verdict,
    find_disagreement,
    generate_certificate,
    load_certificate,
    save_certificate,
    validate_certificate,
)
from .rules import Rule, load_rule

_CHECKERS = {
    "anon": check_anonymous,
    "neutral": check_neutral,
    "mono": check_monotone,
}


def _rule_of(args: argparse.Namespace) -> Rule:
    if args.majority is not None:
        if args.majority < 0:
            raise ValueError(f"voter count must be non-negative, got {args.majority}")
        return Rule.majority(args.majority)
    return load_rule(args.rule)


def _witness_text(axiom: Axiom, w: Witness) -> str:
    lit = repr(w.profile.literal())
    if axiom is Axiom.ANONYMITY:
        return f"profile {lit}, voters {w.v1} and {w.v2}"
    if axiom is Axiom.NEUTRALITY:
        return f"profile {lit}"
    return f"profile {lit}, voter {w.voter}, clause {w.clause}"


def cmd_eval(args: argparse.Namespace) -> int:
    rule = _rule_of(args)
    outcome = rule.evaluate(parse_profile(args.profile))
    if args.json:
        print(json.dumps({"outcome": OUTCOME_NAMES[outcome]}))
    else:
        print(OUTCOME_NAMES[outcome])
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    rule = _rule_of(args)
    names = list(_CHECKERS) if args.axiom == "all" else [args.axiom]
    kwargs = {} if args.sample is None else {"sample": args.sample, "seed": args.seed}
    reports: list[AxiomReport] = [_CHECKERS[name](rule, **kwargs) for name in names]
    if args.json:
        print(json.dumps({"reports": [r.to_dict() for r in reports],
                          "all_pass": all(r.passed for r in reports)}))
    else:
        for report in reports:
            line = f"{report.axiom.value}: {report.status}"
            if report.witness is not None:
                line += f" at {_witness_text(report.axiom, report.witness)}"
            if report.method == "sampled":
                line += " [sampled]"
            print(line)
    return 0 if all(r.passed for r in reports) else 1


def cmd_verify_mays(args: argparse.Namespace) -> int:
    verify = verify_biconditional_exhaustive if args.mode == "full" else verify_anonymous_restricted
    report = verify(args.n, workers=args.workers, backend=args.backend)
    print(f"elapsed: {report.elapsed_s:.3f}s", file=sys.stderr)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(f"mode: {report.mode}")
        print(f"n: {report.n}")
        print(f"candidates: {report.total}")
        print(f"passing: {report.passing}")
        print(f"equals majority: {'yes' if report.equals_majority else 'no'}")
    return 0 if report.equals_majority else 1


def cmd_refute(args: argparse.Namespace) -> int:
    rule = _rule_of(args)
    disagreement = find_disagreement(rule)
    if disagreement is None:
        verdict = Verdict()
        if args.emit_certificate:
            print("no certificate written: rule is equivalent to majority", file=sys.stderr)
    else:
        certificate = generate_certificate(rule, disagreement)
        if args.emit_certificate:
            save_certificate(certificate, args.emit_certificate)
        verdict = validate_certificate(rule, certificate)
    print(json.dumps(verdict.to_dict()) if args.json else verdict.describe())
    return 0 if verdict.equivalent else 1


def cmd_validate(args: argparse.Namespace) -> int:
    rule = load_rule(args.rule)
    if args.certificate is None:
        if args.json:
            print(json.dumps({"rule": "ok", "n": rule.n, "majority": rule.is_majority}))
        else:
            print(f"rule ok: {rule!r}")
        return 0
    certificate = load_certificate(args.certificate)
    verdict = validate_certificate(rule, certificate)
    violation = verdict.violation
    confirmed = violation is not None and witness_violates(rule, violation.axiom, violation.witness)
    if args.json:
        print(json.dumps({"certificate": "ok", "confirmed": confirmed, **verdict.to_dict()}))
    else:
        suffix = "" if confirmed else " [witness replay failed]"
        print(f"certificate ok: {verdict.describe()}{suffix}")
    return 0 if confirmed else 1


def _add_rule_source(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--rule", metavar="FILE", help="rule file to load")
    group.add_argument("--majority", metavar="N", type=int,
                       help="use the built-in majority rule for N voters")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mayskit",
        description="Two-candidate election rules: evaluate, check axioms, "
                    "verify the majority characterization, refute violators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a rule on one profile")
    _add_rule_source(p_eval)
    p_eval.add_argument("profile", help="profile literal over '+', '-', '0' (voter 0 first)")
    p_eval.add_argument("--json", action="store_true")
    p_eval.set_defaults(func=cmd_eval)

    p_check = sub.add_parser("check", help="run axiom checkers against a rule")
    _add_rule_source(p_check)
    p_check.add_argument("--axiom", choices=("all", "anon", "neutral", "mono"), default="all")
    p_check.add_argument("--sample", type=int, metavar="K",
                         help="randomized spot-check with K cases instead of full enumeration")
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=cmd_check)

    p_verify = sub.add_parser("verify-mays", help="sweep a rule space for axiom-satisfying rules")
    p_verify.add_argument("--n", type=int, required=True, help="number of voters")
    p_verify.add_argument("--mode", choices=("full", "anonymous"), default="full")
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--backend", choices=("numba", "numpy"), default=None)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify_mays)

    p_refute = sub.add_parser("refute", help="produce a violation certificate for a rule")
    _add_rule_source(p_refute)
    p_refute.add_argument("--emit-certificate", metavar="PATH",
                          help="write the certificate to PATH")
    p_refute.add_argument("--json", action="store_true")
    p_refute.set_defaults(func=cmd_refute)

    p_validate = sub.add_parser("validate", help="re-check a rule file or certificate")
    p_validate.add_argument("--rule", metavar="FILE", required=True)
    p_validate.add_argument("--certificate", metavar="PATH")
    p_validate.add_argument("--json", action="store_true")
    p_validate.set_defaults(func=cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
