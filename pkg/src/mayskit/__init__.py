"""Two-candidate election toolkit: ballots and profiles, vote counting,
profile transforms, rule evaluation, axiom checkers for anonymity,
neutrality and monotonicity, exhaustive verification that those axioms
characterize simple majority, and a certificate-producing refutation
engine for rules that violate them."""

from .core import (
    Ballot,
    ContractError,
    OUTCOME_BY_NAME,
    OUTCOME_NAMES,
    Outcome,
    Profile,
    SizeLimitError,
    all_profiles,
    decode_profile,
    encode_profile,
    parse_profile,
    profile,
)
from .counting import Tally, count, count_helper, is_against, is_for, is_indifferent, tally
from .transforms import (
    build_swap_list,
    flip,
    flip_vote,
    left_false_right_true,
    left_true_right_false,
    swap,
    swaps,
    update,
    upgrade_vote_list,
)
from .rules import (
    Rule,
    evaluate,
    load_rule,
    majority_as_table,
    majority_election,
    rule_from_dict,
    rule_to_dict,
    rules_equal,
    save_rule,
)
from .properties import (
    Axiom,
    AxiomReport,
    Witness,
    check_all,
    check_anonymous,
    check_monotone,
    check_neutral,
    witness_violates,
)
from .mays import (
    BiconditionalReport,
    CountClass,
    class_rule,
    count_classes,
    enumerate_all_rules,
    enumerate_anonymous_rules,
    table_rule,
    verify_anonymous_restricted,
    verify_biconditional_exhaustive,
    verify_forward,
)
from .refute import (
    Certificate,
    CertificateError,
    Constraint,
    StepKind,
    TraceStep,
    Verdict,
    Violation,
    find_disagreement,
    generate_certificate,
    load_certificate,
    reduce_case,
    refute,
    save_certificate,
    validate_certificate,
)
from ._backend import resolve_backend
from ._kernels import warmup

__version__ = "0.1.0"

__all__ = [
    "Ballot",
    "Outcome",
    "Profile",
    "OUTCOME_NAMES",
    "OUTCOME_BY_NAME",
    "ContractError",
    "SizeLimitError",
    "profile",
    "parse_profile",
    "encode_profile",
    "decode_profile",
    "all_profiles",
    "Tally",
    "count",
    "count_helper",
    "tally",
    "is_for",
    "is_against",
    "is_indifferent",
    "flip",
    "flip_vote",
    "swap",
    "swaps",
    "update",
    "upgrade_vote_list",
    "left_true_right_false",
    "left_false_right_true",
    "build_swap_list",
    "Rule",
    "evaluate",
    "majority_election",
    "majority_as_table",
    "rules_equal",
    "rule_to_dict",
    "rule_from_dict",
    "save_rule",
    "load_rule",
    "Axiom",
    "Witness",
    "AxiomReport",
    "check_anonymous",
    "check_neutral",
    "check_monotone",
    "check_all",
    "witness_violates",
    "CountClass",
    "BiconditionalReport",
    "verify_forward",
    "table_rule",
    "class_rule",
    "count_classes",
    "enumerate_all_rules",
    "enumerate_anonymous_rules",
    "verify_biconditional_exhaustive",
    "verify_anonymous_restricted",
    "Constraint",
    "StepKind",
    "TraceStep",
    "Certificate",
    "CertificateError",
    "Violation",
    "Verdict",
    "find_disagreement",
    "reduce_case",
    "generate_certificate",
    "validate_certificate",
    "refute",
    "save_certificate",
    "load_certificate",
    "resolve_backend",
    "warmup",
]
