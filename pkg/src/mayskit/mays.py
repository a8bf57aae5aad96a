"""Exhaustive verification of the majority-rule biconditional at desk scale.

Forward: the majority rule passes all three axiom checkers.  Backward: among
every candidate rule, exactly the majority table passes all three.  The full
rule space is enumerable only for n <= 2 (3, 27, 19683 tables); beyond that
the anonymous stratum stands in: anonymous rules factor through (For-count,
Against-count) classes, so enumerating class functions covers every
anonymous rule up to n = 4 (14,348,907 candidates) within budget.

Sweeps may be sharded over contiguous code ranges and run on several
workers; the merged report is byte-identical to the sequential one.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import budgets
from ._kernels import sweep_classes, sweep_tables
from ._maps import class_count, class_list, class_of_code, majority_class_code, majority_table_code
from .core import SizeLimitError
from .properties import AxiomReport, check_all
from .rules import Rule


@dataclass(frozen=True)
class CountClass:
    """A (For-count, Against-count) pair; anonymous rules factor through these."""

    a: int
    b: int


@dataclass(frozen=True)
class BiconditionalReport:
    """Outcome of sweeping a rule space for axiom-satisfying rules."""

    mode: str  # "full" | "anonymous"
    n: int
    total: int
    passing: int
    equals_majority: bool
    survivors: tuple[int, ...]
    elapsed_s: float

    def to_dict(self) -> dict:
        # elapsed_s stays out: serialized reports must be byte-identical
        # across runs and worker counts.
        return {
            "mode": self.mode,
            "n": self.n,
            "total": self.total,
            "passing": self.passing,
            "equals_majority": self.equals_majority,
            "survivors": list(self.survivors),
        }


def verify_forward(n: int) -> tuple[AxiomReport, AxiomReport, AxiomReport]:
    """Run the three axiom checkers against the built-in majority rule."""
    limit = budgets.max_forward_n()
    if n > limit:
        raise SizeLimitError(f"forward verification is budgeted to n <= {limit}, got {n}")
    return check_all(Rule.majority(n))


def table_rule(n: int, code: int) -> Rule:
    """The table rule whose outcome digits are the base-3 digits of `code`."""
    size = 3**n
    if not 0 <= code < 3**size:
        raise ValueError(f"table code {code} out of range [0, 3**{size})")
    digits = []
    for _ in range(size):
        code, d = divmod(code, 3)
        digits.append(d)
    return Rule.from_table(n, digits)


def class_rule(n: int, code: int) -> Rule:
    """Lift a class function (base-3 digits of `code` over tally classes) to a table rule."""
    m = class_count(n)
    if not 0 <= code < 3**m:
        raise ValueError(f"class-function code {code} out of range [0, 3**{m})")
    digits = np.empty(m, dtype=np.int8)
    for k in range(m):
        code, d = divmod(code, 3)
        digits[k] = d
    return Rule(n, _lifted_table(n, digits))


def _lifted_table(n: int, class_digits: np.ndarray) -> np.ndarray:
    table = class_digits[class_of_code(n)]
    table.flags.writeable = False
    return table


def enumerate_all_rules(n: int) -> Iterator[Rule]:
    """Every outcome table exactly once, in base-3 table-code order (n <= 2)."""
    if n > budgets.FULL_ENUM_MAX_N:
        raise SizeLimitError(
            f"the full rule space at n = {n} has 3**(3**{n}) tables "
            f"(already 3**27 at n = 3); only n <= {budgets.FULL_ENUM_MAX_N} is enumerable"
        )
    for code in range(3 ** (3**n)):
        yield table_rule(n, code)


def enumerate_anonymous_rules(n: int) -> Iterator[Rule]:
    """The lift of every class function to a table rule, in class-code order."""
    m = class_count(n)
    limit = budgets.max_quotient_n()
    if n > limit:
        raise SizeLimitError(
            f"anonymous stratum at n = {n} has 3**{m} candidates; budget allows n <= {limit}"
        )
    mapping = class_of_code(n)
    digits = np.zeros(m, dtype=np.int8)
    for _ in range(3**m):
        table = digits[mapping]
        table.flags.writeable = False
        yield Rule(n, table)
        for k in range(m):  # base-3 odometer
            digits[k] += 1
            if digits[k] == 3:
                digits[k] = 0
            else:
                break


def _sharded(kernel, n: int, total: int, workers: int, backend: str | None) -> np.ndarray:
    if workers < 1:
        raise ValueError(f"worker count must be positive, got {workers}")
    bounds = [total * i // workers for i in range(workers + 1)]
    ranges = [(bounds[i], bounds[i + 1]) for i in range(workers) if bounds[i] < bounds[i + 1]]
    if len(ranges) <= 1:
        parts = [kernel(n, start, stop, backend) for start, stop in ranges]
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            parts = list(pool.map(lambda span: kernel(n, span[0], span[1], backend), ranges))
    return np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)


def verify_biconditional_exhaustive(n: int, workers: int = 1, backend: str | None = None) -> BiconditionalReport:
    """Sweep every outcome table; the axioms must select exactly the majority table."""
    if n > budgets.FULL_ENUM_MAX_N:
        raise SizeLimitError(
            f"full-space verification at n = {n} needs 3**(3**{n}) tables "
            f"(3**27 already at n = 3, infeasible); use the anonymous mode instead"
        )
    total = 3 ** (3**n)
    started = time.perf_counter()
    survivors = _sharded(sweep_tables, n, total, workers, backend)
    elapsed = time.perf_counter() - started
    passing = int(survivors.size)
    equals = passing == 1 and int(survivors[0]) == majority_table_code(n)
    return BiconditionalReport("full", n, total, passing, equals, tuple(int(c) for c in survivors), elapsed)


def verify_anonymous_restricted(n: int, workers: int = 1, backend: str | None = None) -> BiconditionalReport:
    """Sweep the anonymous stratum; neutrality and monotonicity must select majority."""
    limit = budgets.max_quotient_n()
    if n > limit:
        raise SizeLimitError(
            f"anonymous-stratum verification at n = {n} has 3**{class_count(n)} candidates; "
            f"budget allows n <= {limit}"
        )
    total = 3 ** class_count(n)
    started = time.perf_counter()
    survivors = _sharded(sweep_classes, n, total, workers, backend)
    elapsed = time.perf_counter() - started
    passing = int(survivors.size)
    equals = passing == 1 and int(survivors[0]) == majority_class_code(n)
    return BiconditionalReport("anonymous", n, total, passing, equals, tuple(int(c) for c in survivors), elapsed)


def count_classes(n: int) -> tuple[CountClass, ...]:
    """All (a, b) tally classes in canonical order (a ascending, then b)."""
    return tuple(CountClass(a, b) for a, b in class_list(n))
