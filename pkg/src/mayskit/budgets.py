"""Enumeration budgets.

MAYSKIT_MAX_N raises (or lowers) the voter-count budgets for the
profile-space sweeps: the axiom checkers, the forward verification of the
majority rule, and the anonymous-stratum enumeration.  The full rule-space
enumeration stays hard-capped at n=2 regardless: at n=3 there are 3**27
outcome tables, which no budget makes feasible.
"""

from __future__ import annotations

import os

ENV_MAX_N = "MAYSKIT_MAX_N"

DEFAULT_MAX_CHECK_N = 10  # 3**n profile sweeps: checkers, rule equality, refutation
DEFAULT_MAX_FORWARD_N = 6  # forward verification of the majority rule
DEFAULT_MAX_QUOTIENT_N = 4  # anonymous-stratum enumeration, 3**((n+1)(n+2)/2) tables
FULL_ENUM_MAX_N = 2  # hard: 3**(3**n) tables


def _env_max_n() -> int | None:
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{ENV_MAX_N} must be non-negative, got {value}")
    return value


def max_check_n() -> int:
    override = _env_max_n()
    return DEFAULT_MAX_CHECK_N if override is None else override


def max_forward_n() -> int:
    override = _env_max_n()
    return DEFAULT_MAX_FORWARD_N if override is None else override


def max_quotient_n() -> int:
    override = _env_max_n()
    return DEFAULT_MAX_QUOTIENT_N if override is None else override
