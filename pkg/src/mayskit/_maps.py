"""Cached index maps over the 3**n profile space and the (a, b) tally classes.

Everything here is derived data: digit matrices, per-code tallies, and the
code permutations induced by flip_vote / swap / update.  All arrays are
read-only and keyed by voter count; callers must respect the budget guards
before asking for large n.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .core import _FLIP_DIGIT

FLIP_DIGITS = np.array(_FLIP_DIGIT, dtype=np.int8)


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@lru_cache(maxsize=None)
def pow3(n: int) -> np.ndarray:
    return _frozen(3 ** np.arange(n, dtype=np.int64))


@lru_cache(maxsize=None)
def digit_matrix(n: int) -> np.ndarray:
    """(3**n, n) int8 matrix; row c holds the ballot digits of profile code c."""
    codes = np.arange(3**n, dtype=np.int64)
    return _frozen((codes[:, None] // pow3(n)[None, :] % 3).astype(np.int8))


@lru_cache(maxsize=None)
def tally_counts(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-code (For-count, Against-count) arrays."""
    d = digit_matrix(n)
    return _frozen((d == 1).sum(axis=1).astype(np.int64)), _frozen((d == 2).sum(axis=1).astype(np.int64))


@lru_cache(maxsize=None)
def majority_vector(n: int) -> np.ndarray:
    """int8 outcome digits of the majority rule, indexed by profile code."""
    a, b = tally_counts(n)
    out = np.zeros(3**n, dtype=np.int8)
    out[a > b] = 1
    out[b > a] = 2
    return _frozen(out)


@lru_cache(maxsize=None)
def flip_codes(n: int) -> np.ndarray:
    """Permutation: code of flip_vote(profile) per code."""
    flipped = FLIP_DIGITS[digit_matrix(n)]
    return _frozen(flipped.astype(np.int64) @ pow3(n))


@lru_cache(maxsize=None)
def swap_codes(n: int, v1: int, v2: int) -> np.ndarray:
    """Permutation: code of swap(v1, v2, profile) per code."""
    d = digit_matrix(n).astype(np.int64)
    p = pow3(n)
    delta = (d[:, v2] - d[:, v1]) * p[v1] + (d[:, v1] - d[:, v2]) * p[v2]
    return _frozen(np.arange(3**n, dtype=np.int64) + delta)


@lru_cache(maxsize=None)
def update_codes(n: int, v: int, digit: int) -> np.ndarray:
    """Map: code of update(v, ballot-with-digit, profile) per code."""
    d = digit_matrix(n).astype(np.int64)
    return _frozen(np.arange(3**n, dtype=np.int64) + (digit - d[:, v]) * pow3(n)[v])


# -- (a, b) tally classes ------------------------------------------------
#
# Anonymous rules factor through the pair (For-count, Against-count).  The
# canonical class order is a ascending, then b ascending; there are
# (n+1)(n+2)/2 classes for n voters.


def class_count(n: int) -> int:
    return (n + 1) * (n + 2) // 2


@lru_cache(maxsize=None)
def class_list(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((a, b) for a in range(n + 1) for b in range(n + 1 - a))


@lru_cache(maxsize=None)
def class_index(n: int) -> dict[tuple[int, int], int]:
    return {ab: k for k, ab in enumerate(class_list(n))}


@lru_cache(maxsize=None)
def class_of_code(n: int) -> np.ndarray:
    """Map: profile code -> class index of its tally."""
    a, b = tally_counts(n)
    idx = class_index(n)
    out = np.fromiter((idx[(int(x), int(y))] for x, y in zip(a, b)), dtype=np.int64, count=3**n)
    return _frozen(out)


@lru_cache(maxsize=None)
def class_moves(n: int) -> dict[str, np.ndarray]:
    """Class-level analogs of the profile transforms.

    For class k = (a, b):
      flip_pair: index of (b, a)                      (flip_vote image)
      drop_against: (a, b-1) or -1 if b = 0           (one Against -> Indifferent)
      against_to_for: (a+1, b-1) or -1 if b = 0       (one Against -> For)
      add_for: (a+1, b) or -1 if a + b = n            (one Indifferent -> For)
      majority: outcome digit of the majority rule on the class
    """
    classes = class_list(n)
    idx = class_index(n)
    m = len(classes)
    flip_pair = np.empty(m, dtype=np.int64)
    drop_against = np.full(m, -1, dtype=np.int64)
    against_to_for = np.full(m, -1, dtype=np.int64)
    add_for = np.full(m, -1, dtype=np.int64)
    majority = np.zeros(m, dtype=np.int8)
    for k, (a, b) in enumerate(classes):
        flip_pair[k] = idx[(b, a)]
        if b > 0:
            drop_against[k] = idx[(a, b - 1)]
            against_to_for[k] = idx[(a + 1, b - 1)]
        if a + b < n:
            add_for[k] = idx[(a + 1, b)]
        majority[k] = 1 if a > b else (2 if b > a else 0)
    return {
        "flip_pair": _frozen(flip_pair),
        "drop_against": _frozen(drop_against),
        "against_to_for": _frozen(against_to_for),
        "add_for": _frozen(add_for),
        "majority": _frozen(majority),
    }


@lru_cache(maxsize=None)
def majority_class_code(n: int) -> int:
    """Base-3 code of the majority rule as a class function (class 0 least significant)."""
    majority = class_moves(n)["majority"]
    code = 0
    for k in range(len(majority) - 1, -1, -1):
        code = code * 3 + int(majority[k])
    return code


@lru_cache(maxsize=None)
def majority_table_code(n: int) -> int:
    """Base-3 code of the majority rule as an outcome table (profile code 0 least significant)."""
    vec = majority_vector(n)
    code = 0
    for c in range(len(vec) - 1, -1, -1):
        code = code * 3 + int(vec[c])
    return code
