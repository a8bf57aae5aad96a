"""Hot sweep kernels over rule spaces.

Two sweeps dominate the toolkit's runtime and get dual implementations:

  sweep_tables:  every outcome table on the full profile space (3**(3**n)
                 candidates), keeping those that satisfy all three axioms.
  sweep_classes: every tally-class function (3**((n+1)(n+2)/2) candidates),
                 the anonymity quotient, keeping those that are neutral and
                 monotone at class level.

Each kernel walks a contiguous code range with a base-3 odometer so shards
can be distributed and merged deterministically.  The numba and numpy paths
are exact replicas of each other; tests pin them code-for-code equal.
"""

from __future__ import annotations

import numpy as np

from ._backend import HAS_NUMBA, resolve_backend
from ._maps import (
    FLIP_DIGITS,
    class_count,
    class_moves,
    digit_matrix,
    flip_codes,
    swap_codes,
    update_codes,
)

_CHUNK = 1 << 16


def _table_maps(n: int):
    size = 3**n
    pairs = [(v1, v2) for v1 in range(n) for v2 in range(v1 + 1, n)]
    if pairs:
        swap_perms = np.stack([swap_codes(n, v1, v2) for v1, v2 in pairs])
    else:
        swap_perms = np.empty((0, size), dtype=np.int64)
    upd_indifferent = np.stack([update_codes(n, v, 0) for v in range(n)]) if n else np.empty((0, size), dtype=np.int64)
    upd_for = np.stack([update_codes(n, v, 1) for v in range(n)]) if n else np.empty((0, size), dtype=np.int64)
    return swap_perms, flip_codes(n), digit_matrix(n), upd_indifferent, upd_for


# -- numpy path ----------------------------------------------------------


def _digit_block(codes: np.ndarray, width: int) -> np.ndarray:
    powers = 3 ** np.arange(width, dtype=np.int64)
    return (codes[:, None] // powers[None, :] % 3).astype(np.int8)


def _sweep_tables_numpy(n: int, start: int, stop: int) -> np.ndarray:
    swap_perms, flipc, digits, upd0, upd1 = _table_maps(n)
    size = 3**n
    found = []
    for lo in range(start, stop, _CHUNK):
        codes = np.arange(lo, min(stop, lo + _CHUNK), dtype=np.int64)
        t = _digit_block(codes, size)
        ok = (t == FLIP_DIGITS[t[:, flipc]]).all(axis=1)
        for k in range(swap_perms.shape[0]):
            ok &= (t == t[:, swap_perms[k]]).all(axis=1)
        antecedent = t != 2
        for v in range(n):
            dv = digits[:, v]
            not_for_after_drop = t[:, upd0[v]] != 1
            not_for_after_raise = t[:, upd1[v]] != 1
            viol = antecedent & (dv == 2)[None, :] & (not_for_after_drop | not_for_after_raise)
            viol |= antecedent & (dv == 0)[None, :] & not_for_after_raise
            ok &= ~viol.any(axis=1)
        found.append(codes[ok])
    return np.concatenate(found) if found else np.empty(0, dtype=np.int64)


def _sweep_classes_numpy(n: int, start: int, stop: int) -> np.ndarray:
    moves = class_moves(n)
    flip_pair = moves["flip_pair"]
    has_against = moves["drop_against"] >= 0
    has_slack = moves["add_for"] >= 0
    kb = np.where(has_against, moves["drop_against"], 0)
    kf = np.where(has_against, moves["against_to_for"], 0)
    ka = np.where(has_slack, moves["add_for"], 0)
    m = class_count(n)
    found = []
    for lo in range(start, stop, _CHUNK):
        codes = np.arange(lo, min(stop, lo + _CHUNK), dtype=np.int64)
        g = _digit_block(codes, m)
        neutral = (g == FLIP_DIGITS[g[:, flip_pair]]).all(axis=1)
        codes, g = codes[neutral], g[neutral]
        antecedent = g != 2
        viol = antecedent & has_against[None, :] & ((g[:, kb] != 1) | (g[:, kf] != 1))
        viol |= antecedent & has_slack[None, :] & (g[:, ka] != 1)
        found.append(codes[~viol.any(axis=1)])
    return np.concatenate(found) if found else np.empty(0, dtype=np.int64)


# -- numba path ------------------------------------------------------------

if HAS_NUMBA:
    from numba import njit

    @njit(cache=True, nogil=True)
    def _tables_kernel(start, stop, swap_perms, flipc, digits, upd0, upd1, flip3):
        size = flipc.shape[0]
        n = digits.shape[1]
        n_pairs = swap_perms.shape[0]
        t = np.empty(size, dtype=np.int8)
        c = start
        for i in range(size):
            t[i] = c % 3
            c //= 3
        cap = 64
        found = np.empty(cap, dtype=np.int64)
        count = 0
        for code in range(start, stop):
            if code > start:
                i = 0
                while True:  # base-3 odometer increment
                    t[i] += 1
                    if t[i] == 3:
                        t[i] = 0
                        i += 1
                    else:
                        break
            ok = True
            for p in range(size):
                if t[p] != flip3[t[flipc[p]]]:
                    ok = False
                    break
            if ok:
                for k in range(n_pairs):
                    for p in range(size):
                        if t[p] != t[swap_perms[k, p]]:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                for p in range(size):
                    if t[p] == 2:
                        continue
                    for v in range(n):
                        d = digits[p, v]
                        if d == 2:
                            if t[upd0[v, p]] != 1 or t[upd1[v, p]] != 1:
                                ok = False
                                break
                        elif d == 0:
                            if t[upd1[v, p]] != 1:
                                ok = False
                                break
                    if not ok:
                        break
            if ok:
                if count == cap:
                    cap *= 2
                    bigger = np.empty(cap, dtype=np.int64)
                    bigger[:count] = found[:count]
                    found = bigger
                found[count] = code
                count += 1
        return found[:count].copy()

    @njit(cache=True, nogil=True)
    def _classes_kernel(start, stop, flip_pair, drop_against, against_to_for, add_for, flip3):
        m = flip_pair.shape[0]
        g = np.empty(m, dtype=np.int8)
        c = start
        for i in range(m):
            g[i] = c % 3
            c //= 3
        cap = 64
        found = np.empty(cap, dtype=np.int64)
        count = 0
        for code in range(start, stop):
            if code > start:
                i = 0
                while True:
                    g[i] += 1
                    if g[i] == 3:
                        g[i] = 0
                        i += 1
                    else:
                        break
            ok = True
            for k in range(m):
                if g[k] != flip3[g[flip_pair[k]]]:
                    ok = False
                    break
            if ok:
                for k in range(m):
                    if g[k] == 2:
                        continue
                    if drop_against[k] >= 0:
                        if g[drop_against[k]] != 1 or g[against_to_for[k]] != 1:
                            ok = False
                            break
                    if add_for[k] >= 0 and g[add_for[k]] != 1:
                        ok = False
                        break
            if ok:
                if count == cap:
                    cap *= 2
                    bigger = np.empty(cap, dtype=np.int64)
                    bigger[:count] = found[:count]
                    found = bigger
                found[count] = code
                count += 1
        return found[:count].copy()

    def _sweep_tables_numba(n: int, start: int, stop: int) -> np.ndarray:
        swap_perms, flipc, digits, upd0, upd1 = _table_maps(n)
        return _tables_kernel(start, stop, swap_perms, flipc, digits, upd0, upd1, FLIP_DIGITS)

    def _sweep_classes_numba(n: int, start: int, stop: int) -> np.ndarray:
        moves = class_moves(n)
        return _classes_kernel(
            start, stop, moves["flip_pair"], moves["drop_against"], moves["against_to_for"], moves["add_for"], FLIP_DIGITS
        )


def sweep_tables(n: int, start: int, stop: int, backend: str | None = None) -> np.ndarray:
    """Table codes in [start, stop) whose rules pass all three axioms."""
    if resolve_backend(backend) == "numba":
        return _sweep_tables_numba(n, start, stop)
    return _sweep_tables_numpy(n, start, stop)


def sweep_classes(n: int, start: int, stop: int, backend: str | None = None) -> np.ndarray:
    """Class-function codes in [start, stop) that are neutral and monotone."""
    if resolve_backend(backend) == "numba":
        return _sweep_classes_numba(n, start, stop)
    return _sweep_classes_numpy(n, start, stop)


def warmup(backend: str | None = None) -> None:
    """Trigger JIT compilation outside any timed region."""
    sweep_tables(0, 0, 3, backend=backend)
    sweep_classes(0, 0, 3, backend=backend)
