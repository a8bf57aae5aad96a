"""Kernel backend selection.

The rule-space sweeps have two interchangeable implementations: numba
JIT-compiled loops and vectorized pure numpy.  MAYSKIT_BACKEND=numpy or
MAYSKIT_BACKEND=numba forces one; the default is numba when importable.
Both backends must return bit-identical results (tests enforce this).
"""

from __future__ import annotations

import os

ENV_BACKEND = "MAYSKIT_BACKEND"

try:
    import numba  # noqa: F401

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


def resolve_backend(name: str | None = None) -> str:
    choice = name or os.environ.get(ENV_BACKEND)
    if choice is None:
        return "numba" if HAS_NUMBA else "numpy"
    if choice not in ("numba", "numpy"):
        raise ValueError(f"backend must be 'numba' or 'numpy', got {choice!r}")
    if choice == "numba" and not HAS_NUMBA:
        raise ValueError("numba backend requested but numba is not importable")
    return choice
