"""Width-checked integer storage.

Python integers are exact, so arithmetic never wraps; the check here is
that every *stored* count or coefficient fits a signed 64-bit word.
Setting the environment variable QCHAR_COEFF=bigint (or calling
``set_bigint(True)``) lifts the restriction for stress sweeps.
"""

from __future__ import annotations

import os

INT64_MAX = (1 << 63) - 1
INT64_MIN = -(1 << 63)

_bigint = os.environ.get("QCHAR_COEFF", "").lower() == "bigint"


def set_bigint(flag: bool) -> None:
    global _bigint
    _bigint = flag


def bigint_enabled() -> bool:
    return _bigint


def guard(value: int) -> int:
    """Return value unchanged, or raise Overflow if it cannot be stored."""
    if not _bigint and not (INT64_MIN <= value <= INT64_MAX):
        from .errors import Overflow

        raise Overflow(f"value {value} exceeds 64-bit storage")
    return value
