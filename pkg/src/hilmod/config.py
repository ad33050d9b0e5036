"""Runtime limits.

``limits.max_partition_level`` bounds the depth of any dyadic cell.
The counterexample cap defaults to 16 and may be overridden with the
``HILMOD_MAX_LEVEL`` environment variable.
"""

import os
from dataclasses import dataclass

# kernels shift 64-bit integers by up to this many places
HARD_LEVEL_LIMIT = 60


@dataclass
class Limits:
    max_partition_level: int = 30
    max_sequence_n: int = 16


limits = Limits()


def sequence_cap():
    raw = os.environ.get("HILMOD_MAX_LEVEL")
    if raw is None:
        return limits.max_sequence_n
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"HILMOD_MAX_LEVEL must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("HILMOD_MAX_LEVEL must be positive")
    return cap


def partition_cap():
    return min(limits.max_partition_level, HARD_LEVEL_LIMIT)
