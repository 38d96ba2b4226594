"""Canonical enumeration of binary initial conditions.

Strings are ordered by length, and within each length group they follow
reflected binary Gray order, so consecutive same-length inputs differ in
exactly one bit.  This is the fixed input ordering for every sensitivity
measurement in the package.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class InitialConditionIndex:
    """Position of one initial condition in the global enumeration."""

    j: int  # 1-based global index
    length: int
    rank: int  # position within the length group, in [0, 2**length)

    @classmethod
    def from_global(cls, j: int) -> "InitialConditionIndex":
        if j < 1:
            raise ValueError(f"index must be >= 1, got {j}")
        # Group L covers j in [2**L - 1, 2**(L+1) - 2].
        length = (j + 1).bit_length() - 1
        rank = j - (2**length - 1)
        return cls(j=j, length=length, rank=rank)


def init_condition(j: int) -> str:
    """The j-th initial condition (1-based)."""
    idx = InitialConditionIndex.from_global(j)
    gray = idx.rank ^ (idx.rank >> 1)
    return format(gray, f"0{idx.length}b")


def initial_conditions(n: int) -> list[str]:
    """The first n initial conditions, in enumeration order."""
    if n < 1:
        raise ValueError(f"need at least one initial condition, got {n}")
    return [init_condition(j) for j in range(1, n + 1)]
