"""Pseudopolynomial Subset Sum oracle.

Indices are 1-based throughout, matching the ``I ⊆ {1..n}`` convention used
by the reductions and the text formats.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SubsetSumInstance:
    a: tuple
    b: int

    def __post_init__(self):
        a = tuple(self.a)
        if not a:
            raise ValueError("need at least one number")
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in a):
            raise ValueError("numbers must be positive integers")
        if not isinstance(self.b, int) or self.b < 1:
            raise ValueError("target must be a positive integer")
        object.__setattr__(self, "a", a)

    @property
    def n(self) -> int:
        return len(self.a)


def solve(inst: SubsetSumInstance) -> tuple:
    """Lexicographically smallest index set summing to ``b``; empty when there is none.

    ``reach[i]`` is a bitset of sums attainable with items ``i..n-1``, capped
    at ``b``; the witness then takes the earliest index that keeps the rest
    attainable.
    """
    a, b = inst.a, inst.b
    mask = (1 << (b + 1)) - 1
    reach = [0] * (len(a) + 1)
    reach[-1] = 1
    for i in range(len(a) - 1, -1, -1):
        reach[i] = (reach[i + 1] | (reach[i + 1] << a[i])) & mask
    if not reach[0] >> b & 1:
        return ()
    picked = []
    rest = b
    for i, x in enumerate(a):
        if rest == 0:
            break
        if x <= rest and reach[i + 1] >> (rest - x) & 1:
            picked.append(i + 1)
            rest -= x
    return tuple(picked)
