from __future__ import annotations

from math import gcd

from ..core import Orientation
from ..generators import gen_totally_filled
from .report import PARITY, SolveReport, certified, proven_none


def staircase_orientation(n: int, m: int, minus_tail: int) -> Orientation:
    """R all +1, C with +1 in the first ``m - l`` columns and -1 in the last ``l``."""
    return Orientation((1,) * n, (1,) * (m - minus_tail) + (-1,) * minus_tail)


def staircase_solves(n: int, m: int, minus_tail: int) -> bool:
    """Closed-form test for the staircase orientation on a totally filled board."""
    return gcd(m - 2 * minus_tail, n) == 1


def solve_totally_filled(n: int, m: int) -> SolveReport:
    if n % 2 == 0 and m % 2 == 0:
        return proven_none("totally filled", PARITY, "n and m must not both be even")
    tail = (m - 1) // 2 if m % 2 else (m - 2) // 2
    return certified(gen_totally_filled(n, m), staircase_orientation(n, m, tail),
                     f"totally filled: staircase C with {tail} trailing -1")
