"""Cyclically k-diagonal boards in standard form (filled diagonals D_1..D_k).

Every construction here keeps R all +1 and only chooses the set E of columns
where C is -1.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from math import gcd

from ..core import Orientation
from ..errors import BaseCaseSearchFailed, InvalidFamilyParameters, PositionsOutOfRange
from ..generators import gen_cyclic_kdiagonal
from ..search import exhaustive
from .report import CLOSED, PARITY, SolveReport, certified, proven_none
from .totally_filled import solve_totally_filled

log = logging.getLogger(__name__)


def explicit_positions(n: int, k: int) -> tuple[int, ...]:
    """The k minus positions used when ``n >= (k-2)(k-1)``.

    With ``d = gcd(n, k-1)``: ``1, ..., d-1`` followed by ``d + (k-1)(i-d)`` for
    ``i = d..k``, so the class of ``d`` is walked in steps of ``k - 1``.
    """
    d = gcd(n, k - 1)
    return tuple(range(1, d)) + tuple(d + (k - 1) * (i - d) for i in range(d, k + 1))


def base_window_size(n: int, k: int) -> int:
    """Size in ``[k+2, 2k-1]`` congruent to odd ``n`` modulo ``k - 1``."""
    return k + 2 + (n - k - 2) % (k - 1)


@lru_cache(maxsize=None)
def base_positions(n: int, k: int) -> tuple[int, ...]:
    """Lexicographically first minus set solving size ``n`` with R all +1 (memoized)."""
    out = exhaustive(gen_cyclic_kdiagonal(n, k), restrict_rows_to_plus_one=True)
    if out.found is None:
        raise BaseCaseSearchFailed(f"no solution with R all +1 for the cyclically {k}-diagonal board of size {n}")
    return out.found.minus_cols


def extend_cyclic_solution(positions, n: int, k: int, lam: int) -> Orientation:
    """Carry a solution at size ``n`` over to size ``n + lam*(k-1)``.

    The minus positions stay where they are; only the board grows.
    """
    e = sorted(set(positions))
    if lam < 0:
        raise InvalidFamilyParameters(f"extension step must be non-negative, got {lam}")
    if not e or e[0] < 1 or e[-1] > n:
        raise PositionsOutOfRange(f"minus positions {e} must be a non-empty subset of [1, {n}]")
    size = n + lam * (k - 1)
    return Orientation.from_minus_positions(size, size, e)


def solve_cyclic_kdiagonal(n: int, k: int) -> SolveReport:
    if not 1 <= k <= n:
        raise InvalidFamilyParameters(f"need 1 <= k <= n, got n={n}, k={k}")
    if n == k:
        return solve_totally_filled(n, n)
    if n % 2 == 0 or k % 2 == 0:
        return proven_none("cyclically k-diagonal", PARITY, "n and k must both be odd")
    if k == 1:
        return proven_none("cyclically k-diagonal", CLOSED, "k must differ from 1: every cell is closed")
    board = gen_cyclic_kdiagonal(n, k)
    d = gcd(n, k - 1)
    if d == 1:
        return certified(board, Orientation.from_minus_positions(n, n, [1]),
                         "cyclic: single -1 in column 1 (gcd(n, k-1) = 1)")
    if n >= (k - 2) * (k - 1):
        return certified(board, Orientation.from_minus_positions(n, n, explicit_positions(n, k)),
                         "cyclic: explicit minus positions (n >= (k-2)(k-1))")
    n0 = base_window_size(n, k)
    lam = (n - n0) // (k - 1)
    e = base_positions(n0, k)
    log.debug("lifting base solution %s at size %d by %d steps", e, n0, lam)
    return certified(board, extend_cyclic_solution(e, n0, k, lam),
                     f"cyclic: base search at n={n0}, extended by {lam} step(s) of k-1")

