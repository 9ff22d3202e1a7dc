from __future__ import annotations

from math import gcd

from ..analysis import diagonal_runs
from ..core import Orientation
from ..errors import InvalidFamilyParameters
from ..generators import DiagonalSet, gen_kdiagonal
from .report import PARITY, SolveReport, certified, proven_none, unknown


def strip_widths(diagonals: DiagonalSet) -> list[int]:
    return diagonal_runs(set(diagonals.indices), diagonals.n)[1]


def check_width_standard_form(n: int, k: int, s: int, diagonals: DiagonalSet) -> list[int]:
    """Validate that ``diagonals`` is a k-diagonal set of width s in standard form; return strip widths."""
    if diagonals.n != n or diagonals.k != k:
        raise InvalidFamilyParameters(f"diagonal set has size {diagonals.n} and {diagonals.k} diagonals, "
                                      f"expected {n} and {k}")
    if n <= k:
        raise InvalidFamilyParameters(f"need n > k, got n={n}, k={k}")
    if 1 not in diagonals.indices or n in diagonals.indices:
        raise InvalidFamilyParameters("standard form needs D_1 filled and D_n empty")
    widths = strip_widths(diagonals)
    if set(widths) != {s}:
        raise InvalidFamilyParameters(f"empty strips have widths {widths}, not all {s}")
    return widths


def solve_width_kdiagonal(n: int, k: int, s: int, diagonals: DiagonalSet) -> SolveReport:
    widths = check_width_standard_form(n, k, s, diagonals)
    if (n * k) % 2 == 0:
        return proven_none("k-diagonal with width s", PARITY, "n and k must both be odd")
    if k < 3:
        return unknown("k-diagonal with width s: no construction for k < 3")
    board = gen_kdiagonal(diagonals)
    if gcd(n, s + 1) == 1:
        two = len(widths) == 2 and 2 * s == n - k
        tag = " (two strips, gcd(n, k-2) = 1)" if two else ""
        return certified(board, Orientation.from_minus_positions(n, n, [1]),
                         f"width: single -1 in column 1 (gcd(n, s+1) = 1){tag}")
    return unknown("k-diagonal with width s: gcd(n, s+1) > 1, no construction")
