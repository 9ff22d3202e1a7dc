"""Almost k-diagonal boards: k full diagonals plus one extra cell ``(1, ell)``."""

from __future__ import annotations

from math import gcd
from typing import Iterable

from ..core import Board, Cell, Orientation
from ..errors import InvalidFamilyParameters
from ..generators import DiagonalSet, gen_kdiagonal
from .report import CLOSED, PARITY, SolveReport, certified, proven_none, unknown
from .width_kdiagonal import strip_widths

C_ELL = "c_ell must be -1"
GCD_E = "gcd(|E|, k/2) must be 1"
CLASSES = "E must cover the classes mod gcd(n, k-1), except at most the class of 1 when ell != 1 mod d"


def almost_board(diagonals: DiagonalSet, ell: int) -> Board:
    base = gen_kdiagonal(diagonals)
    return Board(base.n, base.n, base.filled | {Cell(1, ell)})


def _check(n: int, k: int, s: int | None, ell: int, diagonals: DiagonalSet) -> tuple[int | None, bool]:
    if diagonals.n != n or diagonals.k != k or n <= k:
        raise InvalidFamilyParameters(f"diagonal set does not describe k={k} diagonals of a size-{n} board with n > k")
    if 1 not in diagonals.indices:
        raise InvalidFamilyParameters("standard form needs D_1 filled")
    widths = strip_widths(diagonals)
    if s is not None and set(widths) != {s}:
        raise InvalidFamilyParameters(f"empty strips have widths {widths}, not all {s}")
    extra_diag = (1 - ell) % n + 1
    if extra_diag in diagonals.indices or not 2 <= ell <= n:
        raise InvalidFamilyParameters(f"extra cell (1, {ell}) lies on a filled diagonal")
    # the extra cell must sit in the strip right before D_1
    gap = 0
    x = n
    while x not in diagonals.indices:
        gap += 1
        x -= 1
    if ell > gap + 1:
        raise InvalidFamilyParameters(f"extra cell (1, {ell}) is not in standard form (ell <= {gap + 1})")
    uniform = widths[0] if len(set(widths)) == 1 else None
    return uniform, len(widths) == 1


def solve_almost_kdiagonal(n: int, k: int, s: int | None, ell: int,
                           diagonals: DiagonalSet | None = None) -> SolveReport:
    """Constructions for almost k-diagonal boards in standard form.

    ``diagonals`` defaults to the cyclic set ``D_1..D_k`` (then ``s = n - k``).
    """
    if diagonals is None:
        diagonals = DiagonalSet(n, frozenset(range(1, k + 1)))
    s, cyclic = _check(n, k, s, ell, diagonals)
    if (k * n) % 2:
        return proven_none("almost k-diagonal", PARITY, "kn must be even")
    if k == 1 and (n, k) != (2, 1):
        return proven_none("almost k-diagonal", CLOSED, "k = 1 leaves closed subarrays unless n = 2")
    board = almost_board(diagonals, ell)

    def build(minus, method):
        return certified(board, Orientation.from_minus_positions(n, n, minus), method)

    if (n, k) == (2, 1):
        return build([], "almost: 2x2 board with three cells, all +1")
    if k == 2 and cyclic and n >= 3:
        return build([ell], "almost: k = 2, single -1 in column ell")
    if k >= 3 and k % 2 and s is not None and gcd(n, s + 1) == 2 and ell % 2 == 0:
        return build([1], "almost: k odd, single -1 in column 1 (gcd(n, s+1) = 2, ell even)")
    if cyclic and k % 4 == 3 and gcd(n, k - 1) == 2 and ell % 2:
        return build([2, ell], "almost: k = 3 mod 4, -1 in columns 2 and ell (gcd(n, k-1) = 2, ell odd)")
    if cyclic and k >= 4 and k % 2 == 0 and gcd(n, k - 1) == 1:
        return build([ell], "almost: k even, single -1 in column ell (gcd(n, k-1) = 1)")
    return unknown("almost k-diagonal: no construction for these parameters")


def almost_necessary_keven(n: int, k: int, ell: int, positions: Iterable[int]) -> list[str]:
    """Necessary conditions on E for R all +1 on a cyclically almost k-diagonal board, k even.

    Returns the violated ones; an empty list means E is not excluded.
    """
    if k < 4 or k % 2 or n <= k:
        raise InvalidFamilyParameters(f"need even k >= 4 and n > k, got n={n}, k={k}")
    if not 2 <= ell <= n - k + 1:
        raise InvalidFamilyParameters(f"ell={ell} outside [2, {n - k + 1}]")
    e = sorted(set(positions))
    out = []
    if ell not in e:
        out.append(C_ELL)
    if gcd(len(e), k // 2) != 1:
        out.append(GCD_E)
    d = gcd(n, k - 1)
    missing = set(range(d)) - {x % d for x in e}
    allowed = set() if ell % d == 1 % d else {1 % d}
    if not missing <= allowed:
        out.append(CLASSES)
    return out
