"""Constructors for the board families: totally filled, k-diagonal,
cyclically k-diagonal, uniform-width k-diagonal and cyclically almost
k-diagonal boards. Everything is emitted in standard form; use :func:`shift`
to move a board around the torus.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Board, Cell
from .errors import InvalidFamilyParameters


@dataclass(frozen=True)
class DiagonalSet:
    """Filled diagonals of a square board of size ``n``.

    Diagonal ``D_i`` holds the cells ``(i, 1), (i+1, 2), ..., (i-1, n)``, so the
    cell ``(r, c)`` lies on ``D_{r - c + 1}`` (mod ``n``).
    """

    n: int
    indices: frozenset

    def __post_init__(self):
        idx = frozenset(int(i) for i in self.indices)
        if self.n < 1:
            raise InvalidFamilyParameters(f"size must be positive, got {self.n}")
        if not idx:
            raise InvalidFamilyParameters("at least one diagonal is required")
        bad = [i for i in idx if not 1 <= i <= self.n]
        if bad:
            raise InvalidFamilyParameters(f"diagonal indices {sorted(bad)} outside [1, {self.n}]")
        object.__setattr__(self, "indices", idx)

    @property
    def k(self) -> int:
        return len(self.indices)

    def sorted(self) -> list[int]:
        return sorted(self.indices)


def diagonal_of(cell, n: int) -> int:
    return (cell[0] - cell[1]) % n + 1


def diagonal_cells(i: int, n: int) -> list[Cell]:
    return [Cell((i + t - 1) % n + 1, t + 1) for t in range(n)]


def gen_totally_filled(n: int, m: int) -> Board:
    if n < 1 or m < 1:
        raise InvalidFamilyParameters(f"dimensions must be positive, got {n}x{m}")
    return Board.from_cells(n, m, ((i, j) for i in range(1, n + 1) for j in range(1, m + 1)))


def gen_kdiagonal(diagonals: DiagonalSet) -> Board:
    cells = [c for i in diagonals.indices for c in diagonal_cells(i, diagonals.n)]
    return Board.from_cells(diagonals.n, diagonals.n, cells)


def gen_cyclic_kdiagonal(n: int, k: int) -> Board:
    if not 1 <= k <= n:
        raise InvalidFamilyParameters(f"need 1 <= k <= n, got n={n}, k={k}")
    return gen_kdiagonal(DiagonalSet(n, frozenset(range(1, k + 1))))


def width_diagonals(n: int, k: int, s: int, groups: Sequence[int] | None = None) -> DiagonalSet:
    """Diagonal set of a k-diagonal board of size n whose empty strips all have width s.

    The filled diagonals come in runs separated by strips of ``s`` empty
    diagonals; with ``q`` strips, ``n = k + q*s``. ``groups`` gives the run
    lengths starting from ``D_1``; by default the k diagonals are split as
    evenly as possible over the q runs, longer runs first.
    """
    if k < 1 or s < 1 or n <= k:
        raise InvalidFamilyParameters(f"need k >= 1, s >= 1, n > k; got n={n}, k={k}, s={s}")
    if (n - k) % s:
        raise InvalidFamilyParameters(f"n - k = {n - k} is not a multiple of the width {s}")
    q = (n - k) // s
    if q > k:
        raise InvalidFamilyParameters(f"{q} strips of width {s} need at least {q} filled diagonals, k={k}")
    if groups is None:
        base, extra = divmod(k, q)
        groups = [base + 1] * extra + [base] * (q - extra)
    groups = list(groups)
    if len(groups) != q or sum(groups) != k or min(groups) < 1:
        raise InvalidFamilyParameters(f"run lengths {groups} do not give {q} runs totalling k={k}")
    idx = []
    pos = 1
    for g in groups:
        idx.extend(range(pos, pos + g))
        pos += g + s
    return DiagonalSet(n, frozenset(idx))


def gen_width_kdiagonal(n: int, k: int, s: int, groups: Sequence[int] | None = None) -> Board:
    return gen_kdiagonal(width_diagonals(n, k, s, groups))


def gen_almost(n: int, k: int, ell: int) -> Board:
    """Cyclically almost k-diagonal board: ``D_1..D_k`` plus the extra cell ``(1, ell)``."""
    if not 1 <= k < n:
        raise InvalidFamilyParameters(f"need 1 <= k < n, got n={n}, k={k}")
    if not 2 <= ell <= n - k + 1:
        raise InvalidFamilyParameters(f"extra column ell={ell} outside [2, {n - k + 1}]")
    board = gen_cyclic_kdiagonal(n, k)
    return Board(n, n, board.filled | {Cell(1, ell)})


def add_cells(board: Board, cells: Iterable[tuple[int, int]]) -> Board:
    return Board(board.n, board.m, board.filled | frozenset(Cell(*c) for c in cells))


def shift(board: Board, dr: int, dc: int) -> Board:
    """Translate every filled cell by ``(dr, dc)`` on the torus."""
    n, m = board.n, board.m
    return Board.from_cells(n, m, (((i - 1 + dr) % n + 1, (j - 1 + dc) % m + 1) for i, j in board.filled))


def random_board(n: int, m: int, rng: random.Random, density: float = 0.5) -> Board:
    """Seeded uniform filler whose rows and columns are all occupied."""
    while True:
        cells = [(i, j) for i in range(1, n + 1) for j in range(1, m + 1) if rng.random() < density]
        rows = {i for i, _ in cells}
        cols = {j for _, j in cells}
        if len(rows) == n and len(cols) == m:
            return Board.from_cells(n, m, cells)
