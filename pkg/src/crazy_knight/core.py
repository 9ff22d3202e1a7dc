"""Toroidal partially filled boards and the row/column move function.

All indices at this surface are 1-based: rows live in ``1..n`` and columns in
``1..m``, and every coordinate is reduced modulo the board size onto those
representatives.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import CellNotFilled, DimensionMismatch, EmptyBoard, EmptyColumn, EmptyRow


class Cell(NamedTuple):
    row: int
    col: int


def _wrap(x: int, size: int) -> int:
    return (x - 1) % size + 1


@dataclass(frozen=True)
class Board:
    """An ``n x m`` toroidal array; ``filled`` is the set of filled positions.

    Construction does not check that every row and column is occupied; use
    :func:`validate` for that.
    """

    n: int
    m: int
    filled: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"board dimensions must be positive, got {self.n}x{self.m}")
        cells = frozenset(Cell(int(i), int(j)) for i, j in self.filled)
        for i, j in cells:
            if not (1 <= i <= self.n and 1 <= j <= self.m):
                raise ValueError(f"cell {(i, j)} lies outside a {self.n}x{self.m} board")
        object.__setattr__(self, "filled", cells)

    @classmethod
    def from_cells(cls, n: int, m: int, cells: Iterable[tuple[int, int]]) -> "Board":
        return cls(n, m, frozenset(cells))

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self.filled

    def __len__(self) -> int:
        return len(self.filled)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n, self.m

    @property
    def is_square(self) -> bool:
        return self.n == self.m

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """Filled cells in row-major order; the index of a cell here is its id."""
        return tuple(sorted(self.filled))

    @cached_property
    def index(self) -> dict[Cell, int]:
        return {c: x for x, c in enumerate(self.cells)}

    @cached_property
    def row_cols(self) -> tuple[tuple[int, ...], ...]:
        """``row_cols[i - 1]`` is the sorted tuple of filled columns in row ``i``."""
        rows: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.cells:
            rows[i - 1].append(j)
        return tuple(tuple(r) for r in rows)

    @cached_property
    def col_rows(self) -> tuple[tuple[int, ...], ...]:
        cols: list[list[int]] = [[] for _ in range(self.m)]
        for i, j in self.cells:
            cols[j - 1].append(i)
        return tuple(tuple(sorted(c)) for c in cols)

    def to_rows(self) -> list[str]:
        return [
            "".join("#" if (i, j) in self.filled else "." for j in range(1, self.m + 1))
            for i in range(1, self.n + 1)
        ]

    def __str__(self) -> str:
        return "\n".join(self.to_rows())


@dataclass(frozen=True)
class Orientation:
    """Row directions ``r`` and column directions ``c``, each entry +1 or -1."""

    r: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        r = tuple(int(x) for x in self.r)
        c = tuple(int(x) for x in self.c)
        if any(x not in (1, -1) for x in r + c):
            raise ValueError("orientation entries must be +1 or -1")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "c", c)

    @classmethod
    def from_minus_positions(cls, n: int, m: int, minus_cols: Iterable[int],
                             minus_rows: Iterable[int] = ()) -> "Orientation":
        """All-plus vectors with -1 at the given 1-based rows and columns."""
        cols = set(minus_cols)
        rows = set(minus_rows)
        return cls(tuple(-1 if i in rows else 1 for i in range(1, n + 1)),
                   tuple(-1 if j in cols else 1 for j in range(1, m + 1)))

    @property
    def minus_cols(self) -> tuple[int, ...]:
        return tuple(j for j, x in enumerate(self.c, 1) if x == -1)

    @property
    def minus_rows(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.r, 1) if x == -1)

    def check(self, board: Board) -> None:
        if len(self.r) != board.n or len(self.c) != board.m:
            raise DimensionMismatch(
                f"orientation has {len(self.r)}x{len(self.c)} entries, board is {board.n}x{board.m}"
            )


@dataclass(frozen=True)
class Tour:
    start: Cell
    cells: tuple[Cell, ...]
    covers_all: bool

    def __len__(self) -> int:
        return len(self.cells)

    def labels(self) -> dict[Cell, int]:
        """Map each visited cell to the number of moves needed to reach it."""
        return {c: t for t, c in enumerate(self.cells)}


def validate(board: Board) -> Board:
    if not board.filled:
        raise EmptyBoard()
    for i, cols in enumerate(board.row_cols, 1):
        if not cols:
            raise EmptyRow(i)
    for j, rows in enumerate(board.col_rows, 1):
        if not rows:
            raise EmptyColumn(j)
    return board


def _step(line: Sequence[int], pos: int, direction: int) -> int:
    # next entry of the sorted cyclic sequence ``line`` after ``pos``
    k = bisect.bisect_right(line, pos) if direction > 0 else bisect.bisect_left(line, pos) - 1
    return line[k % len(line)]


def _require_filled(board: Board, cell) -> Cell:
    cell = Cell(_wrap(cell[0], board.n), _wrap(cell[1], board.m))
    if cell not in board.filled:
        raise CellNotFilled(cell)
    return cell


def row_successor(board: Board, cell, direction: int = 1) -> Cell:
    """Next filled cell of the same row, scanning right (+1) or left (-1)."""
    i, j = _require_filled(board, cell)
    return Cell(i, _step(board.row_cols[i - 1], j, direction))


def column_successor(board: Board, cell, direction: int = 1) -> Cell:
    """Next filled cell of the same column, scanning down (+1) or up (-1)."""
    i, j = _require_filled(board, cell)
    return Cell(_step(board.col_rows[j - 1], i, direction), j)


def move(board: Board, orientation: Orientation, cell) -> Cell:
    orientation.check(board)
    i, j = _require_filled(board, cell)
    mid = Cell(i, _step(board.row_cols[i - 1], j, orientation.r[i - 1]))
    jm = mid.col
    return Cell(_step(board.col_rows[jm - 1], i, orientation.c[jm - 1]), jm)


def move_table(board: Board, orientation: Orientation) -> list[int]:
    """The move function as a list over cell ids (see :attr:`Board.cells`)."""
    orientation.check(board)
    idx = board.index
    out = []
    for i, j in board.cells:
        jm = _step(board.row_cols[i - 1], j, orientation.r[i - 1])
        im = _step(board.col_rows[jm - 1], i, orientation.c[jm - 1])
        out.append(idx[(im, jm)])
    return out


def tour(board: Board, orientation: Orientation, start=None) -> Tour:
    """Iterate the move function from ``start`` until it comes back.

    ``start`` defaults to the first filled cell in row-major order.
    """
    orientation.check(board)
    start = board.cells[0] if start is None else _require_filled(board, start)
    total = len(board.filled)
    cells = [start]
    cur = move(board, orientation, start)
    while cur != start:
        cells.append(cur)
        # move is a bijection, so only a broken board could get here
        assert len(cells) <= total, "move function is not a permutation of the filled cells"
        cur = move(board, orientation, cur)
    return Tour(start, tuple(cells), len(cells) == total)


def is_solution(board: Board, orientation: Orientation) -> bool:
    # one start suffices: coverage does not depend on where the tour begins
    perm = move_table(board, orientation)
    x, steps = perm[0], 1
    while x != 0:
        x = perm[x]
        steps += 1
    return steps == len(perm)


def cycle_structure(board: Board, orientation: Orientation) -> list[Tour]:
    """Decompose the move function into its disjoint closed tours."""
    perm = move_table(board, orientation)
    cells = board.cells
    seen = [False] * len(perm)
    total = len(perm)
    tours = []
    for x0 in range(total):
        if seen[x0]:
            continue
        cyc = []
        x = x0
        while not seen[x]:
            seen[x] = True
            cyc.append(cells[x])
            x = perm[x]
        tours.append(Tour(cells[x0], tuple(cyc), len(cyc) == total))
    return tours
