"""Gluing two solved boards into one with a single extra cell."""

from __future__ import annotations

from typing import Sequence

from ..core import Board, Cell, Orientation, is_solution
from ..errors import EmbeddingCollision, ExtraCellInsideBlock, SelfVerificationFailed


def _embedding(size1: int, size2: int, given, axis: str) -> tuple[list[int], list[int]]:
    total = size1 + size2
    if given is None:
        return list(range(1, size1 + 1)), list(range(size1 + 1, total + 1))
    first, second = (list(x) for x in given)
    if len(first) != size1 or len(second) != size2:
        raise EmbeddingCollision(f"{axis} embedding sizes {len(first)}, {len(second)} "
                                 f"do not match blocks of {size1} and {size2}")
    if sorted(first + second) != list(range(1, total + 1)):
        raise EmbeddingCollision(f"{axis} embedding must split 1..{total} into two disjoint lists")
    return first, second


def compose_block(b1: Board, sol1: Orientation, b2: Board, sol2: Orientation,
                  extra: tuple[int, int] | None = None,
                  row_embedding: Sequence[Sequence[int]] | None = None,
                  col_embedding: Sequence[Sequence[int]] | None = None,
                  verify: bool = True) -> tuple[Board, Orientation]:
    """Place two boards in disjoint rows and columns of a larger board and add one extra cell.

    ``row_embedding`` is a pair ``(rows_of_b1, rows_of_b2)`` listing, in order,
    the composite rows that receive each block's rows (block-diagonal when
    omitted); ``col_embedding`` likewise. ``extra`` must lie in the rows of one
    block and the columns of the other; it defaults to the first row of ``b2``
    and first column of ``b1``. The composite orientation carries each block's
    entries to the embedded positions, and is a solution exactly when both
    block orientations are.
    """
    sol1.check(b1)
    sol2.check(b2)
    rows1, rows2 = _embedding(b1.n, b2.n, row_embedding, "row")
    cols1, cols2 = _embedding(b1.m, b2.m, col_embedding, "column")
    n, m = b1.n + b2.n, b1.m + b2.m
    extra = Cell(rows2[0], cols1[0]) if extra is None else Cell(*extra)
    off_block = (extra.row in rows1 and extra.col in cols2) or (extra.row in rows2 and extra.col in cols1)
    if not off_block:
        raise ExtraCellInsideBlock(f"extra cell {tuple(extra)} must lie outside both blocks")

    cells = {Cell(rows1[i - 1], cols1[j - 1]) for i, j in b1.filled}
    cells |= {Cell(rows2[i - 1], cols2[j - 1]) for i, j in b2.filled}
    cells.add(extra)
    r = [0] * n
    c = [0] * m
    for src, rows, cols in ((sol1, rows1, cols1), (sol2, rows2, cols2)):
        for x, i in zip(src.r, rows):
            r[i - 1] = x
        for x, j in zip(src.c, cols):
            c[j - 1] = x
    board = Board.from_cells(n, m, cells)
    orientation = Orientation(tuple(r), tuple(c))
    if verify and not is_solution(board, orientation):
        raise SelfVerificationFailed("composite orientation does not solve the composite board; "
                                     "are both block orientations solutions?")
    return board, orientation
