"""Plain-text board and orientation formats.

Board::

    4 4
    #..#
    .##.
    .###
    #.#.

Orientation: first line is R as ``+``/``-`` characters, second line is C.
"""

from __future__ import annotations

from pathlib import Path

from .core import Board, Orientation
from .errors import BoardFormatError


def parse_board(text: str) -> Board:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise BoardFormatError("empty board text")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise BoardFormatError(f"expected 'n m' header, got {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    if n < 1 or m < 1:
        raise BoardFormatError(f"dimensions must be positive, got {n} {m}")
    rows = lines[1:]
    if len(rows) != n:
        raise BoardFormatError(f"expected {n} rows, got {len(rows)}")
    cells = []
    for i, row in enumerate(rows, 1):
        if len(row) != m or set(row) - {"#", "."}:
            raise BoardFormatError(f"row {i} must be {m} characters of '#' or '.', got {row!r}")
        cells.extend((i, j) for j, ch in enumerate(row, 1) if ch == "#")
    return Board.from_cells(n, m, cells)


def format_board(board: Board) -> str:
    return f"{board.n} {board.m}\n" + "\n".join(board.to_rows()) + "\n"


def _signs(line: str, what: str) -> tuple[int, ...]:
    if not line or set(line) - {"+", "-"}:
        raise BoardFormatError(f"{what} must be a non-empty string of '+'/'-', got {line!r}")
    return tuple(1 if ch == "+" else -1 for ch in line)


def parse_orientation(text: str) -> Orientation:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 2:
        raise BoardFormatError(f"orientation needs exactly 2 lines, got {len(lines)}")
    return Orientation(_signs(lines[0], "R"), _signs(lines[1], "C"))


def signs_to_str(v) -> str:
    return "".join("+" if x > 0 else "-" for x in v)


def format_orientation(orientation: Orientation) -> str:
    return f"{signs_to_str(orientation.r)}\n{signs_to_str(orientation.c)}\n"


def read_board(path) -> Board:
    try:
        return parse_board(Path(path).read_text())
    except OSError as exc:
        raise BoardFormatError(f"cannot read board file {path}: {exc}") from exc


def read_orientation(path) -> Orientation:
    try:
        return parse_orientation(Path(path).read_text())
    except OSError as exc:
        raise BoardFormatError(f"cannot read orientation file {path}: {exc}") from exc
