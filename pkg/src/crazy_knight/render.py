"""Step-numbered text grids of a tour, with the orientation drawn as arrows."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Board, Orientation, tour

UNICODE_ARROWS = {"right": "→", "left": "←", "down": "↓", "up": "↑"}
ASCII_ARROWS = {"right": ">", "left": "<", "down": "v", "up": "^"}


@dataclass(frozen=True)
class RenderedTour:
    """``grid[i][j]`` is the step label of cell ``(i+1, j+1)``.

    Labels are strings: the number of moves from the start for cells on the
    tour, ``*`` for filled cells the tour misses, empty for empty cells.
    """

    grid: tuple[tuple[str, ...], ...]
    row_arrows: tuple[str, ...]
    col_arrows: tuple[str, ...]
    covers_all: bool

    def text(self) -> str:
        width = max([len(x) for row in self.grid for x in row] + [1])
        head = " " * 2 + " ".join(a.rjust(width) for a in self.col_arrows)
        lines = [head.rstrip()]
        for arrow, row in zip(self.row_arrows, self.grid):
            lines.append((arrow + " " + " ".join(x.rjust(width) for x in row)).rstrip())
        return "\n".join(lines) + "\n"


def render_tour(board: Board, orientation: Orientation, start=None, ascii: bool = False) -> RenderedTour:
    arrows = ASCII_ARROWS if ascii else UNICODE_ARROWS
    t = tour(board, orientation, start)
    labels = t.labels()
    grid = tuple(
        tuple(str(labels[(i, j)]) if (i, j) in labels else ("*" if (i, j) in board.filled else "")
              for j in range(1, board.m + 1))
        for i in range(1, board.n + 1)
    )
    rows = tuple(arrows["right"] if x > 0 else arrows["left"] for x in orientation.r)
    cols = tuple(arrows["down"] if x > 0 else arrows["up"] for x in orientation.c)
    return RenderedTour(grid, rows, cols, t.covers_all)


def parse_label_grid(text: str) -> dict[tuple[int, int], int]:
    """Read back the numeric labels of :meth:`RenderedTour.text` as ``{(row, col): label}``.

    Only used for round-tripping; column positions are recovered from the
    fixed-width layout.
    """
    lines = text.rstrip("\n").split("\n")
    body = lines[1:]
    width = None
    out = {}
    for i, line in enumerate(body, 1):
        cells = line[2:]
        if width is None:
            ncols = len(lines[0][2:].split())
            width = (len(lines[0]) - 2 - (ncols - 1)) // ncols if ncols else 1
        for j in range(0, len(cells), width + 1):
            tok = cells[j:j + width].strip()
            if tok.isdigit():
                out[(i, j // (width + 1) + 1)] = int(tok)
    return out
