"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CrazyKnightError(Exception):
    """Base class for all errors raised by this package."""


class BoardError(CrazyKnightError, ValueError):
    pass


class EmptyRow(BoardError):
    def __init__(self, row: int):
        super().__init__(f"row {row} has no filled cell")
        self.row = row


class EmptyColumn(BoardError):
    def __init__(self, col: int):
        super().__init__(f"column {col} has no filled cell")
        self.col = col


class EmptyBoard(BoardError):
    def __init__(self):
        super().__init__("board has no filled cell")


class CellNotFilled(BoardError):
    def __init__(self, cell):
        super().__init__(f"cell {tuple(cell)} is not a filled cell of the board")
        self.cell = cell


class DimensionMismatch(CrazyKnightError, ValueError):
    pass


class BoardFormatError(CrazyKnightError, ValueError):
    pass


class InvalidFamilyParameters(CrazyKnightError, ValueError):
    pass


class PositionsOutOfRange(CrazyKnightError, ValueError):
    pass


class BaseCaseSearchFailed(CrazyKnightError, RuntimeError):
    """A base-window search that is expected to succeed exhausted without a hit."""


class BudgetZero(CrazyKnightError, ValueError):
    pass


class SearchCeilingExceeded(CrazyKnightError, ValueError):
    pass


class EmbeddingCollision(CrazyKnightError, ValueError):
    pass


class ExtraCellInsideBlock(CrazyKnightError, ValueError):
    pass


class SelfVerificationFailed(CrazyKnightError, RuntimeError):
    """A construction produced an orientation that does not solve its board."""
