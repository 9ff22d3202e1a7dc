"""Tours of the row/column move function on toroidal partially filled boards."""

from .core import (Board, Cell, Orientation, Tour, column_successor, cycle_structure, is_solution, move,
                   row_successor, tour, validate)
from .search import SearchOutcome, exhaustive
from .solvers import SolveReport, solve

__all__ = [
    "Board", "Cell", "Orientation", "Tour", "validate", "row_successor", "column_successor", "move",
    "tour", "is_solution", "cycle_structure", "SearchOutcome", "exhaustive", "SolveReport", "solve",
]

__version__ = "0.1.0"
