from __future__ import annotations

from dataclasses import dataclass

from ..core import Board, Orientation, is_solution
from ..errors import SelfVerificationFailed

SOLUTION = "Solution"
PROVEN_NONE = "ProvenNone"
UNKNOWN = "Unknown"

PARITY = "ParityViolation"
CLOSED = "ClosedSubarray"
FAMILY = "FamilyNecessaryCondition"


@dataclass(frozen=True)
class SolveReport:
    """Outcome of a solver.

    ``reason`` is one of the three reason codes above and ``detail`` names the
    violated condition. ``exhausted`` marks an Unknown verdict reached by an
    unrestricted search that tried every orientation.
    """

    verdict: str
    method: str
    orientation: Orientation | None = None
    reason: str | None = None
    detail: str | None = None
    tour_length: int | None = None
    tested: int | None = None
    exhausted: bool = False

    @property
    def solved(self) -> bool:
        return self.verdict == SOLUTION

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.verdict, "method": self.method}
        if self.reason is not None:
            out["reason"] = self.reason
            out["detail"] = self.detail
        if self.orientation is not None:
            out["orientation"] = {"r": list(self.orientation.r), "c": list(self.orientation.c)}
        if self.tour_length is not None:
            out["tour_length"] = self.tour_length
        if self.tested is not None:
            out["tested"] = self.tested
        if self.exhausted:
            out["exhausted"] = True
        return out


def certified(board: Board, orientation: Orientation, method: str, tested: int | None = None) -> SolveReport:
    """Wrap a constructed orientation, refusing to report it unless it really solves the board."""
    if not is_solution(board, orientation):
        raise SelfVerificationFailed(f"{method} produced a non-solution on a {board.n}x{board.m} board")
    return SolveReport(SOLUTION, method, orientation, tour_length=len(board.filled), tested=tested)


def proven_none(method: str, reason: str, detail: str) -> SolveReport:
    return SolveReport(PROVEN_NONE, method, reason=reason, detail=detail)


def unknown(method: str, tested: int | None = None, exhausted: bool = False) -> SolveReport:
    return SolveReport(UNKNOWN, method, tested=tested, exhausted=exhausted)
