from __future__ import annotations

import logging

from .. import analysis
from ..core import Board, Orientation, validate
from ..errors import BaseCaseSearchFailed
from ..generators import DiagonalSet
from ..search import DEFAULT_CEILING, exhaustive
from .almost_kdiagonal import solve_almost_kdiagonal
from .cyclic_kdiagonal import solve_cyclic_kdiagonal
from .report import CLOSED, PARITY, SOLUTION, SolveReport, certified, proven_none, unknown
from .totally_filled import solve_totally_filled
from .width_kdiagonal import solve_width_kdiagonal

log = logging.getLogger(__name__)


def _unshift(orientation: Orientation, dr: int, dc: int) -> Orientation:
    # board cell (i, j) sits at (i + dr, j + dc) in standard form
    n, m = len(orientation.r), len(orientation.c)
    return Orientation(tuple(orientation.r[(i + dr) % n] for i in range(n)),
                       tuple(orientation.c[(j + dc) % m] for j in range(m)))


def _family_report(board: Board, profile: analysis.FamilyProfile) -> SolveReport:
    n = board.n
    dr, dc = profile.standard_form_shift
    kind = profile.kind
    if kind == analysis.TOTALLY_FILLED:
        return solve_totally_filled(board.n, board.m)
    diags = DiagonalSet(n, frozenset((d - 1 + dr - dc) % n + 1 for d in profile.diagonals)) \
        if profile.diagonals else None
    if kind == analysis.CYCLIC:
        rep = solve_cyclic_kdiagonal(n, profile.k)
    elif kind == analysis.WIDTH:
        rep = solve_width_kdiagonal(n, profile.k, profile.s, diags)
    elif kind == analysis.ALMOST:
        rep = solve_almost_kdiagonal(n, profile.k, profile.s, profile.ell, diags)
    else:
        return unknown(f"no construction for family {kind}")
    if rep.verdict != SOLUTION:
        return rep
    return certified(board, _unshift(rep.orientation, dr, dc), rep.method)


def solve(board: Board, budget: int | None = None, threads: int = 1,
          ceiling: int = DEFAULT_CEILING) -> SolveReport:
    """Decide a board: necessary conditions, then family constructions, then brute force.

    Falls back to a search with R pinned to +1, then to the unrestricted search
    when ``n + m`` is within ``ceiling`` (or a ``budget`` caps it).
    """
    validate(board)
    if not analysis.parity_ok(board):
        return proven_none("necessary conditions", PARITY,
                           f"|F(A)| = {len(board.filled)} must be congruent to n + m - 1 mod 2")
    closed, witness = analysis.minimal_closed(board)
    if not closed:
        return proven_none("necessary conditions", CLOSED,
                           f"proper closed subarray rows={list(witness.rows)} cols={list(witness.cols)}")
    profile = analysis.classify(board)
    try:
        rep = _family_report(board, profile)
    except BaseCaseSearchFailed as exc:
        log.warning("base case search failed: %s", exc)
        rep = unknown(f"base case search failed: {exc}")
    if rep.verdict != "Unknown":
        return rep

    tested = 0
    if board.m <= ceiling or budget is not None:
        out = exhaustive(board, True, budget, threads, ceiling)
        tested += out.tested
        if out.found is not None:
            return certified(board, out.found, "search: R pinned to +1", tested)
    if board.n + board.m <= ceiling or budget is not None:
        out = exhaustive(board, False, budget, threads, ceiling)
        tested += out.tested
        if out.found is not None:
            return certified(board, out.found, "search: unrestricted", tested)
        if out.exhausted:
            return unknown("search: exhausted, no orientation solves the board", tested, exhausted=True)
        return unknown("search: budget spent without a solution", tested)
    return unknown(f"{rep.method}; board too large for the search ceiling", tested or None)
