"""Brute-force search over orientation vectors.

Candidates are enumerated in lexicographic order on the concatenated vector
``R + C`` with +1 before -1, so R varies slowest. Each batch of candidates is
evaluated at once with numpy: the move function of every candidate is built as
a row of a ``(batch, cells)`` array and the orbit of cell 0 is followed for all
of them in lockstep, dropping a candidate as soon as its orbit closes early.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping

import numpy as np

from .core import Board, Orientation, _step
from .errors import BudgetZero, SearchCeilingExceeded

log = logging.getLogger(__name__)

DEFAULT_CEILING = 26
_BATCH_ELEMENTS = 1 << 21


@dataclass(frozen=True)
class SearchOutcome:
    found: Orientation | None
    tested: int
    restricted: bool
    total: int

    @property
    def exhausted(self) -> bool:
        """True when every candidate was examined and none solved the board."""
        return self.found is None and self.tested == self.total

    @property
    def inconclusive(self) -> bool:
        return self.found is None and self.tested < self.total


class _Tables:
    """Successor tables over cell ids, shared read-only by all workers."""

    def __init__(self, board: Board):
        idx = board.index
        cells = board.cells
        self.n, self.m, self.size = board.n, board.m, len(cells)
        self.row_of = np.array([i - 1 for i, _ in cells], dtype=np.intp)
        self.col_of = np.array([j - 1 for _, j in cells], dtype=np.intp)
        self.row_fwd = np.array([idx[(i, _step(board.row_cols[i - 1], j, 1))] for i, j in cells], dtype=np.intp)
        self.row_bwd = np.array([idx[(i, _step(board.row_cols[i - 1], j, -1))] for i, j in cells], dtype=np.intp)
        self.col_fwd = np.array([idx[(_step(board.col_rows[j - 1], i, 1), j)] for i, j in cells], dtype=np.intp)
        self.col_bwd = np.array([idx[(_step(board.col_rows[j - 1], i, -1), j)] for i, j in cells], dtype=np.intp)

    def first_hit(self, lo: int, hi: int, restricted: bool) -> int | None:
        """Smallest candidate index in ``[lo, hi)`` that solves the board."""
        n, m, size = self.n, self.m, self.size
        width = m if restricted else n + m
        codes = np.arange(lo, hi, dtype=np.int64)
        shifts = np.arange(width - 1, -1, -1, dtype=np.int64)
        bits = ((codes[:, None] >> shifts) & 1).astype(bool)
        if restricted:
            rbits = np.zeros((len(codes), n), dtype=bool)
            cbits = bits
        else:
            rbits, cbits = bits[:, :n], bits[:, n:]
        mid = np.where(rbits[:, self.row_of], self.row_bwd, self.row_fwd)
        up = np.take_along_axis(cbits, self.col_of[mid], axis=1)
        perm = np.where(up, self.col_bwd[mid], self.col_fwd[mid])

        live = np.arange(len(codes))
        pos = perm[:, 0]
        for _ in range(size - 1):
            keep = pos != 0
            if not keep.all():
                live, pos = live[keep], pos[keep]
                if live.size == 0:
                    return None
            pos = perm[live, pos]
        return lo + int(live[0]) if live.size else None


def code_to_orientation(code: int, n: int, m: int, restricted: bool) -> Orientation:
    width = m if restricted else n + m
    signs = [-1 if (code >> (width - 1 - p)) & 1 else 1 for p in range(width)]
    if restricted:
        return Orientation((1,) * n, tuple(signs))
    return Orientation(tuple(signs[:n]), tuple(signs[n:]))


def orientation_to_code(orientation: Orientation, restricted: bool = False) -> int:
    seq = orientation.c if restricted else orientation.r + orientation.c
    code = 0
    for x in seq:
        code = (code << 1) | (x < 0)
    return code


def exhaustive(board: Board, restrict_rows_to_plus_one: bool = False, budget: int | None = None,
               threads: int = 1, ceiling: int = DEFAULT_CEILING) -> SearchOutcome:
    """Lexicographically first solving orientation, or proof by exhaustion that none exists.

    ``budget`` caps the number of candidates examined; a capped search that
    finds nothing is inconclusive, never exhaustive. The unrestricted space
    holds ``2**(n+m)`` candidates and ``ceiling`` bounds its exponent unless a
    budget is given.
    """
    if budget is not None and budget <= 0:
        raise BudgetZero("budget must be a positive number of candidates")
    restricted = restrict_rows_to_plus_one
    width = board.m if restricted else board.n + board.m
    if width > ceiling and budget is None:
        raise SearchCeilingExceeded(
            f"{2 ** width} candidates exceed the search ceiling 2**{ceiling}; pass a budget")
    total = 1 << width
    limit = total if budget is None else min(budget, total)
    tables = _Tables(board)
    batch = max(1, _BATCH_ELEMENTS // max(1, tables.size + width))
    chunks = [(lo, min(lo + batch, limit)) for lo in range(0, limit, batch)]
    threads = max(1, threads)

    hit = None
    if threads == 1:
        for lo, hi in chunks:
            hit = tables.first_hit(lo, hi, restricted)
            if hit is not None:
                break
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for w in range(0, len(chunks), threads):
                wave = chunks[w:w + threads]
                hits = list(pool.map(lambda c: tables.first_hit(c[0], c[1], restricted), wave))
                found = [h for h in hits if h is not None]
                if found:
                    hit = min(found)
                    break
    if hit is None:
        log.debug("search over %d of %d candidates found nothing", limit, total)
        return SearchOutcome(None, limit, restricted, total)
    return SearchOutcome(code_to_orientation(hit, board.n, board.m, restricted), hit + 1, restricted, total)


@dataclass(frozen=True)
class CensusRow:
    params: tuple[tuple[str, Any], ...]
    has_solution: bool | None
    witness: Orientation | None
    tested: int


def census(generator: Callable[..., Board], parameter_sets: Iterable[Mapping[str, Any]],
           restrict_rows_to_plus_one: bool = False, budget: int | None = None,
           threads: int = 1) -> list[CensusRow]:
    """Run :func:`exhaustive` on ``generator(**params)`` for every parameter set.

    Rows come back sorted by parameters. ``has_solution`` is None when the
    search was inconclusive (budget hit, or a restricted search that found
    nothing, which proves nothing about unrestricted orientations).
    """
    rows = []
    for params in parameter_sets:
        board = generator(**params)
        out = exhaustive(board, restrict_rows_to_plus_one, budget, threads)
        if out.found is not None:
            has = True
        elif out.exhausted and not out.restricted:
            has = False
        else:
            has = None
        rows.append(CensusRow(tuple(sorted(params.items())), has, out.found, out.tested))
    rows.sort(key=lambda r: r.params)
    return rows
