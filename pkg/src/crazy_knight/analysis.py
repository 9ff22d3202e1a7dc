"""Necessary conditions, permutation algebra and board-family classification."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, Sequence

from .core import Board, Cell, Orientation, _step, move, move_table
from .errors import InvalidFamilyParameters
from .generators import diagonal_of, gen_cyclic_kdiagonal

TOTALLY_FILLED = "totally_filled"
K_DIAGONAL = "k_diagonal"
CYCLIC = "cyclically_k_diagonal"
WIDTH = "width_k_diagonal"
ALMOST = "almost_k_diagonal"
OTHER = "other"


# -- permutations --------------------------------------------------------


def cycles(perm: Mapping | Sequence) -> list[tuple]:
    """Cycle decomposition of a permutation given as a mapping or a list over range(len)."""
    items = perm.keys() if isinstance(perm, Mapping) else range(len(perm))
    seen = set()
    out = []
    for x0 in items:
        if x0 in seen:
            continue
        cyc = []
        x = x0
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return out


def sign(perm: Mapping | Sequence) -> int:
    cs = cycles(perm)
    return -1 if sum(len(c) - 1 for c in cs) % 2 else 1


def compose(outer: Mapping, inner: Mapping) -> dict:
    """``outer o inner``: apply ``inner`` first."""
    return {x: outer[inner[x]] for x in inner}


# -- necessary conditions ------------------------------------------------


def parity_ok(board: Board) -> bool:
    return len(board.filled) % 2 == (board.n + board.m - 1) % 2


@dataclass(frozen=True)
class ClosureWitness:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    proper: bool


def is_closed(board: Board, rows: Iterable[int], cols: Iterable[int]) -> bool:
    rows, cols = set(rows), set(cols)
    inter = {c for c in board.filled if c.row in rows and c.col in cols}
    union = {c for c in board.filled if c.row in rows or c.col in cols}
    return inter == union


class _DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def closed_components(board: Board) -> list[ClosureWitness]:
    """Minimal closed subarrays: the connected components of the row/column incidence graph.

    Rows are nodes ``0..n-1`` and columns ``n..n+m-1``; every filled cell joins
    its row to its column. Components are ordered by their smallest row.
    """
    n, m = board.n, board.m
    dsu = _DisjointSet(n + m)
    for i, j in board.filled:
        dsu.union(i - 1, n + j - 1)
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for v in range(n + m):
        rows, cols = groups.setdefault(dsu.find(v), ([], []))
        if v < n:
            rows.append(v + 1)
        else:
            cols.append(v - n + 1)
    comps = sorted(groups.values(), key=lambda rc: (rc[0] or [n + 1])[0])
    whole = len(comps) == 1
    return [ClosureWitness(tuple(r), tuple(c), not whole) for r, c in comps]


def minimal_closed(board: Board) -> tuple[bool, ClosureWitness | None]:
    """Whether the board has no proper closed subarray; otherwise one witness."""
    comps = closed_components(board)
    if len(comps) == 1:
        return True, None
    return False, comps[0]


def permutation_signs(board: Board, orientation: Orientation) -> tuple[int, int, int]:
    """Signs of the row sweep, the column sweep and the move permutation.

    The move permutation factors as ``column sweep o row sweep``, so the third
    sign is always the product of the first two.
    """
    orientation.check(board)
    idx = board.index
    row_perm = []
    col_perm = []
    for i, j in board.cells:
        row_perm.append(idx[(i, _step(board.row_cols[i - 1], j, orientation.r[i - 1]))])
        col_perm.append(idx[(_step(board.col_rows[j - 1], i, orientation.c[j - 1]), j)])
    return sign(row_perm), sign(col_perm), sign(move_table(board, orientation))


# -- minus positions and the omega permutations --------------------------


@dataclass(frozen=True)
class MinusPositions:
    e: tuple[int, ...]

    def __post_init__(self):
        e = tuple(sorted(set(int(x) for x in self.e)))
        object.__setattr__(self, "e", e)

    @property
    def t(self) -> int:
        return len(self.e)

    @classmethod
    def from_orientation(cls, orientation: Orientation) -> "MinusPositions":
        return cls(orientation.minus_cols)

    def covers_classes(self, d: int, allowed_missing: Iterable[int] = ()) -> bool:
        missing = set(range(d)) - {x % d for x in self.e}
        return missing <= {a % d for a in allowed_missing}


def _check_omega_params(n: int, k: int, e: Sequence[int]) -> None:
    if k < 3 or k % 2 == 0 or n <= k:
        raise InvalidFamilyParameters(f"need odd k >= 3 and n > k, got n={n}, k={k}")
    if not e:
        raise InvalidFamilyParameters("E must be non-empty")
    if e[0] < 1 or e[-1] > n:
        raise InvalidFamilyParameters(f"positions {list(e)} outside [1, {n}]")


def omega_maps(n: int, k: int, positions: MinusPositions | Iterable[int]) -> tuple[dict, dict, dict]:
    """``(omega_1, omega_2, omega)`` as dicts on E, with ``omega = omega_2 o omega_1``.

    ``omega_1(e)`` is the first element of E met walking down from ``e`` in steps
    of ``k - 1`` (mod n); ``omega_2`` advances the index in E by ``k - 1`` (mod |E|).
    """
    if not isinstance(positions, MinusPositions):
        positions = MinusPositions(tuple(positions))
    e = positions.e
    _check_omega_params(n, k, e)
    members = set(e)
    t = len(e)
    w1 = {}
    for x in e:
        y = x
        while True:
            y = (y - (k - 1) - 1) % n + 1
            if y in members:
                w1[x] = y
                break
    w2 = {e[i]: e[(i + k - 1) % t] for i in range(t)}
    return w1, w2, compose(w2, w1)


def omega_by_simulation(n: int, k: int, positions: MinusPositions | Iterable[int]) -> dict:
    """``omega`` read off the tour: from ``(e, e)`` follow the move function to the next ``(e', e')``."""
    if not isinstance(positions, MinusPositions):
        positions = MinusPositions(tuple(positions))
    e = positions.e
    _check_omega_params(n, k, e)
    board = gen_cyclic_kdiagonal(n, k)
    orient = Orientation.from_minus_positions(n, n, e)
    members = set(e)
    limit = len(board.filled)
    out = {}
    for x in e:
        cur = Cell(x, x)
        for _ in range(limit):
            cur = move(board, orient, cur)
            if cur.row == cur.col and cur.row in members:
                out[x] = cur.row
                break
    return out


def minus_set_conditions(n: int, k: int, positions: Iterable[int]) -> tuple[bool, bool]:
    """The two tests characterising solutions with R all +1 on a cyclically k-diagonal board.

    Returns (E covers every class mod gcd(n, k - 1), omega is a single |E|-cycle).
    """
    mp = positions if isinstance(positions, MinusPositions) else MinusPositions(tuple(positions))
    d = gcd(n, k - 1)
    _, _, w = omega_maps(n, k, mp)
    return mp.covers_classes(d), len(cycles(w)) == 1


# -- classification ------------------------------------------------------


@dataclass(frozen=True)
class FamilyProfile:
    kind: str
    k: int | None = None
    s: int | None = None
    extra: Cell | None = None
    standard_form_shift: tuple[int, int] = (0, 0)
    diagonals: tuple[int, ...] = ()
    strip_widths: tuple[int, ...] = ()
    cyclic: bool = False

    @property
    def ell(self) -> int | None:
        return None if self.extra is None else self.extra.col


def diagonal_runs(filled: set[int], n: int) -> tuple[list[int], list[int]]:
    """Start diagonals of filled runs and widths of empty strips, walking D_1..D_n cyclically."""
    starts = [d for d in range(1, n + 1) if d in filled and (d - 2) % n + 1 not in filled]
    widths = []
    for a in sorted(starts):
        w = 0
        d = (a - 2) % n + 1
        while d not in filled:
            w += 1
            d = (d - 2) % n + 1
        widths.append(w)
    return sorted(starts), widths


def classify(board: Board) -> FamilyProfile:
    """Detect the most specific family the board belongs to.

    ``standard_form_shift`` is the ``(dr, dc)`` translation (see
    :func:`generators.shift`) that brings the board to standard form.
    """
    n, m = board.n, board.m
    if len(board.filled) == n * m:
        return FamilyProfile(TOTALLY_FILLED, k=n if n == m else None)
    if n != m:
        return FamilyProfile(OTHER)
    counts: dict[int, list[Cell]] = {}
    for c in board.filled:
        counts.setdefault(diagonal_of(c, n), []).append(c)
    full = {d for d, cs in counts.items() if len(cs) == n}
    partial = {d: cs for d, cs in counts.items() if len(cs) < n}
    if not full:
        return FamilyProfile(OTHER)
    starts, widths = diagonal_runs(full, n)
    k = len(full)
    uniform = len(set(widths)) == 1

    if not partial:
        diags = tuple(sorted(full))
        dr = min((1 - a) % n for a in starts)
        if len(starts) == 1:
            return FamilyProfile(CYCLIC, k=k, s=n - k, standard_form_shift=(dr, 0),
                                 diagonals=diags, strip_widths=tuple(widths))
        if uniform:
            return FamilyProfile(WIDTH, k=k, s=widths[0], standard_form_shift=(dr, 0),
                                 diagonals=diags, strip_widths=tuple(widths))
        return FamilyProfile(K_DIAGONAL, k=k, standard_form_shift=(dr, 0),
                             diagonals=diags, strip_widths=tuple(widths))

    if len(partial) == 1:
        (x, cs), = partial.items()
        if len(cs) == 1:
            a, b = cs[0]
            f = x % n + 1
            while f not in full:
                f = f % n + 1
            dr = (1 - a) % n
            dc = (dr + f - 1) % n
            ell = (b - 1 + dc) % n + 1
            return FamilyProfile(ALMOST, k=k, s=widths[0] if uniform else None,
                                 extra=Cell(1, ell), standard_form_shift=(dr, dc),
                                 diagonals=tuple(sorted(full)), strip_widths=tuple(widths),
                                 cyclic=len(starts) == 1)
    return FamilyProfile(OTHER)
