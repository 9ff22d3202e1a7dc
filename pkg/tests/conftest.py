from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import strategies as st

from crazy_knight.core import Board, Orientation
from crazy_knight.formats import parse_board

EX0_TEXT = """\
4 4
#..#
.##.
.###
#.#.
"""

# 7x9 board with two components: rows {2,4,5} x cols {1,2,3,5,7,8,9} and the rest
CLOSED_7X9_TEXT = """\
7 9
...#.....
#.#.#.###
...#.#...
###.#.###
###.#.#..
...#.#...
...#.#...
"""


@pytest.fixture
def ex0() -> Board:
    return parse_board(EX0_TEXT)


@pytest.fixture
def ex0_solution() -> Orientation:
    return Orientation((-1, 1, 1, -1), (1, -1, 1, 1))


# -- independent reference implementation --------------------------------
# Deliberately naive: scans k = 1, 2, ... with modular arithmetic instead of
# using the sorted row/column indexes of the package.


def naive_move(filled, n, m, r, c, cell):
    i, j = cell
    for k in range(1, m + 1):
        jj = (j - 1 + r[i - 1] * k) % m + 1
        if (i, jj) in filled:
            break
    for k in range(1, n + 1):
        ii = (i - 1 + c[jj - 1] * k) % n + 1
        if (ii, jj) in filled:
            return (ii, jj)
    raise AssertionError("unreachable")


def naive_orbit(filled, n, m, r, c, start):
    out = [start]
    cur = naive_move(filled, n, m, r, c, start)
    while cur != start:
        out.append(cur)
        cur = naive_move(filled, n, m, r, c, cur)
    return out


def naive_solves(filled, n, m, r, c) -> bool:
    start = min(filled)
    return len(naive_orbit(filled, n, m, r, c, start)) == len(filled)


def all_orientations(n, m):
    for signs in itertools.product((1, -1), repeat=n + m):
        yield signs[:n], signs[n:]


def naive_solutions(board: Board) -> list[tuple]:
    """Every solving (R, C) in lexicographic order, by plain enumeration."""
    filled = set(board.filled)
    return [(r, c) for r, c in all_orientations(board.n, board.m)
            if naive_solves(filled, board.n, board.m, r, c)]


def all_valid_boards(n, m):
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, m + 1)]
    for mask in range(1, 1 << len(cells)):
        chosen = [cells[t] for t in range(len(cells)) if mask >> t & 1]
        if len({i for i, _ in chosen}) == n and len({j for _, j in chosen}) == m:
            yield Board.from_cells(n, m, chosen)


@st.composite
def boards(draw, max_n=5, max_m=5):
    """Validated boards: random cells plus a covering staircase so no row or column is empty."""
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    cells = draw(st.sets(st.tuples(st.integers(1, n), st.integers(1, m)), max_size=n * m))
    perm_r = draw(st.permutations(range(1, n + 1)))
    perm_c = draw(st.permutations(range(1, m + 1)))
    for t in range(max(n, m)):
        cells.add((perm_r[t % n], perm_c[t % m]))
    return Board.from_cells(n, m, cells)


@st.composite
def boards_with_orientation(draw, max_n=5, max_m=5):
    b = draw(boards(max_n, max_m))
    r = tuple(draw(st.lists(st.sampled_from((1, -1)), min_size=b.n, max_size=b.n)))
    c = tuple(draw(st.lists(st.sampled_from((1, -1)), min_size=b.m, max_size=b.m)))
    return b, Orientation(r, c)


def seeded_boards(count: int, seed: int, max_n: int = 5, max_m: int = 5):
    rng = random.Random(seed)
    from crazy_knight.generators import random_board
    for _ in range(count):
        n, m = rng.randint(1, max_n), rng.randint(1, max_m)
        yield random_board(n, m, rng, density=rng.uniform(0.3, 0.9))
