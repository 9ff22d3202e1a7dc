import itertools
from math import gcd

import pytest

from crazy_knight.analysis import MinusPositions, classify
from crazy_knight.core import Board, Orientation, is_solution, tour
from crazy_knight.errors import (EmbeddingCollision, ExtraCellInsideBlock, InvalidFamilyParameters,
                                 PositionsOutOfRange, SelfVerificationFailed)
from crazy_knight.generators import (DiagonalSet, gen_almost, gen_cyclic_kdiagonal, gen_kdiagonal,
                                     gen_totally_filled, gen_width_kdiagonal, shift, width_diagonals)
from crazy_knight.search import exhaustive
from crazy_knight.solvers import (almost_necessary_keven, compose_block, extend_cyclic_solution, solve,
                                  solve_almost_kdiagonal, solve_cyclic_kdiagonal, solve_totally_filled,
                                  solve_width_kdiagonal)
from crazy_knight.solvers.almost_kdiagonal import C_ELL, CLASSES, GCD_E
from crazy_knight.solvers.cyclic_kdiagonal import base_positions, base_window_size, explicit_positions
from crazy_knight.solvers.report import CLOSED, FAMILY, PARITY, PROVEN_NONE, SOLUTION, UNKNOWN
from crazy_knight.solvers.totally_filled import staircase_orientation, staircase_solves

from reference_tables import ALMOST_14X14, BLOCK_DIAGONAL, BLOCK_INTERLEAVED, COPRIME_5X14, EX5_7X7, parse


def minus(n, positions):
    return Orientation.from_minus_positions(n, n, positions)


class TestTotallyFilled:
    def test_5x14(self):
        rep = solve_totally_filled(5, 14)
        assert rep.verdict == SOLUTION
        assert rep.orientation == Orientation((1,) * 5, (1,) * 8 + (-1,) * 6)

    def test_4x4(self):
        rep = solve_totally_filled(4, 4)
        assert (rep.verdict, rep.reason) == (PROVEN_NONE, PARITY)
        assert rep.orientation is None

    def test_1x1(self):
        rep = solve_totally_filled(1, 1)
        assert rep.orientation == Orientation((1,), (1,)) and rep.tour_length == 1

    def test_coprime_example_table(self):
        r, c, labels = parse(COPRIME_5X14)
        o = Orientation(r, c)
        assert o == staircase_orientation(5, 14, 3)
        assert tour(gen_totally_filled(5, 14), o, (1, 1)).labels() == labels

    def test_closed_form_matches_simulation(self):
        for n in range(1, 7):
            for m in range(1, 9):
                for tail in range(m + 1):
                    o = staircase_orientation(n, m, tail)
                    assert staircase_solves(n, m, tail) == is_solution(gen_totally_filled(n, m), o), (n, m, tail)

    def test_grid(self):
        for n in range(1, 12):
            for m in range(1, 12):
                rep = solve_totally_filled(n, m)
                assert rep.solved == (n % 2 == 1 or m % 2 == 1)


class TestCyclic:
    def test_gcd_one(self):
        rep = solve_cyclic_kdiagonal(7, 3)
        assert rep.orientation == minus(7, [1])

    def test_k_even(self):
        rep = solve_cyclic_kdiagonal(9, 4)
        assert (rep.verdict, rep.reason) == (PROVEN_NONE, PARITY)

    def test_k_one(self):
        assert solve_cyclic_kdiagonal(5, 1).reason == CLOSED

    def test_n_equals_k(self):
        assert solve_cyclic_kdiagonal(5, 5).solved
        assert solve_cyclic_kdiagonal(4, 4).verdict == PROVEN_NONE

    def test_lifted_15_7(self):
        assert base_window_size(15, 7) == 9
        e = base_positions(9, 7)
        rep = solve_cyclic_kdiagonal(15, 7)
        assert rep.solved and "n=9" in rep.method
        assert rep.orientation == extend_cyclic_solution(e, 9, 7, 1)
        assert is_solution(gen_cyclic_kdiagonal(15, 7), rep.orientation)

    def test_explicit_k7_n33(self):
        assert explicit_positions(33, 7) == (1, 2, 3, 9, 15, 21, 27)
        rep = solve_cyclic_kdiagonal(33, 7)
        assert rep.solved and rep.tour_length == 231
        assert rep.orientation.minus_cols == (1, 2, 3, 9, 15, 21, 27)

    def test_all_small(self):
        for k in range(1, 12):
            for n in range(k, 34):
                rep = solve_cyclic_kdiagonal(n, k)
                if n == k:
                    continue
                expect = n % 2 == 1 and k % 2 == 1 and k != 1
                assert rep.solved == expect, (n, k)
                if expect:
                    assert rep.orientation.r == (1,) * n

    def test_ex5_orientation(self):
        r, c, labels = parse(EX5_7X7)
        o = Orientation(r, c)
        b = gen_cyclic_kdiagonal(7, 3)
        assert is_solution(b, o) and o.r != (1,) * 7
        assert tour(b, o, (1, 1)).labels() == labels

    @pytest.mark.parametrize("k", [3, 5, 7])
    def test_extension_soundness(self, k):
        for n in range(k + 2, 2 * k, 2):
            e = base_positions(n, k)
            for lam in (1, 2, 3):
                size = n + lam * (k - 1)
                assert is_solution(gen_cyclic_kdiagonal(size, k), extend_cyclic_solution(e, n, k, lam))

    def test_extension_identity_and_errors(self):
        e = solve_cyclic_kdiagonal(5, 3).orientation.minus_cols
        assert extend_cyclic_solution(e, 5, 3, 0) == minus(5, e)
        o = extend_cyclic_solution(e, 5, 3, 2)
        assert len(o.c) == 9 and is_solution(gen_cyclic_kdiagonal(9, 3), o)
        with pytest.raises(PositionsOutOfRange):
            extend_cyclic_solution([6], 5, 3, 1)
        with pytest.raises(PositionsOutOfRange):
            extend_cyclic_solution([], 5, 3, 1)


class TestWidth:
    def test_11x11(self):
        d = width_diagonals(11, 5, 3)
        rep = solve_width_kdiagonal(11, 5, 3, d)
        assert rep.solved and rep.orientation == minus(11, [1]) and rep.tour_length == 55

    def test_9_3_3_coprime(self):
        # two strips of width 3
        d = width_diagonals(9, 3, 3)
        rep = solve_width_kdiagonal(9, 3, 3, d)
        assert gcd(9, 4) == 1 and rep.solved

    def test_unknown(self):
        assert solve_width_kdiagonal(9, 3, 2, width_diagonals(9, 3, 2)).verdict == UNKNOWN

    def test_parity(self):
        rep = solve_width_kdiagonal(10, 4, 3, width_diagonals(10, 4, 3))
        assert (rep.verdict, rep.reason) == (PROVEN_NONE, PARITY)

    def test_malformed(self):
        with pytest.raises(InvalidFamilyParameters):
            solve_width_kdiagonal(9, 3, 2, DiagonalSet(9, frozenset({1, 2, 5})))
        with pytest.raises(InvalidFamilyParameters):
            solve_width_kdiagonal(9, 3, 3, DiagonalSet(9, frozenset({2, 5, 8})))

    def test_sweep(self):
        for n in range(5, 26):
            for k in range(3, n, 2):
                for s in range(1, n - k):
                    if (n - k) % s or not 2 <= (n - k) // s <= k:
                        continue
                    rep = solve_width_kdiagonal(n, k, s, width_diagonals(n, k, s))
                    if n % 2 == 0:
                        assert rep.verdict == PROVEN_NONE
                    else:
                        assert rep.solved == (gcd(n, s + 1) == 1), (n, k, s)


class TestAlmost:
    def test_14_7_5(self):
        rep = solve_almost_kdiagonal(14, 7, None, 5)
        assert rep.solved and rep.orientation.minus_cols == (2, 5) and rep.tour_length == 99
        r, c, labels = parse(ALMOST_14X14)
        assert Orientation(r, c) == rep.orientation
        assert tour(gen_almost(14, 7, 5), rep.orientation, (1, 1)).labels() == labels

    def test_5_2_4(self):
        rep = solve_almost_kdiagonal(5, 2, None, 4)
        assert rep.orientation.c == (1, 1, 1, -1, 1)

    def test_7_4_3(self):
        rep = solve_almost_kdiagonal(7, 4, None, 3)
        assert rep.orientation.minus_cols == (3,) and rep.tour_length == 29

    def test_kn_odd(self):
        assert solve_almost_kdiagonal(7, 3, None, 2).reason == PARITY

    def test_k_one(self):
        assert solve_almost_kdiagonal(4, 1, None, 2).reason == CLOSED
        assert solve_almost_kdiagonal(2, 1, None, 2).solved

    def test_gcd_two_branch(self):
        # k odd, width s with gcd(n, s+1) = 2, ell even
        rep = solve_almost_kdiagonal(8, 3, None, 2)
        assert rep.solved and rep.orientation.minus_cols == (1,)

    def test_open_case_unknown(self):
        # k = 1 mod 4, ell odd, gcd(n, k-1) = 2
        rep = solve_almost_kdiagonal(10, 5, None, 3)
        assert rep.verdict == UNKNOWN

    def test_not_standard(self):
        with pytest.raises(InvalidFamilyParameters):
            solve_almost_kdiagonal(7, 4, None, 5)
        with pytest.raises(InvalidFamilyParameters):
            solve_almost_kdiagonal(7, 4, 2, 3)

    def test_necessary_keven_examples(self):
        assert almost_necessary_keven(9, 4, 2, [1, 3, 5]) == [C_ELL]
        assert GCD_E in almost_necessary_keven(11, 8, 2, [1, 2])
        # 2 is not in E either, so both are reported
        assert almost_necessary_keven(9, 4, 2, [3]) == [C_ELL, CLASSES]
        assert almost_necessary_keven(9, 4, 2, [2]) == [CLASSES]

    def test_necessary_keven_holds_on_solutions(self):
        for k in (4, 6):
            for n in range(k + 1, 12):
                for ell in range(2, n - k + 2):
                    b = gen_almost(n, k, ell)
                    out = exhaustive(b, restrict_rows_to_plus_one=True)
                    if out.found is not None:
                        assert almost_necessary_keven(n, k, ell, out.found.minus_cols) == []
                    for t in (1, 2, 3):
                        for e in itertools.combinations(range(1, n + 1), t):
                            if is_solution(b, minus(n, e)):
                                assert almost_necessary_keven(n, k, ell, e) == [], (n, k, ell, e)


def block_parts():
    r, c, _ = parse(EX5_7X7)
    b1, s1 = gen_cyclic_kdiagonal(7, 3), Orientation(r, c)
    b2, s2 = gen_totally_filled(3, 4), Orientation((1, 1, 1), (1, 1, 1, -1))
    return b1, s1, b2, s2


class TestCompose:
    def test_block_diagonal(self):
        b1, s1, b2, s2 = block_parts()
        board, o = compose_block(b1, s1, b2, s2, extra=(9, 3))
        assert (board.n, board.m, len(board)) == (10, 11, 34)
        r, c, labels = parse(BLOCK_DIAGONAL)
        assert o == Orientation(r, c)
        assert tour(board, o, (9, 3)).labels() == labels

    def test_interleaved(self):
        b1, s1, b2, s2 = block_parts()
        board, o = compose_block(b1, s1, b2, s2, extra=(9, 3),
                                 row_embedding=([1, 2, 3, 4, 5, 7, 8], [6, 9, 10]),
                                 col_embedding=([1, 2, 3, 4, 5, 8, 9], [6, 7, 10, 11]))
        r, c, labels = parse(BLOCK_INTERLEAVED)
        assert o == Orientation(r, c)
        assert tour(board, o, (9, 3)).labels() == labels

    def test_with_single_cell(self):
        b1 = gen_totally_filled(3, 5)
        s1 = solve_totally_filled(3, 5).orientation
        b2 = Board.from_cells(1, 1, [(1, 1)])
        for extra in ((4, 2), (2, 6)):
            board, o = compose_block(b1, s1, b2, Orientation((1,), (-1,)), extra=extra)
            assert (board.n, board.m) == (4, 6) and is_solution(board, o)

    def test_corrupted_input_fails(self):
        b1, s1, b2, s2 = block_parts()
        bad = Orientation(s2.r, (1, 1, -1, -1))
        assert not is_solution(b2, bad)
        with pytest.raises(SelfVerificationFailed):
            compose_block(b1, s1, b2, bad)
        board, o = compose_block(b1, s1, b2, bad, verify=False)
        assert not is_solution(board, o)

    def test_iff_exhaustive_small(self):
        b1 = gen_totally_filled(1, 2)
        b2 = gen_totally_filled(2, 1)
        for r1, c1 in itertools.product(itertools.product((1, -1), repeat=1), itertools.product((1, -1), repeat=2)):
            for r2, c2 in itertools.product(itertools.product((1, -1), repeat=2),
                                            itertools.product((1, -1), repeat=1)):
                o1, o2 = Orientation(r1, c1), Orientation(r2, c2)
                board, o = compose_block(b1, o1, b2, o2, verify=False)
                assert is_solution(board, o) == (is_solution(b1, o1) and is_solution(b2, o2))

    def test_default_extra(self):
        b1, s1, b2, s2 = block_parts()
        board, _ = compose_block(b1, s1, b2, s2)
        assert (8, 1) in board and len(board) == 34

    def test_errors(self):
        b1, s1, b2, s2 = block_parts()
        with pytest.raises(ExtraCellInsideBlock):
            compose_block(b1, s1, b2, s2, extra=(1, 1))
        with pytest.raises(EmbeddingCollision):
            compose_block(b1, s1, b2, s2, row_embedding=([1, 2, 3, 4, 5, 6, 7], [7, 8, 9]))
        with pytest.raises(EmbeddingCollision):
            compose_block(b1, s1, b2, s2, row_embedding=([1, 2, 3], [4, 5, 6]))


class TestDispatch:
    def test_ex0_by_search(self, ex0):
        rep = solve(ex0)
        assert rep.solved and rep.method.startswith("search")

    def test_6x6_cyclic(self):
        rep = solve(gen_cyclic_kdiagonal(6, 3))
        assert (rep.verdict, rep.reason) == (PROVEN_NONE, PARITY)

    def test_9_width_2_closed(self):
        rep = solve(gen_width_kdiagonal(9, 3, 2))
        assert (rep.verdict, rep.reason) == (PROVEN_NONE, CLOSED)

    def test_shifted_families(self):
        cases = [gen_cyclic_kdiagonal(15, 7), gen_width_kdiagonal(11, 5, 3), gen_almost(14, 7, 5),
                 gen_almost(7, 4, 3)]
        for base in cases:
            for dr, dc in ((0, 0), (3, 1), (5, 9)):
                b = shift(base, dr, dc)
                rep = solve(b)
                assert rep.solved and not rep.method.startswith("search"), (dr, dc, rep)
                assert is_solution(b, rep.orientation)

    def test_search_fallback_on_other(self):
        b = gen_kdiagonal(DiagonalSet(7, frozenset({1, 2, 4})))
        rep = solve(b)
        ref = exhaustive(b)
        assert rep.solved == (ref.found is not None)

    def test_exhaustion_is_unknown(self):
        # parity and closure hold but no orientation works
        b = Board.from_cells(2, 2, [(1, 1), (1, 2), (2, 1)])
        rep = solve(b)
        if rep.verdict == UNKNOWN:
            assert rep.exhausted
        else:
            assert rep.solved

    def test_budget_inconclusive(self):
        b = gen_kdiagonal(DiagonalSet(11, frozenset({1, 2, 4, 6, 9})))
        rep = solve(b, budget=1)
        assert rep.verdict in (SOLUTION, UNKNOWN, PROVEN_NONE)
        if rep.verdict == UNKNOWN:
            assert not rep.exhausted

    def test_report_dict(self, ex0):
        d = solve(ex0).to_dict()
        assert d["verdict"] == SOLUTION and set(d["orientation"]) == {"r", "c"}


def _search_has(board):
    return exhaustive(board).found is not None


class TestOracleAgreement:
    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_cyclic(self, k):
        for n in range(k + 1, 12):
            rep = solve_cyclic_kdiagonal(n, k)
            if rep.verdict == UNKNOWN:
                continue
            assert rep.solved == _search_has(gen_cyclic_kdiagonal(n, k)), (n, k)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_almost(self, k):
        for n in range(k + 1, 10):
            for ell in range(2, n - k + 2):
                b = gen_almost(n, k, ell)
                if len(b) == n * n:
                    continue
                rep = solve_almost_kdiagonal(n, k, None, ell)
                if rep.verdict == UNKNOWN:
                    continue
                assert rep.solved == _search_has(b), (n, k, ell)

    def test_dispatch_proven_none_sound(self):
        for n in range(2, 8):
            for k in range(1, n):
                b = gen_cyclic_kdiagonal(n, k)
                rep = solve(b)
                if rep.verdict == PROVEN_NONE:
                    assert not _search_has(b)
                assert classify(b).k == k


def test_family_reason_constant_exists():
    assert FAMILY == "FamilyNecessaryCondition"
    assert MinusPositions((2, 5)).t == 2
