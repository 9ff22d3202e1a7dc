"""Command-line front end.

Exit codes: 0 solution/success, 1 proven none or no solution, 2 unknown or
inconclusive, 64 usage error, 65 malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import analysis, generators
from .core import Board, Cell, cycle_structure, is_solution, tour, validate
from .errors import BoardError, BoardFormatError, CrazyKnightError, DimensionMismatch, InvalidFamilyParameters
from .formats import format_board, format_orientation, parse_board, read_board, read_orientation, signs_to_str
from .render import render_tour
from .search import census, exhaustive
from .solvers import (PROVEN_NONE, SOLUTION, SolveReport, solve, solve_almost_kdiagonal,
                      solve_cyclic_kdiagonal, solve_totally_filled, solve_width_kdiagonal)

EXIT_OK, EXIT_NONE, EXIT_UNKNOWN, EXIT_USAGE, EXIT_FORMAT = 0, 1, 2, 64, 65

FAMILIES = ("totally-filled", "kdiagonal", "cyclic", "width", "almost")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _range(text: str) -> list[int]:
    """``a:b`` (inclusive), ``a,b,c`` or a single integer."""
    if ":" in text:
        lo, _, hi = text.partition(":")
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError:
            raise UsageError(f"bad range {text!r}")
    return _ints(text)


def _emit(args, payload: dict, text: str) -> None:
    out = sys.stdout
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text)


def _load_board(path: str) -> Board:
    board = parse_board(sys.stdin.read()) if path == "-" else read_board(path)
    return validate(board)


# -- generate ------------------------------------------------------------


def build_family(family: str, n=None, m=None, k=None, s=None, ell=None, diagonals=None) -> Board:
    def need(**kw):
        missing = [name for name, v in kw.items() if v is None]
        if missing:
            raise UsageError(f"family {family} needs --{' --'.join(missing)}")

    if family == "totally-filled":
        need(n=n)
        return generators.gen_totally_filled(n, m if m is not None else n)
    if family == "kdiagonal":
        need(n=n, diagonals=diagonals)
        return generators.gen_kdiagonal(generators.DiagonalSet(n, frozenset(diagonals)))
    if family == "cyclic":
        need(n=n, k=k)
        return generators.gen_cyclic_kdiagonal(n, k)
    if family == "width":
        need(n=n, k=k, s=s)
        return generators.gen_width_kdiagonal(n, k, s)
    if family == "almost":
        need(n=n, k=k, ell=ell)
        return generators.gen_almost(n, k, ell)
    raise UsageError(f"unknown family {family!r}")


def cmd_generate(args) -> int:
    board = build_family(args.family, args.n, args.m, args.k, args.s, args.ell,
                         _ints(args.diagonals) if args.diagonals else None)
    if args.shift:
        dr, dc = (_ints(args.shift) + [0])[:2]
        board = generators.shift(board, dr, dc)
    text = format_board(board)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- analyze -------------------------------------------------------------


def cmd_analyze(args) -> int:
    board = _load_board(args.board)
    prof = analysis.classify(board)
    closed, witness = analysis.minimal_closed(board)
    payload = {
        "kind": prof.kind, "k": prof.k, "s": prof.s, "ell": prof.ell,
        "standard_form_shift": list(prof.standard_form_shift),
        "strip_widths": list(prof.strip_widths),
        "parity_ok": analysis.parity_ok(board),
        "minimal_closed": closed,
        "witness": None if witness is None else {"rows": list(witness.rows), "cols": list(witness.cols)},
    }
    lines = [f"{key}: {value}" for key, value in payload.items()]
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


# -- solve ---------------------------------------------------------------


def _report_exit(rep: SolveReport) -> int:
    if rep.verdict == SOLUTION:
        return EXIT_OK
    if rep.verdict == PROVEN_NONE or rep.exhausted:
        return EXIT_NONE
    return EXIT_UNKNOWN


def _report_text(rep: SolveReport) -> str:
    lines = [f"verdict: {rep.verdict}", f"method: {rep.method}"]
    if rep.reason:
        lines.append(f"reason: {rep.reason}: {rep.detail}")
    if rep.tested is not None:
        lines.append(f"tested: {rep.tested}")
    if rep.orientation is not None:
        lines.append(f"tour_length: {rep.tour_length}")
        lines.append("orientation:")
        lines.append(format_orientation(rep.orientation).rstrip("\n"))
    return "\n".join(lines) + "\n"


def solve_family(values: list[int], kind: str | None = None) -> SolveReport:
    """``n,m`` totally filled; ``n,k`` cyclic; ``n,k,s`` width; ``n,k,s,ell`` almost."""
    if kind == "totally-filled":
        if len(values) != 2:
            raise UsageError("totally filled needs --family n,m")
        return solve_totally_filled(*values)
    if len(values) == 2:
        return solve_cyclic_kdiagonal(*values)
    if len(values) == 3:
        n, k, s = values
        return solve_width_kdiagonal(n, k, s, generators.width_diagonals(n, k, s))
    if len(values) == 4:
        n, k, s, ell = values
        if s == n - k:
            return solve_almost_kdiagonal(n, k, s, ell)
        return solve_almost_kdiagonal(n, k, s, ell, generators.width_diagonals(n, k, s))
    raise UsageError("--family takes n,k or n,k,s or n,k,s,ell")


def cmd_solve(args) -> int:
    if args.family:
        rep = solve_family(_ints(args.family), args.kind)
    elif args.board:
        rep = solve(_load_board(args.board), budget=args.budget, threads=args.threads)
    else:
        raise UsageError("solve needs a board file or --family")
    _emit(args, rep.to_dict(), _report_text(rep))
    return _report_exit(rep)


# -- search / census -----------------------------------------------------


def cmd_search(args) -> int:
    board = _load_board(args.board)
    out = exhaustive(board, args.restrict_R, args.budget, args.threads)
    if out.found is not None:
        verdict, code = "Solution", EXIT_OK
    elif out.exhausted:
        verdict, code = ("Exhausted", EXIT_NONE) if not out.restricted else ("Inconclusive", EXIT_UNKNOWN)
    else:
        verdict, code = "Inconclusive", EXIT_UNKNOWN
    payload = {"verdict": verdict, "method": "search: " + ("R pinned to +1" if out.restricted else "unrestricted"),
               "tested": out.tested}
    text = f"verdict: {verdict}\ntested: {out.tested} of {out.total}\n"
    if out.found is not None:
        payload["orientation"] = {"r": list(out.found.r), "c": list(out.found.c)}
        payload["tour_length"] = len(board.filled)
        text += format_orientation(out.found)
    _emit(args, payload, text)
    return code


def _census_params(args) -> tuple[list[str], list[dict]]:
    fam = args.family
    ns = _range(args.n) if args.n else None
    if ns is None:
        raise UsageError("census needs --n")
    if fam == "totally-filled":
        ms = _range(args.m) if args.m else ns
        return ["n", "m"], [{"n": n, "m": m} for n in ns for m in ms]
    ks = _range(args.k) if args.k else None
    if fam == "cyclic":
        if ks is None:
            raise UsageError("census --family cyclic needs --k")
        return ["n", "k"], [{"n": n, "k": k} for k in ks for n in ns if n > k]
    if fam == "almost":
        if ks is None:
            raise UsageError("census --family almost needs --k")
        return ["n", "k", "ell"], [{"n": n, "k": k, "ell": ell} for k in ks for n in ns if n > k
                                   for ell in range(2, n - k + 2)]
    if fam == "width":
        ss = _range(args.s) if args.s else None
        if ks is None or ss is None:
            raise UsageError("census --family width needs --k and --s")
        return ["n", "k", "s"], [{"n": n, "k": k, "s": s} for n in ns for k in ks for s in ss
                                 if n > k and (n - k) % s == 0 and (n - k) // s <= k]
    raise UsageError(f"census does not support family {fam!r}")


_CENSUS_GEN = {
    "totally-filled": generators.gen_totally_filled,
    "cyclic": generators.gen_cyclic_kdiagonal,
    "width": generators.gen_width_kdiagonal,
    "almost": generators.gen_almost,
}


def cmd_census(args) -> int:
    names, params = _census_params(args)
    rows = census(_CENSUS_GEN[args.family], params, args.restrict_R, args.budget, args.threads)
    out = ["\t".join(names + ["has_solution", "witness_r", "witness_c", "tested"])]
    for row in rows:
        p = dict(row.params)
        has = {True: "yes", False: "no", None: "unknown"}[row.has_solution]
        wr = signs_to_str(row.witness.r) if row.witness else "-"
        wc = signs_to_str(row.witness.c) if row.witness else "-"
        out.append("\t".join([str(p[k]) for k in names] + [has, wr, wc, str(row.tested)]))
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


# -- verify / render -----------------------------------------------------


def cmd_verify(args) -> int:
    board = _load_board(args.board)
    orient = read_orientation(args.orientation)
    orient.check(board)
    ok = is_solution(board, orient)
    lengths = sorted((len(c) for c in cycle_structure(board, orient)), reverse=True)
    payload = {"verdict": "Solution" if ok else "NoSolution", "method": "verify",
               "orientation": {"r": list(orient.r), "c": list(orient.c)},
               "tour_length": lengths[0] if ok else len(tour(board, orient).cells), "cycles": lengths}
    text = f"verdict: {payload['verdict']}\ncycles: {' '.join(map(str, lengths))}\n"
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_NONE


def cmd_render(args) -> int:
    board = _load_board(args.board)
    orient = read_orientation(args.orientation)
    orient.check(board)
    start = Cell(*_ints(args.start)) if args.start else None
    rt = render_tour(board, orient, start, ascii=args.ascii)
    payload = {"verdict": "Solution" if rt.covers_all else "NoSolution", "method": "render",
               "grid": [list(r) for r in rt.grid], "row_arrows": list(rt.row_arrows),
               "col_arrows": list(rt.col_arrows)}
    _emit(args, payload, rt.text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="crazy-knight", description="Tours on toroidal partially filled boards.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp):
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    g = sub.add_parser("generate", help="emit a board of a given family")
    common(g)
    g.add_argument("--family", required=True, choices=FAMILIES)
    for flag in ("n", "m", "k", "s", "ell"):
        g.add_argument(f"--{flag}", type=int)
    g.add_argument("--diagonals", help="comma-separated diagonal indices, e.g. 1,4,6")
    g.add_argument("--shift", help="dr,dc translation applied after generation")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="family, necessary conditions and closure witness")
    common(a)
    a.add_argument("board")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("solve", help="construct or search for a solution")
    common(s)
    s.add_argument("board", nargs="?")
    s.add_argument("--family", help="n,k (cyclic) | n,k,s (width) | n,k,s,ell (almost) | n,m with --kind")
    s.add_argument("--kind", choices=["totally-filled"], help="reinterpret --family n,m as a totally filled board")
    s.add_argument("--budget", type=int)
    s.add_argument("--threads", type=int, default=1)
    s.set_defaults(func=cmd_solve)

    se = sub.add_parser("search", help="brute-force search over orientations")
    common(se)
    se.add_argument("board")
    se.add_argument("--restrict-R", dest="restrict_R", action="store_true")
    se.add_argument("--budget", type=int)
    se.add_argument("--threads", type=int, default=1)
    se.set_defaults(func=cmd_search)

    c = sub.add_parser("census", help="TSV table of search results over a family")
    c.add_argument("--family", required=True, choices=sorted(_CENSUS_GEN))
    for flag in ("n", "m", "k", "s"):
        c.add_argument(f"--{flag}", help="a:b, a,b,c or a single value")
    c.add_argument("--restrict-R", dest="restrict_R", action="store_true")
    c.add_argument("--budget", type=int)
    c.add_argument("--threads", type=int, default=1)
    c.set_defaults(func=cmd_census, json=False)

    v = sub.add_parser("verify", help="check an orientation and list its cycle lengths")
    common(v)
    v.add_argument("board")
    v.add_argument("orientation")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="print the step-numbered tour grid")
    common(r)
    r.add_argument("board")
    r.add_argument("orientation")
    r.add_argument("--start", help="i,j start cell (default: first filled cell)")
    r.add_argument("--ascii", action="store_true", help="use > < v ^ for arrows")
    r.set_defaults(func=cmd_render)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError(parser.format_usage().strip())
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except (BoardFormatError, BoardError, DimensionMismatch) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_FORMAT
    except InvalidFamilyParameters as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except CrazyKnightError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_UNKNOWN


def main() -> None:
    sys.exit(run())
