from .almost_kdiagonal import almost_necessary_keven, solve_almost_kdiagonal
from .compose import compose_block
from .cyclic_kdiagonal import extend_cyclic_solution, explicit_positions, solve_cyclic_kdiagonal
from .dispatch import solve
from .report import PROVEN_NONE, SOLUTION, UNKNOWN, SolveReport
from .totally_filled import solve_totally_filled
from .width_kdiagonal import solve_width_kdiagonal

__all__ = [
    "SolveReport", "SOLUTION", "PROVEN_NONE", "UNKNOWN",
    "solve", "solve_totally_filled", "solve_cyclic_kdiagonal", "extend_cyclic_solution",
    "explicit_positions", "solve_width_kdiagonal", "solve_almost_kdiagonal",
    "almost_necessary_keven", "compose_block",
]
