"""Exact width solvers: GF(2) cut-rank, rank-width, clique-width, cographs."""

from .cliquewidth import (
    CWD_MAX_STATES,
    CWD_MAX_VERTICES,
    CwResult,
    cwd_exact,
    cwd_leq,
    expand_twins,
    lcwd_exact,
    lcwd_leq,
    twin_reduction,
)
from .cograph import is_cograph
from .gf2 import Gf2Matrix, cut_rank, cut_rank_mask, gf2_rank, rank_of_rows
from .rankwidth import (
    RWD_MAX_VERTICES,
    BranchDecomposition,
    RankWidthResult,
    SolverBudgetError,
    rank_width_exact,
)

__all__ = [
    "CWD_MAX_STATES",
    "CWD_MAX_VERTICES",
    "CwResult",
    "cwd_exact",
    "cwd_leq",
    "expand_twins",
    "lcwd_exact",
    "lcwd_leq",
    "twin_reduction",
    "is_cograph",
    "Gf2Matrix",
    "cut_rank",
    "cut_rank_mask",
    "gf2_rank",
    "rank_of_rows",
    "RWD_MAX_VERTICES",
    "BranchDecomposition",
    "RankWidthResult",
    "SolverBudgetError",
    "rank_width_exact",
]
