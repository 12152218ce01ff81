"""Minimum installation paths in activation networks, and the barrier
shrinkage hardness construction built on top of them."""
from .graph import Edge, Path, PowerAssignment, WeightedGraph
from .greedy import greedy_assign, greedy_powers
from .kernels import BACKEND
from .solve import (
    PowerDomain,
    SolveResult,
    compute_lambda,
    fptas,
    solve_bruteforce,
    solve_discretized,
    solve_exact_integer,
)
from .subset_sum import SubsetSumInstance

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Edge",
    "Path",
    "PowerAssignment",
    "PowerDomain",
    "SolveResult",
    "SubsetSumInstance",
    "WeightedGraph",
    "compute_lambda",
    "fptas",
    "greedy_assign",
    "greedy_powers",
    "solve_bruteforce",
    "solve_discretized",
    "solve_exact_integer",
]
