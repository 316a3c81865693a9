"""Rank-ordered self-similar network models: distributions, scaling-factor
solvers, degree-sequence realization, two-mode evolution and diagnostics."""

from .distributions import (
    INFINITE,
    BenfordModel,
    GeometricRankModel,
    ParetoModel,
    PowerLawModel,
    ZipfModel,
    aggregate_connectivity,
    benford_pmf,
    geometric_rank_pmf,
    nominal_degree,
)
from .errors import SelfSimError
from .graph_realization import DegreeSequence, SimpleGraph, is_graphical, realize, repair_sequence
from .pingpong import evolve, realize_stage, stage_table
from .scaling_solvers import bisect, solve_block_pair, solve_block_ratio, solve_pareto_a

__version__ = "0.1.0"

__all__ = [
    "INFINITE", "BenfordModel", "GeometricRankModel", "ParetoModel", "PowerLawModel",
    "ZipfModel", "aggregate_connectivity", "benford_pmf", "geometric_rank_pmf",
    "nominal_degree", "SelfSimError", "DegreeSequence", "SimpleGraph", "is_graphical",
    "realize", "repair_sequence", "evolve", "realize_stage", "stage_table", "bisect",
    "solve_block_pair", "solve_block_ratio", "solve_pareto_a",
]
