"""Kernelization and exact solvers for Bounded-Degree Deletion."""

from .errors import BddError, DomainError, InternalError, OracleTimeout, ParseError, ScaleError
from .extremal import ExtremalPair, ExtremalTrace, cd_fixpoint, find_extremal, forbidden_residual
from .graph import Graph, complement, is_bdd_set, parse_graph, remove_vertices, serialize_graph
from .kernel import KernelResult, compute_ab, kernel_constant, verify_theorem
from .packing import (BipartiteAux, Star, StarPacking, WitnessPartition, build_auxiliary,
                      compute_witness, greedy_maximal_star_packing, star_packing_max_edges)
from .solver import SolveOutcome, brute_force_min_bdd, fpt_solve, splex_max

__all__ = [
    "BddError", "DomainError", "InternalError", "OracleTimeout", "ParseError", "ScaleError",
    "ExtremalPair", "ExtremalTrace", "cd_fixpoint", "find_extremal", "forbidden_residual",
    "Graph", "complement", "is_bdd_set", "parse_graph", "remove_vertices", "serialize_graph",
    "KernelResult", "compute_ab", "kernel_constant", "verify_theorem",
    "BipartiteAux", "Star", "StarPacking", "WitnessPartition", "build_auxiliary",
    "compute_witness", "greedy_maximal_star_packing", "star_packing_max_edges",
    "SolveOutcome", "brute_force_min_bdd", "fpt_solve", "splex_max",
]
