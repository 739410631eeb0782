"""Exact closeness and betweenness improvement of a single vertex by edge addition."""

from .centrality import CentralityKind, betweenness, betweenness_naive, centrality, closeness
from .graph import Graph, GraphError, InvalidSolutionError, UNREACHABLE
from .instances import ImprovementInstance, ProblemKind, Solution, verify
from .reductions import (
    DominatingSetInstance,
    ReductionOutput,
    SetCoverInstance,
    ds_to_betweenness,
    ds_to_closeness,
    ds_to_closeness_diam4,
    sc_to_directed_betweenness,
    sc_to_directed_closeness,
    sc_to_directed_closeness_diam4,
    solve_dominating_set_bf,
    solve_set_cover_bf,
)
from .solve_exact import SizeGuardError, SolverReport, greedy, solve_incident, solve_unrestricted
from .solve_fpt import (
    ClusterDecomposition,
    cluster_vertex_deletion,
    solve_betweenness_fpt,
    solve_closeness_fpt,
)

__all__ = [
    "CentralityKind", "betweenness", "betweenness_naive", "centrality", "closeness",
    "Graph", "GraphError", "InvalidSolutionError", "UNREACHABLE",
    "ImprovementInstance", "ProblemKind", "Solution", "verify",
    "DominatingSetInstance", "ReductionOutput", "SetCoverInstance",
    "ds_to_betweenness", "ds_to_closeness", "ds_to_closeness_diam4",
    "sc_to_directed_betweenness", "sc_to_directed_closeness", "sc_to_directed_closeness_diam4",
    "solve_dominating_set_bf", "solve_set_cover_bf",
    "SizeGuardError", "SolverReport", "greedy", "solve_incident", "solve_unrestricted",
    "ClusterDecomposition", "cluster_vertex_deletion", "solve_betweenness_fpt", "solve_closeness_fpt",
]
