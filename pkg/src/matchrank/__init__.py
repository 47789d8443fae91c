"""Rank teams from pairwise match-up statistics with damped random walks."""

from .dataset import (
    Dataset,
    DatasetError,
    DatasetSummary,
    MatchupRecord,
    OrientedStats,
    dump_dataset,
    load_dataset,
    orient,
    parse_dataset,
    summarize,
)
from .evaluation import (
    ComparisonReport,
    ReferenceRanking,
    SweepRow,
    count_inversions,
    damping_sweep,
    load_reference,
    normalized_inversions,
    parse_reference,
)
from .graph import MatchupGraph, TransitionMatrix, build_graph, export_dot, to_transition
from .pagerank import ConvergenceError, Ranking, RankingVector, SolverConfig, power_iterate, rank_teams
from .weights import WEIGHT_FUNCTIONS, compute_weight

__version__ = "0.1.0"

__all__ = [
    "ComparisonReport",
    "ConvergenceError",
    "Dataset",
    "DatasetError",
    "DatasetSummary",
    "MatchupGraph",
    "MatchupRecord",
    "OrientedStats",
    "Ranking",
    "RankingVector",
    "ReferenceRanking",
    "SolverConfig",
    "SweepRow",
    "TransitionMatrix",
    "WEIGHT_FUNCTIONS",
    "build_graph",
    "compute_weight",
    "count_inversions",
    "damping_sweep",
    "dump_dataset",
    "export_dot",
    "load_dataset",
    "load_reference",
    "normalized_inversions",
    "orient",
    "parse_dataset",
    "parse_reference",
    "power_iterate",
    "rank_teams",
    "summarize",
    "to_transition",
]
