"""Weighted match-up graphs and their damped transition matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .dataset import Dataset, orient, summarize
from .weights import check_weight_fn, compute_weight

DEFAULT_MAX_TEAMS = 10_000


@dataclass(frozen=True)
class MatchupGraph:
    """Dense adjacency over the roster; ``adjacency[i, j]`` is the weight of ``i -> j``."""

    teams: tuple[str, ...]
    adjacency: npt.NDArray[np.float64]
    weight_fn: int

    @property
    def size(self) -> int:
        return len(self.teams)

    @property
    def index(self) -> dict[str, int]:
        return {team: i for i, team in enumerate(self.teams)}


@dataclass(frozen=True)
class TransitionMatrix:
    matrix: npt.NDArray[np.float64]
    damping: float

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


def build_graph(dataset: Dataset, fn: int, max_teams: int = DEFAULT_MAX_TEAMS) -> MatchupGraph:
    """Materialize the adjacency matrix of ``dataset`` under weighting function ``fn``."""
    check_weight_fn(fn)
    n = len(dataset.teams)
    if n > max_teams:
        raise ValueError(f"{n} teams exceed the cap of {max_teams}")
    max_games = summarize(dataset).max_games
    adjacency = np.zeros((n, n))
    index = dataset.index
    for record in dataset.records:
        i, j = index[record.team_a], index[record.team_b]
        adjacency[i, j] = compute_weight(fn, orient(record, record.team_a), max_games)
        adjacency[j, i] = compute_weight(fn, orient(record, record.team_b), max_games)
    adjacency.setflags(write=False)
    return MatchupGraph(dataset.teams, adjacency, fn)


def to_transition(graph: MatchupGraph, damping: float) -> TransitionMatrix:
    """Row-normalize the adjacency and mix in uniform teleportation.

    ``Q[i, j] = (1 - damping) * A[i, j] / sum_k A[i, k] + damping / N``.
    Rows without outgoing weight (undefeated or isolated teams) become
    uniform.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError(f"damping must lie in (0, 1), got {damping}")
    n = graph.size
    if n == 0:
        raise ValueError("cannot build a transition matrix for an empty graph")
    adjacency = graph.adjacency
    row_sums = adjacency.sum(axis=1)
    live = row_sums > 0
    q = np.full((n, n), 1.0 / n)
    q[live] = (1.0 - damping) * (adjacency[live] / row_sums[live, None]) + damping / n
    q.setflags(write=False)
    return TransitionMatrix(q, float(damping))


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(graph: MatchupGraph, ranks, top_links_per_node: int = 1) -> str:
    """Render the graph as a Graphviz digraph.

    Node width is ``max(0.3, 10 * rank)``.  Only the ``top_links_per_node``
    heaviest outgoing links of each node are drawn, ties going to the lower
    target index.

    Args:
        graph: The match-up graph.
        ranks: Stationary probabilities in roster order, either a
            ``RankingVector`` or a plain sequence.
        top_links_per_node: Links kept per node, at least 1.
    """
    scores = np.asarray(getattr(ranks, "pi", ranks), dtype=float)
    if scores.shape != (graph.size,):
        raise ValueError(f"expected {graph.size} ranks, got shape {scores.shape}")
    if top_links_per_node < 1:
        raise ValueError("top_links_per_node must be at least 1")

    lines = ["digraph matchups {", "  node [shape=circle, fixedsize=true];"]
    for team, score in zip(graph.teams, scores):
        width = max(0.3, 10.0 * score)
        lines.append(f'  {_dot_id(team)} [width={width:.3f}, label={_dot_id(team)}, rank_score="{score:.6f}"];')
    for i, source in enumerate(graph.teams):
        row = graph.adjacency[i]
        targets = sorted(np.flatnonzero(row > 0), key=lambda j: (-row[j], j))
        for j in targets[:top_links_per_node]:
            lines.append(f"  {_dot_id(source)} -> {_dot_id(graph.teams[j])} [label=\"{row[j]:.3f}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
