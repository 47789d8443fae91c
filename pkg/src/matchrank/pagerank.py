"""Stationary distribution by power iteration, and the rankings it induces."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .dataset import Dataset
from .graph import TransitionMatrix, build_graph, to_transition

# Scores closer than this are treated as tied and ordered by roster index.
TIE_TOLERANCE = 1e-12


class ConvergenceError(RuntimeError):
    def __init__(self, iterations: int, residual: float) -> None:
        self.iterations = iterations
        self.residual = residual
        super().__init__(f"power iteration did not converge in {iterations} sweeps (residual {residual:.3e})")


@dataclass(frozen=True)
class SolverConfig:
    """Power iteration settings.

    Attributes:
        damping: Teleport probability per step.
        tolerance: Stop once the L1 change between sweeps drops below this.
        max_iterations: Sweep budget before giving up.
    """

    damping: float = 0.05
    tolerance: float = 1e-12
    max_iterations: int = 10_000

    def __post_init__(self) -> None:
        if not 0.0 < self.damping < 1.0:
            raise ValueError(f"damping must lie in (0, 1), got {self.damping}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be at least 1, got {self.max_iterations}")


@dataclass(frozen=True)
class RankingVector:
    pi: npt.NDArray[np.float64]
    iterations: int
    residual: float


def power_iterate(transition: TransitionMatrix, cfg: SolverConfig = SolverConfig()) -> RankingVector:
    """Iterate ``pi <- pi Q`` from the uniform vector until the L1 change is below tolerance."""
    if transition.damping != cfg.damping:
        raise ValueError(f"solver damping {cfg.damping} does not match the matrix's {transition.damping}")
    q = transition.matrix
    n = q.shape[0]
    pi = np.full(n, 1.0 / n)
    nxt = np.empty(n)
    diff = np.empty(n)
    residual = np.inf
    for it in range(1, cfg.max_iterations + 1):
        np.dot(pi, q, out=nxt)
        np.subtract(nxt, pi, out=diff)
        np.abs(diff, out=diff)
        residual = float(diff.sum())
        pi, nxt = nxt, pi
        if residual < cfg.tolerance:
            break
    else:
        raise ConvergenceError(cfg.max_iterations, residual)
    pi = pi / pi.sum()
    pi.setflags(write=False)
    return RankingVector(pi, it, residual)


@dataclass(frozen=True)
class RankEntry:
    position: int
    team: str
    score: float


@dataclass(frozen=True)
class Ranking:
    """Teams in descending score order, positions starting at 1."""

    entries: tuple[RankEntry, ...]

    def __iter__(self) -> Iterator[RankEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> RankEntry:
        return self.entries[i]

    @property
    def teams(self) -> list[str]:
        return [e.team for e in self.entries]

    @classmethod
    def from_scores(cls, teams: Sequence[str], scores: Sequence[float],
                    tie_tolerance: float = TIE_TOLERANCE) -> Ranking:
        """Sort descending; runs of scores within ``tie_tolerance`` keep roster order."""
        if len(teams) != len(scores):
            raise ValueError("teams and scores differ in length")
        order = sorted(range(len(teams)), key=lambda i: (-scores[i], i))
        # Regroup near-equal neighbours so float noise cannot reorder ties.
        result: list[int] = []
        group: list[int] = []
        for i in order:
            if group and scores[group[-1]] - scores[i] > tie_tolerance:
                result.extend(sorted(group))
                group = []
            group.append(i)
        result.extend(sorted(group))
        return cls(tuple(RankEntry(pos, teams[i], float(scores[i])) for pos, i in enumerate(result, start=1)))


def solve(dataset: Dataset, fn: int, cfg: SolverConfig = SolverConfig()) -> RankingVector:
    graph = build_graph(dataset, fn)
    return power_iterate(to_transition(graph, cfg.damping), cfg)


def rank_teams(dataset: Dataset, fn: int, cfg: SolverConfig = SolverConfig()) -> Ranking:
    """Full pipeline: graph, transition matrix, power iteration, sorted ranking."""
    return Ranking.from_scores(dataset.teams, solve(dataset, fn, cfg).pi)
