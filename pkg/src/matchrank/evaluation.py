"""Scoring produced rankings against a reference ordering.

The score is the number of discordant pairs divided by the maximum possible
``m (m - 1) / 2`` over the ``m`` teams present in both lists.  Teams in the
produced list that the reference does not know (dissolved nations, say) are
dropped before counting.
"""

from __future__ import annotations

import csv
import io
import warnings
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from .dataset import Dataset, canonical_team
from .graph import build_graph, to_transition
from .pagerank import Ranking, SolverConfig, power_iterate

TruncateBy = Literal["produced", "reference"]
SWEEP_HEADER = ("weight_fn", "damping", "normalized_inversions")


class ReferenceFileError(ValueError):
    pass


@dataclass(frozen=True)
class ReferenceRanking:
    """Official ordering, best team first."""

    teams: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "teams", tuple(self.teams))
        if not self.teams:
            raise ReferenceFileError("reference ranking is empty")
        if len(set(self.teams)) != len(self.teams):
            raise ReferenceFileError("reference ranking contains duplicate teams")

    def positions(self) -> dict[str, int]:
        return {team: i for i, team in enumerate(self.teams)}


def parse_reference(text: str) -> ReferenceRanking:
    """Parse a ``rank,team`` CSV; further columns (such as ``score``) are ignored.

    Ranks must start at 1 and strictly increase, so the output of the
    ``rank`` command is itself a valid reference file.
    """
    rows = [row for row in csv.reader(io.StringIO(text.removeprefix("\ufeff"))) if row]
    if not rows or [c.strip() for c in rows[0][:2]] != ["rank", "team"]:
        raise ReferenceFileError("reference header must start with 'rank,team'")
    teams: list[str] = []
    last = 0
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) < 2:
            raise ReferenceFileError(f"expected rank and team at row {lineno}")
        try:
            rank = int(row[0])
        except ValueError:
            raise ReferenceFileError(f"non-integer rank {row[0]!r} at row {lineno}") from None
        if (last == 0 and rank != 1) or rank <= last:
            raise ReferenceFileError(f"ranks must start at 1 and strictly increase (row {lineno})")
        last = rank
        teams.append(canonical_team(row[1]))
    return ReferenceRanking(tuple(teams))


def load_reference(path: str | Path) -> ReferenceRanking:
    return parse_reference(Path(path).read_text(encoding="utf-8"))


def count_inversions(values: Sequence[int]) -> int:
    """Count pairs ``i < j`` with ``values[i] > values[j]`` by merge sort."""
    items = list(values)
    buf = items[:]
    total = 0
    width = 1
    n = len(items)
    # Bottom-up merge passes avoid recursion depth limits.
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if items[j] < items[i]:
                    buf[k] = items[j]
                    total += mid - i
                    j += 1
                else:
                    buf[k] = items[i]
                    i += 1
                k += 1
            buf[k:hi] = items[i:mid] + items[j:hi]
        items, buf = buf, items
        width *= 2
    return total


@dataclass(frozen=True)
class ComparisonReport:
    k: int
    compared_count: int
    inversions: int
    normalized_inversions: float
    dropped: tuple[str, ...]

    @property
    def max_inversions(self) -> int:
        m = self.compared_count
        return m * (m - 1) // 2


def normalized_inversions(
    produced: Ranking | Sequence[str],
    reference: ReferenceRanking,
    k: int = 30,
    truncate_by: TruncateBy = "produced",
) -> ComparisonReport:
    """Compare the order of ``produced`` against ``reference``.

    Args:
        produced: A ranking, or team names best first.
        reference: The reference ordering.
        k: Truncation depth.
        truncate_by: ``"produced"`` keeps the produced top ``k`` and drops
            teams unknown to the reference; ``"reference"`` keeps the
            reference top ``k`` and drops those missing from ``produced``.
    """
    teams = produced.teams if isinstance(produced, Ranking) else list(produced)
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if not teams:
        raise ValueError("produced ranking is empty")

    if truncate_by == "produced":
        positions = reference.positions()
        top = teams[:k]
        dropped = tuple(t for t in top if t not in positions)
        kept = [positions[t] for t in top if t in positions]
    elif truncate_by == "reference":
        produced_pos = {t: i for i, t in enumerate(teams)}
        top = reference.teams[:k]
        dropped = tuple(t for t in top if t not in produced_pos)
        # Reference positions listed in produced order.
        kept = sorted((i for i, t in enumerate(top) if t in produced_pos), key=lambda i: produced_pos[top[i]])
    else:
        raise ValueError(f"truncate_by must be 'produced' or 'reference', got {truncate_by!r}")

    m = len(kept)
    if m < 2:
        warnings.warn(f"only {m} team(s) left to compare; score defined as 0", stacklevel=2)
        return ComparisonReport(k, m, 0, 0.0, dropped)
    inversions = count_inversions(kept)
    return ComparisonReport(k, m, inversions, inversions / (m * (m - 1) / 2), dropped)


@dataclass(frozen=True)
class SweepRow:
    weight_fn: int
    damping: float
    normalized_inversions: float


def damping_sweep(
    dataset: Dataset,
    fns: Iterable[int],
    dampings: Iterable[float],
    reference: ReferenceRanking,
    k: int = 30,
    truncate_by: TruncateBy = "produced",
    solver: SolverConfig = SolverConfig(),
) -> list[SweepRow]:
    """Score every (weighting function, damping) combination, in input order.

    ``solver`` supplies tolerance and iteration budget; its damping is
    replaced by each swept value.
    """
    fns, dampings = list(fns), list(dampings)
    if not fns or not dampings:
        raise ValueError("sweep needs at least one weighting function and one damping")
    for d in dampings:
        if not 0.0 < d < 1.0:
            raise ValueError(f"damping must lie in (0, 1), got {d}")
    rows = []
    for fn in fns:
        graph = build_graph(dataset, fn)
        for d in dampings:
            cfg = SolverConfig(d, solver.tolerance, solver.max_iterations)
            vec = power_iterate(to_transition(graph, d), cfg)
            ranking = Ranking.from_scores(dataset.teams, vec.pi)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                report = normalized_inversions(ranking, reference, k, truncate_by)
            rows.append(SweepRow(fn, d, report.normalized_inversions))
    return rows


def format_sweep_csv(rows: Iterable[SweepRow], digits: int | None = 6) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        score = repr(row.normalized_inversions) if digits is None else f"{row.normalized_inversions:.{digits}f}"
        writer.writerow([row.weight_fn, repr(row.damping), score])
    return out.getvalue()


def parse_sweep_csv(text: str) -> list[SweepRow]:
    reader = csv.reader(io.StringIO(text))
    if tuple(next(reader, ())) != SWEEP_HEADER:
        raise ValueError(f"sweep header must be {','.join(SWEEP_HEADER)!r}")
    return [SweepRow(int(fn), float(d), float(s)) for fn, d, s in reader]
