"""Pairwise match-up statistics: data model, CSV ingestion and summaries.

A dataset file holds one unordered team pair per row::

    team_a,team_b,games,wins_a,wins_b,draws,goals_a,goals_b
    A,B,3,2,1,0,4,2

Lines of the form ``#team,<name>`` placed before the header register extra
teams, which become isolated nodes when the graph is built.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable
from dataclasses import dataclass, field
from pathlib import Path

HEADER = ("team_a", "team_b", "games", "wins_a", "wins_b", "draws", "goals_a", "goals_b")
ROSTER_PREFIX = "#team"


class DatasetError(ValueError):
    """Invalid dataset content, optionally tied to a 1-based line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.message = message
        self.line = line
        super().__init__(message if line is None else f"{message} at line {line}")


def canonical_team(name: str) -> str:
    name = name.strip()
    if not name:
        raise DatasetError("empty team name")
    if "\n" in name or "\r" in name:
        raise DatasetError(f"team name {name!r} contains a line break")
    return name


@dataclass(frozen=True)
class MatchupRecord:
    """Aggregate statistics for every game played between two teams.

    Attributes:
        team_a: First team of the pair.
        team_b: Second team of the pair.
        games: Number of games played between the two.
        wins_a: Games won by ``team_a``.
        wins_b: Games won by ``team_b``.
        draws: Games drawn.
        goals_a: Goals scored by ``team_a`` over all games of the pair.
        goals_b: Goals scored by ``team_b`` over all games of the pair.
    """

    team_a: str
    team_b: str
    games: int
    wins_a: int
    wins_b: int
    draws: int
    goals_a: int = 0
    goals_b: int = 0

    def __post_init__(self) -> None:
        if self.team_a == self.team_b:
            raise DatasetError(f"team {self.team_a!r} cannot play itself")
        counts = (self.games, self.wins_a, self.wins_b, self.draws, self.goals_a, self.goals_b)
        if any(c < 0 for c in counts):
            raise DatasetError("counts must be non-negative")
        if self.games < 1:
            raise DatasetError("games must be at least 1")
        outcomes = self.wins_a + self.wins_b + self.draws
        if outcomes > self.games:
            raise DatasetError("wins+draws exceed games")
        if outcomes < self.games:
            raise DatasetError("wins+draws fall short of games")

    @property
    def pair(self) -> frozenset[str]:
        return frozenset((self.team_a, self.team_b))


@dataclass(frozen=True)
class OrientedStats:
    """A record seen from one team: ``w``/``l`` are its wins/losses, ``s``/``c`` goals scored/conceded."""

    g: int
    w: int
    l: int  # noqa: E741
    d: int
    s: int
    c: int


def orient(record: MatchupRecord, viewpoint: str) -> OrientedStats:
    """Return the statistics of ``record`` from ``viewpoint``'s perspective."""
    if viewpoint == record.team_a:
        return OrientedStats(record.games, record.wins_a, record.wins_b, record.draws,
                             record.goals_a, record.goals_b)
    if viewpoint == record.team_b:
        return OrientedStats(record.games, record.wins_b, record.wins_a, record.draws,
                             record.goals_b, record.goals_a)
    raise ValueError(f"{viewpoint!r} did not take part in {record.team_a} vs {record.team_b}")


@dataclass(frozen=True)
class Dataset:
    """A validated roster of teams plus their match-up records.

    The roster keeps order of first appearance and may contain teams without
    any record.
    """

    teams: tuple[str, ...]
    records: tuple[MatchupRecord, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "teams", tuple(self.teams))
        object.__setattr__(self, "records", tuple(self.records))
        index: dict[str, int] = {}
        for team in self.teams:
            if team in index:
                raise DatasetError(f"duplicate team {team!r} in roster")
            index[team] = len(index)
        seen: set[frozenset[str]] = set()
        for record in self.records:
            for team in (record.team_a, record.team_b):
                if team not in index:
                    raise DatasetError(f"team {team!r} is not in the roster")
            if record.pair in seen:
                raise DatasetError(f"duplicate pair {record.team_a},{record.team_b}")
            seen.add(record.pair)
        object.__setattr__(self, "index", index)

    @classmethod
    def from_records(cls, records: Iterable[MatchupRecord], extra_teams: Iterable[str] = ()) -> Dataset:
        """Build a dataset whose roster is ``extra_teams`` followed by teams in record order."""
        records = tuple(records)
        roster = dict.fromkeys(extra_teams)
        for record in records:
            roster.setdefault(record.team_a)
            roster.setdefault(record.team_b)
        return cls(tuple(roster), records)

    def __len__(self) -> int:
        return len(self.teams)


def _parse_count(value: str, name: str, line: int) -> int:
    value = value.strip()
    try:
        count = int(value)
    except ValueError:
        raise DatasetError(f"non-integer {name} field {value!r}", line) from None
    if count < 0:
        raise DatasetError(f"negative {name} field {value!r}", line)
    return count


def parse_dataset(text: str) -> Dataset:
    """Parse a dataset CSV document.

    Raises:
        DatasetError: On the first malformed line, with its line number.
    """
    lines = text.removeprefix("\ufeff").splitlines()
    if not any(line.strip() for line in lines):
        raise DatasetError("empty file", 1)

    roster: dict[str, None] = {}
    records: list[MatchupRecord] = []
    seen: dict[frozenset[str], int] = {}
    header_seen = False

    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        row = next(csv.reader([line]))
        if not header_seen:
            if row and row[0].strip() == ROSTER_PREFIX:
                if len(row) != 2:
                    raise DatasetError("roster line must be '#team,<name>'", lineno)
                try:
                    team = canonical_team(row[1])
                except DatasetError as exc:
                    raise DatasetError(exc.message, lineno) from None
                if team in roster:
                    raise DatasetError(f"duplicate roster team {team!r}", lineno)
                roster[team] = None
                continue
            if tuple(row) != HEADER:
                raise DatasetError(f"header mismatch, expected {','.join(HEADER)!r}", lineno)
            header_seen = True
            continue

        if len(row) != len(HEADER):
            raise DatasetError(f"expected {len(HEADER)} fields, got {len(row)}", lineno)
        try:
            team_a, team_b = canonical_team(row[0]), canonical_team(row[1])
            counts = [_parse_count(v, n, lineno) for v, n in zip(row[2:], HEADER[2:])]
            record = MatchupRecord(team_a, team_b, *counts)
        except DatasetError as exc:
            if exc.line is not None:
                raise
            raise DatasetError(exc.message, lineno) from None
        if record.pair in seen:
            raise DatasetError(f"duplicate pair {team_a},{team_b} (first at line {seen[record.pair]})", lineno)
        seen[record.pair] = lineno
        roster.setdefault(team_a)
        roster.setdefault(team_b)
        records.append(record)

    if not header_seen:
        raise DatasetError("missing header", len(lines))
    return Dataset(tuple(roster), tuple(records))


def load_dataset(path: str | Path) -> Dataset:
    return parse_dataset(Path(path).read_text(encoding="utf-8"))


def dump_dataset(dataset: Dataset) -> str:
    """Serialize ``dataset`` so that :func:`parse_dataset` rebuilds it exactly.

    A roster preamble is written only when the records alone would not
    reproduce the roster order; it then lists every team.
    """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if Dataset.from_records(dataset.records).teams != dataset.teams:
        for team in dataset.teams:
            writer.writerow([ROSTER_PREFIX, team])
    writer.writerow(HEADER)
    for r in dataset.records:
        writer.writerow([r.team_a, r.team_b, r.games, r.wins_a, r.wins_b, r.draws, r.goals_a, r.goals_b])
    return out.getvalue()


@dataclass(frozen=True)
class DatasetSummary:
    team_count: int
    pair_count: int
    total_games: int
    total_goals: int
    avg_games_per_pair: float
    avg_goals_per_pair: float
    max_games_pair: tuple[str, str, int] | None
    max_games: int

    def as_rows(self) -> list[tuple[str, str]]:
        pair = "" if self.max_games_pair is None else "{} vs {} ({})".format(*self.max_games_pair)
        return [
            ("team_count", str(self.team_count)),
            ("pair_count", str(self.pair_count)),
            ("total_games", str(self.total_games)),
            ("total_goals", str(self.total_goals)),
            ("avg_games_per_pair", f"{self.avg_games_per_pair:.4f}"),
            ("avg_goals_per_pair", f"{self.avg_goals_per_pair:.4f}"),
            ("max_games_pair", pair),
            ("max_games", str(self.max_games)),
        ]


def summarize(dataset: Dataset) -> DatasetSummary:
    """Corpus-level counts; ``max_games`` is the largest games count over all pairs."""
    records = dataset.records
    total_games = sum(r.games for r in records)
    total_goals = sum(r.goals_a + r.goals_b for r in records)
    max_pair = None
    best_key = None
    for r in records:
        a, b = sorted((r.team_a, r.team_b), key=dataset.index.__getitem__)
        key = (-r.games, dataset.index[a], dataset.index[b])
        if best_key is None or key < best_key:
            best_key, max_pair = key, (a, b, r.games)
    n = len(records)
    return DatasetSummary(
        team_count=len(dataset.teams),
        pair_count=n,
        total_games=total_games,
        total_goals=total_goals,
        avg_games_per_pair=total_games / n if n else 0.0,
        avg_goals_per_pair=total_goals / n if n else 0.0,
        max_games_pair=max_pair,
        max_games=max_pair[2] if max_pair else 0,
    )
