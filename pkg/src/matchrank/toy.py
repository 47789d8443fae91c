"""Four-team fixture: every pair played three games, no draws, goals unrecorded."""

from __future__ import annotations

from .dataset import Dataset, parse_dataset

TOY_CSV = """\
team_a,team_b,games,wins_a,wins_b,draws,goals_a,goals_b
A,B,3,2,1,0,0,0
A,C,3,2,1,0,0,0
A,D,3,3,0,0,0,0
B,C,3,0,3,0,0,0
B,D,3,0,3,0,0,0
C,D,3,1,2,0,0,0
"""

# Published scores for loss-ratio weights at damping 0.15, best first.
TOY_EXPECTED = (("A", 0.333), ("C", 0.281), ("D", 0.211), ("B", 0.175))
TOY_WEIGHT_FN = 2
TOY_DAMPING = 0.15
TOY_TOLERANCE = 0.005


def toy_dataset() -> Dataset:
    return parse_dataset(TOY_CSV)
