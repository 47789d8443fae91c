"""Edge weighting functions.

Each function maps a pair's statistics, seen from team ``i``, to the weight
of the directed link ``i -> j``.  Weight flows from the losing side toward
the opponent, so heavier links mean ``j`` did better against ``i``.

Division-by-zero conventions:

* ``c/s`` with ``s = 0`` uses a denominator floored at 1 (so the result is ``c``);
* ``l/w`` with ``w = 0`` likewise evaluates to ``l``;
* ``c/(c+s)`` with no goals in the pair evaluates to 0.
"""

from __future__ import annotations

from collections.abc import Callable

from .dataset import OrientedStats

WeightFn = Callable[[OrientedStats, int], float]


def _goal_share(st: OrientedStats) -> float:
    total = st.c + st.s
    return st.c / total if total else 0.0


def _loss_ratio_by_frequency(st: OrientedStats, max_games: int) -> float:
    return st.l / st.g / (max_games - st.g + 1)


def _loss_ratio(st: OrientedStats, _: int) -> float:
    return st.l / st.g


def _loss_ratio_plus_goal_share(st: OrientedStats, _: int) -> float:
    return st.l / st.g + _goal_share(st)


def _losses(st: OrientedStats, _: int) -> float:
    return float(st.l)


def _conceded_over_scored(st: OrientedStats, _: int) -> float:
    return st.c / max(st.s, 1)


def _losses_over_wins(st: OrientedStats, _: int) -> float:
    return st.l / max(st.w, 1)


def _loss_ratio_half_draws(st: OrientedStats, _: int) -> float:
    return st.l / st.g + 0.5 * st.d / st.g


def _conceded_share(st: OrientedStats, _: int) -> float:
    return _goal_share(st)


def _conceded_per_game(st: OrientedStats, _: int) -> float:
    return st.c / st.g


def _conceded(st: OrientedStats, _: int) -> float:
    return float(st.c)


WEIGHT_FUNCTIONS: dict[int, WeightFn] = {
    1: _loss_ratio_by_frequency,
    2: _loss_ratio,
    3: _loss_ratio_plus_goal_share,
    4: _losses,
    5: _conceded_over_scored,
    6: _losses_over_wins,
    7: _loss_ratio_half_draws,
    8: _conceded_share,
    9: _conceded_per_game,
    10: _conceded,
}

DESCRIPTIONS: dict[int, str] = {
    1: "l/g * 1/(G-g+1)",
    2: "l/g",
    3: "l/g + c/(c+s)",
    4: "l",
    5: "c/s",
    6: "l/w",
    7: "l/g + 0.5*d/g",
    8: "c/(c+s)",
    9: "c/g",
    10: "c",
}


def check_weight_fn(fn: int) -> int:
    if fn not in WEIGHT_FUNCTIONS:
        raise ValueError(f"unknown weighting function {fn!r}, expected 1..{len(WEIGHT_FUNCTIONS)}")
    return fn


def compute_weight(fn: int, stats: OrientedStats, max_games: int) -> float:
    """Weight of the link from the viewpoint team toward its opponent.

    Args:
        fn: Weighting function id, 1 to 10.
        stats: Pair statistics oriented from the link's source team.
        max_games: Largest number of games played by any pair in the dataset.

    Returns:
        A finite, non-negative weight.
    """
    check_weight_fn(fn)
    if stats.g < 1:
        raise ValueError("a pair must have played at least one game")
    if max_games < stats.g:
        raise ValueError(f"max_games={max_games} is smaller than the pair's games={stats.g}")
    return WEIGHT_FUNCTIONS[fn](stats, max_games)
