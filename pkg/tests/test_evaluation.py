import itertools
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchrank import (
    ReferenceRanking,
    count_inversions,
    damping_sweep,
    normalized_inversions,
    parse_reference,
    rank_teams,
    SolverConfig,
)
from matchrank.evaluation import ReferenceFileError, format_sweep_csv, parse_sweep_csv


def brute_inversions(values):
    return sum(1 for i, j in itertools.combinations(range(len(values)), 2) if values[i] > values[j])


def brute_normalized(produced, reference, k):
    pos = {t: i for i, t in enumerate(reference)}
    kept = [t for t in produced[:k] if t in pos]
    m = len(kept)
    bad = sum(1 for a, b in itertools.combinations(kept, 2) if pos[a] > pos[b])
    return bad, (bad / (m * (m - 1) / 2) if m >= 2 else 0.0)


REF = ReferenceRanking(("T1", "T2", "T3"))


def test_identity_scores_zero():
    r = normalized_inversions(["T1", "T2", "T3"], REF, 3)
    assert (r.inversions, r.normalized_inversions, r.compared_count, r.dropped) == (0, 0.0, 3, ())


def test_reversal_scores_one():
    teams = [f"T{i}" for i in range(12)]
    r = normalized_inversions(teams[::-1], ReferenceRanking(tuple(teams)), 12)
    assert r.inversions == 66 and r.normalized_inversions == 1.0


def test_single_swap():
    r = normalized_inversions(["T2", "T1", "T3"], REF, 3)
    assert r.inversions == 1
    assert r.normalized_inversions == pytest.approx(1 / 3)


def test_unknown_team_is_dropped():
    r = normalized_inversions(["T1", "X", "T3", "T2"], REF, 4)
    assert r.dropped == ("X",)
    assert r.compared_count == 3 and r.inversions == 1
    assert r.normalized_inversions == pytest.approx(1 / 3)


def test_truncation_uses_produced_top_k():
    ref = ReferenceRanking(tuple("abcdef"))
    r = normalized_inversions(list("bacfed"), ref, 3)
    assert r.compared_count == 3 and r.inversions == 1


def test_truncation_by_reference():
    ref = ReferenceRanking(tuple("abcdef"))
    # Reference top 3 is a, b, c; produced orders them c, a, b.
    r = normalized_inversions(list("fcedab"), ref, 3, truncate_by="reference")
    assert r.compared_count == 3 and r.inversions == 2 and r.dropped == ()
    r = normalized_inversions(list("ca"), ref, 3, truncate_by="reference")
    assert r.dropped == ("b",) and r.inversions == 1


def test_too_few_compared_warns_and_scores_zero():
    with pytest.warns(UserWarning, match="left to compare"):
        r = normalized_inversions(["X", "T1", "Y"], REF, 3)
    assert r.compared_count == 1 and r.normalized_inversions == 0.0


@pytest.mark.parametrize("k, produced", [(1, ["T1"]), (3, [])])
def test_argument_errors(k, produced):
    with pytest.raises(ValueError):
        normalized_inversions(produced, REF, k)


def test_bad_truncate_mode():
    with pytest.raises(ValueError, match="truncate_by"):
        normalized_inversions(["T1", "T2"], REF, 2, truncate_by="both")


def test_accepts_ranking_objects(toy):
    ranking = rank_teams(toy, 2, SolverConfig(0.15))
    ref = ReferenceRanking(tuple(ranking.teams))
    assert normalized_inversions(ranking, ref, 30).normalized_inversions == 0.0


def test_count_inversions_edge_cases():
    assert count_inversions([]) == 0
    assert count_inversions([5]) == 0
    assert count_inversions([2, 1]) == 1
    assert count_inversions([3, 3, 1]) == 2


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(-20, 20), max_size=60))
def test_merge_count_matches_pairwise_with_duplicates(values):
    assert count_inversions(values) == brute_inversions(values)


@settings(max_examples=100, deadline=None)
@given(st.permutations(range(25)), st.integers(2, 30), st.integers(0, 2**32 - 1))
def test_relabeling_invariance(perm, k, seed):
    names = [f"t{i}" for i in range(25)]
    ref = ReferenceRanking(tuple(names))
    produced = [names[i] for i in perm]
    rename = dict(zip(names, (f"x{j}" for j in np.random.default_rng(seed).permutation(1000)[:25])))
    a = normalized_inversions(produced, ref, k)
    b = normalized_inversions([rename[t] for t in produced], ReferenceRanking(tuple(rename[t] for t in names)), k)
    assert (a.inversions, a.normalized_inversions) == (b.inversions, b.normalized_inversions)


@settings(max_examples=100, deadline=None)
@given(st.permutations(range(15)), st.integers(2, 20), st.lists(st.integers(0, 15), max_size=8))
def test_normalized_matches_brute_force(perm, k, na_slots):
    names = [f"t{i}" for i in range(15)]
    produced = [names[i] for i in perm]
    for n, slot in enumerate(na_slots):
        produced.insert(slot, f"na{n}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        r = normalized_inversions(produced, ReferenceRanking(tuple(names)), k)
    bad, score = brute_normalized(produced, names, k)
    assert r.inversions == bad
    assert r.normalized_inversions == pytest.approx(score)
    assert 0.0 <= r.normalized_inversions <= 1.0
    assert r.inversions <= r.max_inversions


class TestReferenceFile:
    def test_parse(self):
        ref = parse_reference("rank,team\n1,Brazil\n2,Germany\n5,Italy\n")
        assert ref.teams == ("Brazil", "Germany", "Italy")

    def test_extra_columns_ignored(self):
        assert parse_reference("rank,team,score\n1,A,0.5\n2,B,0.3\n").teams == ("A", "B")

    @pytest.mark.parametrize("text, message", [
        ("rank,name\n1,A\n", "header"),
        ("rank,team\n2,A\n", "start at 1"),
        ("rank,team\n1,A\n1,B\n", "strictly increase"),
        ("rank,team\n1,A\nx,B\n", "non-integer"),
        ("rank,team\n1,A\n2,A\n", "duplicate"),
        ("rank,team\n", "empty"),
        ("", "header"),
    ])
    def test_errors(self, text, message):
        with pytest.raises(ReferenceFileError, match=message):
            parse_reference(text)


class TestSweep:
    def test_single_row(self, toy):
        rows = damping_sweep(toy, [2], [0.05], ReferenceRanking(("A", "C", "D", "B")), 30)
        assert len(rows) == 1 and rows[0].weight_fn == 2 and rows[0].damping == 0.05

    def test_self_reference_scores_zero(self, toy):
        ref = ReferenceRanking(tuple(rank_teams(toy, 2, SolverConfig(0.15)).teams))
        rows = damping_sweep(toy, [2], [0.05, 0.15, 0.5], ref, 30)
        assert [r.damping for r in rows] == [0.05, 0.15, 0.5]
        assert rows[1].normalized_inversions == 0.0

    def test_cardinality_and_order(self, toy):
        dampings = [round(0.05 * i, 2) for i in range(1, 11)]
        rows = damping_sweep(toy, [1, 2, 3, 4, 5], dampings, ReferenceRanking(tuple("ABCD")), 4)
        assert len(rows) == 50
        assert [(r.weight_fn, r.damping) for r in rows] == [(f, d) for f in range(1, 6) for d in dampings]

    def test_errors(self, toy):
        ref = ReferenceRanking(tuple("ABCD"))
        with pytest.raises(ValueError):
            damping_sweep(toy, [], [0.1], ref)
        with pytest.raises(ValueError):
            damping_sweep(toy, [1], [1.0], ref)

    def test_csv_round_trip(self, toy):
        rows = damping_sweep(toy, [1, 2], [0.05, 0.3], ReferenceRanking(tuple("ABCD")), 4)
        assert parse_sweep_csv(format_sweep_csv(rows, digits=None)) == rows
        assert format_sweep_csv(rows).startswith("weight_fn,damping,normalized_inversions\n")
