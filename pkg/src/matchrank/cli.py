"""Command-line front end.

Exit status is 0 on success, 1 for data errors (bad files, non-convergence)
and 2 for bad flags.
"""

from __future__ import annotations

import argparse
import csv
import sys
from collections.abc import Sequence

from .dataset import DatasetError, load_dataset, summarize
from .evaluation import damping_sweep, format_sweep_csv, load_reference, normalized_inversions
from .graph import build_graph, export_dot, to_transition
from .pagerank import ConvergenceError, SolverConfig, power_iterate, rank_teams
from .toy import TOY_DAMPING, TOY_EXPECTED, TOY_TOLERANCE, TOY_WEIGHT_FN, toy_dataset
from .weights import DESCRIPTIONS, WEIGHT_FUNCTIONS


def _weight_fn(text: str) -> int:
    try:
        fn = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if fn not in WEIGHT_FUNCTIONS:
        raise argparse.ArgumentTypeError(f"weighting function must be 1..{len(WEIGHT_FUNCTIONS)}, got {fn}")
    return fn


def _weight_fns(text: str) -> list[int]:
    return [_weight_fn(part) for part in text.split(",") if part.strip()]


def _damping(text: str) -> float:
    try:
        d = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 < d < 1.0:
        raise argparse.ArgumentTypeError(f"damping must lie in (0, 1), got {d}")
    return d


def parse_dampings(text: str) -> list[float]:
    """Parse ``start:stop:step`` (both ends inclusive) or a comma-separated list."""
    if ":" in text:
        try:
            start, stop, step = (float(p) for p in text.split(":"))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected start:stop:step, got {text!r}") from None
        if step <= 0 or stop < start:
            raise argparse.ArgumentTypeError(f"empty damping range {text!r}")
        count = int((stop - start) / step + 0.5) + 1
        values = [round(start + i * step, 12) for i in range(count)]
        return [_damping(repr(v)) for v in values]
    return [_damping(part) for part in text.split(",") if part.strip()]


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _fmt(x: float, full: bool) -> str:
    return repr(float(x)) if full else f"{x:.6f}"


def _solver(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(args.damping, args.tolerance, args.max_iters)


def _kv(rows: Sequence[tuple[str, str]], out) -> None:
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}}  {value}", file=out)


def cmd_validate(args: argparse.Namespace, out) -> int:
    s = summarize(load_dataset(args.dataset))
    print(f"OK {s.team_count} teams, {s.pair_count} pairs, {s.total_games} games, {s.total_goals} goals", file=out)
    return 0


def cmd_summary(args: argparse.Namespace, out) -> int:
    rows = summarize(load_dataset(args.dataset)).as_rows()
    if args.csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([k for k, _ in rows])
        writer.writerow([v for _, v in rows])
    else:
        _kv(rows, out)
    return 0


def cmd_rank(args: argparse.Namespace, out) -> int:
    ranking = rank_teams(load_dataset(args.dataset), args.weight_fn, _solver(args))
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["rank", "team", "score"])
    for entry in ranking.entries[: args.top]:
        writer.writerow([entry.position, entry.team, _fmt(entry.score, args.full_precision)])
    return 0


def cmd_compare(args: argparse.Namespace, out) -> int:
    ranking = rank_teams(load_dataset(args.dataset), args.weight_fn, _solver(args))
    report = normalized_inversions(ranking, load_reference(args.reference), args.top, args.truncate_by)
    score = _fmt(report.normalized_inversions, args.full_precision)
    dropped = ";".join(report.dropped)
    _kv([
        ("k", str(report.k)),
        ("compared_count", str(report.compared_count)),
        ("inversions", str(report.inversions)),
        ("max_inversions", str(report.max_inversions)),
        ("normalized_inversions", score),
        ("dropped", dropped or "-"),
    ], out)
    print(file=out)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["k", "compared_count", "inversions", "normalized_inversions", "dropped"])
    writer.writerow([report.k, report.compared_count, report.inversions, score, dropped])
    return 0


def cmd_sweep(args: argparse.Namespace, out) -> int:
    solver = SolverConfig(tolerance=args.tolerance, max_iterations=args.max_iters)
    rows = damping_sweep(load_dataset(args.dataset), args.weight_fns, args.dampings,
                         load_reference(args.reference), args.top, args.truncate_by, solver)
    out.write(format_sweep_csv(rows, None if args.full_precision else 6))
    return 0


def cmd_export_dot(args: argparse.Namespace, out) -> int:
    dataset = load_dataset(args.dataset)
    graph = build_graph(dataset, args.weight_fn)
    vec = power_iterate(to_transition(graph, args.damping), _solver(args))
    out.write(export_dot(graph, vec, args.top_links))
    return 0


def cmd_toy(args: argparse.Namespace, out) -> int:
    dataset = toy_dataset()
    ranking = rank_teams(dataset, TOY_WEIGHT_FN, SolverConfig(damping=TOY_DAMPING))
    wins = {team: 0 for team in dataset.teams}
    games = dict(wins)
    for r in dataset.records:
        wins[r.team_a] += r.wins_a
        wins[r.team_b] += r.wins_b
        games[r.team_a] += r.games
        games[r.team_b] += r.games
    print(f"weighting function {TOY_WEIGHT_FN} ({DESCRIPTIONS[TOY_WEIGHT_FN]}), damping {TOY_DAMPING}", file=out)
    print(f"{'team':<6}{'games':>6}{'wins':>6}{'score':>10}{'expected':>10}  check", file=out)
    ok = ranking.teams == [team for team, _ in TOY_EXPECTED]
    for entry, (team, expected) in zip(ranking, TOY_EXPECTED):
        row_ok = entry.team == team and abs(entry.score - expected) <= TOY_TOLERANCE
        ok &= row_ok
        print(f"{entry.team:<6}{games[entry.team]:>6}{wins[entry.team]:>6}{entry.score:>10.6f}"
              f"{expected:>10.3f}  {'pass' if row_ok else 'FAIL'}", file=out)
    print(f"{'PASS' if ok else 'FAIL'}: order and scores within +/-{TOY_TOLERANCE}", file=out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchrank", allow_abbrev=False,
        description="Rank teams from pairwise match-up statistics with damped random walks.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name: str, func, help_text: str, dataset: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text, allow_abbrev=False)
        if dataset:
            p.add_argument("dataset", help="match-up CSV file")
        p.set_defaults(func=func)
        return p

    def solver_flags(p: argparse.ArgumentParser, damping: bool = True) -> None:
        if damping:
            p.add_argument("--damping", type=_damping, default=0.05, help="teleport probability (default 0.05)")
        p.add_argument("--tolerance", type=_positive_float, default=1e-12, help="L1 stopping threshold")
        p.add_argument("--max-iters", type=_positive_int, default=10_000, help="power iteration budget")

    def weight_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--weight-fn", type=_weight_fn, default=1, help="weighting function 1..10 (default 1)")

    def compare_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--reference", required=True, help="reference ranking CSV (rank,team)")
        p.add_argument("--top", type=_positive_int, default=30, help="truncation depth k (default 30)")
        p.add_argument("--truncate-by", choices=("produced", "reference"), default="produced",
                       help="which list the top-k cut is taken from")
        p.add_argument("--full-precision", action="store_true", help="print scores with full precision")

    command("validate", cmd_validate, "check a dataset file and print a one-line summary")

    p = command("summary", cmd_summary, "print dataset summary statistics")
    p.add_argument("--csv", action="store_true", help="emit CSV instead of aligned text")

    p = command("rank", cmd_rank, "rank teams and print rank,team,score CSV")
    weight_flag(p)
    solver_flags(p)
    p.add_argument("--top", type=_positive_int, default=None, help="print only the first K rows")
    p.add_argument("--full-precision", action="store_true", help="print scores with full precision")

    p = command("compare", cmd_compare, "score a ranking against a reference by normalized inversions")
    weight_flag(p)
    solver_flags(p)
    compare_flags(p)

    p = command("sweep", cmd_sweep, "normalized inversions over weighting functions and dampings")
    p.add_argument("--weight-fns", type=_weight_fns, default=[1, 2, 3, 4, 5], help="comma list (default 1,2,3,4,5)")
    p.add_argument("--dampings", type=parse_dampings, default=parse_dampings("0.01:0.5:0.01"),
                   help="start:stop:step or comma list (default 0.01:0.5:0.01)")
    solver_flags(p, damping=False)
    compare_flags(p)

    p = command("export-dot", cmd_export_dot, "write the match-up graph as Graphviz DOT")
    weight_flag(p)
    solver_flags(p)
    p.add_argument("--top-links", type=_positive_int, default=1, help="strongest outgoing links per node")

    command("toy", cmd_toy, "run the built-in four-team example and check it", dataset=False)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (DatasetError, ConvergenceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1


if __name__ == "__main__":
    sys.exit(main())
