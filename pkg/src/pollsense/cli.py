"""Command-line interface.

Subcommands mirror the pipeline stages (select, score, aggregate,
calibrate, infer, evaluate) plus `run` for the end-to-end pipeline
driven by a JSON config. Every stage reads and writes flat files, so
stages can be re-run standalone.
"""

import argparse
import csv
import dataclasses
import logging
import sys
from pathlib import Path

from . import aggregation as agg
from . import calibration, evaluation, keywords, lexicon, pipeline
from .corpus import PARTIES, build_time_instances, load_polls, load_tweets
from .errors import PollsenseError


def _keyword_paths(pairs):
    paths = dict(pipeline.BUNDLED_KEYWORDS)
    for pair in pairs or ():
        party, sep, path = pair.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(
                f"--keywords expects PARTY=PATH, got {pair!r}")
        paths[party.upper()] = path
    return paths


def _add_select(sub):
    p = sub.add_parser("select", help="select party-relevant tweets by keyword")
    p.add_argument("--tweets", required=True)
    p.add_argument("--keywords", action="append", metavar="PARTY=PATH",
                   help="per-party keyword file (repeatable); bundled lists "
                        "by default")
    p.add_argument("--lenient", action="store_true",
                   help="skip malformed tweet lines instead of failing")
    p.add_argument("-o", "--output", required=True)


def _add_score(sub):
    p = sub.add_parser("score", help="score tweets under a sentiment scheme")
    p.add_argument("--tweets", required=True)
    p.add_argument("--lexicon", required=True)
    p.add_argument("--synonyms")
    p.add_argument("--method", choices=pipeline.METHODS, default="snpos")
    p.add_argument("--tagger", choices=("embedded", "pretagged"),
                   default="embedded")
    p.add_argument("--lenient", action="store_true")
    p.add_argument("-o", "--output", required=True)


def _add_aggregate(sub):
    p = sub.add_parser("aggregate", help="collapse scores per poll window")
    p.add_argument("--tweets", required=True)
    p.add_argument("--polls", required=True)
    p.add_argument("--selections", required=True)
    p.add_argument("--scores", required=True)
    p.add_argument("--method", choices=agg.METHODS, default="MTS")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--delta", type=float, default=0.0)
    group.add_argument("--remove-top", type=int,
                       help="remove the k most unclear tweets instead of a "
                            "fixed delta")
    p.add_argument("--lenient", action="store_true")
    p.add_argument("-o", "--output", required=True)


def _add_calibrate(sub):
    p = sub.add_parser("calibrate", help="fit per-party weights")
    p.add_argument("--series", required=True)
    p.add_argument("--polls", required=True)
    p.add_argument("-o", "--output", required=True)


def _add_infer(sub):
    p = sub.add_parser("infer", help="apply weights to a sentiment series")
    p.add_argument("--series", required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("-o", "--output", required=True)


def _add_evaluate(sub):
    p = sub.add_parser("evaluate", help="cross-validate or split-evaluate")
    p.add_argument("--series", required=True)
    p.add_argument("--polls", required=True)
    p.add_argument("--mode", choices=("loocv", "split"), default="loocv")
    p.add_argument("--train-ranges", default="1-30,47-58")
    p.add_argument("--permutations", type=int, default=0)
    p.add_argument("--permute", choices=("joint", "independent"),
                   default="joint")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True,
                   help="plain-text report path; CSV tables are written "
                        "alongside")


def _add_run(sub):
    p = sub.add_parser("run", help="end-to-end pipeline from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--method", choices=pipeline.METHODS)
    p.add_argument("--agg-method", choices=agg.METHODS)
    p.add_argument("--delta", type=float)
    p.add_argument("--remove-top", type=int)
    p.add_argument("--mode", choices=("loocv", "split"))
    p.add_argument("--permutations", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--output-dir")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pollsense",
        description="Voting-intention inference from tweet sentiment")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for add in (_add_select, _add_score, _add_aggregate, _add_calibrate,
                _add_infer, _add_evaluate, _add_run):
        add(sub)
    return parser


def _cmd_select(args):
    tweets = load_tweets(args.tweets, lenient=args.lenient)
    selections = pipeline.select_tweets(tweets, _keyword_paths(args.keywords))
    pipeline.save_selections(selections, args.output)
    for party in PARTIES:
        print(f"{party}: {len(selections[party])} tweets")


def _cmd_score(args):
    tweets = load_tweets(args.tweets, lenient=args.lenient)
    rows = lexicon.parse_sentiwordnet(args.lexicon)
    synonyms = None
    if args.method == "sposw":
        if not args.synonyms:
            raise PollsenseError("score: method sposw needs --synonyms")
        synonyms = lexicon.load_synonyms(args.synonyms)
    scores = pipeline.score_tweets(tweets, args.method, rows, synonyms,
                                   tagger_mode=args.tagger)
    pipeline.save_scores(scores, args.output)
    print(f"scored {len(scores)} tweets ({args.method})")


def _cmd_aggregate(args):
    tweets = load_tweets(args.tweets, lenient=args.lenient)
    polls = load_polls(args.polls)
    selections = pipeline.load_selections(args.selections)
    scores = pipeline.load_scores(args.scores)
    cfg = agg.AggregationConfig(method=args.method, delta=args.delta,
                                removal_target=args.remove_top)
    instances = build_time_instances(
        [t for t in tweets if t.id in scores], polls, selections)
    series = agg.build_series(instances, scores, cfg)
    pipeline.save_series(series, args.output)
    if args.remove_top:
        pool = [s for s in scores.values() if s.matched_terms > 0]
        print(f"effective delta: {agg.delta_for_removal(pool, args.remove_top)!r}")
    print(f"wrote series for {len(polls)} instances")


def _cmd_calibrate(args):
    series = pipeline.load_series(args.series)
    polls = load_polls(args.polls)
    weights = calibration.calibrate(series, polls)
    pipeline.save_weights(weights, args.output)
    for party in PARTIES:
        print(f"{party}: w = {weights.for_party(party)!r}")


def _cmd_infer(args):
    series = pipeline.load_series(args.series)
    weights = pipeline.load_weights(args.weights)
    triplets = calibration.infer_triplets(series, weights)
    with open(args.output, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["instance", "con", "lab", "lib", "normalized"])
        for i, triplet in enumerate(triplets, start=1):
            if triplet is None:
                writer.writerow([i, "", "", "", ""])
            else:
                writer.writerow([i, repr(triplet.con), repr(triplet.lab),
                                 repr(triplet.lib),
                                 str(triplet.normalized).lower()])
    print(f"inferred {sum(t is not None for t in triplets)} triplets")


def _cmd_evaluate(args):
    series = pipeline.load_series(args.series)
    polls = load_polls(args.polls)
    if args.mode == "loocv":
        report = evaluation.loocv(series, polls)
    else:
        train = evaluation.parse_ranges(args.train_ranges)
        test = tuple(o for o in range(1, len(polls) + 1) if o not in set(train))
        split = evaluation.SplitSpec(train=train, test=test)
        report = evaluation.split_eval(series, polls, split)
        if args.permutations:
            p = evaluation.permutation_pvalue(series, polls, split,
                                              rounds=args.permutations,
                                              seed=args.seed,
                                              scheme=args.permute)
            report = dataclasses.replace(report, p_value=p)
    out = Path(args.output)
    out.write_text(pipeline.format_report(report))
    pipeline.emit_plot_data(report, polls, out.with_suffix(".residuals.csv"))
    pipeline.save_inferences(report, out.with_suffix(".inferences.csv"))
    print(pipeline.format_report(report), end="")


def _cmd_run(args):
    overrides = {key: getattr(args, key) for key in
                 ("method", "agg_method", "delta", "remove_top", "mode",
                  "permutations", "seed", "output_dir")}
    cfg = pipeline.load_config(args.config, flag_overrides=overrides)
    report, out = pipeline.run_pipeline(cfg)
    print(pipeline.format_report(report, cfg), end="")
    print(f"artifacts written to {out}")


_COMMANDS = {
    "select": _cmd_select,
    "score": _cmd_score,
    "aggregate": _cmd_aggregate,
    "calibrate": _cmd_calibrate,
    "infer": _cmd_infer,
    "evaluate": _cmd_evaluate,
    "run": _cmd_run,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s")
    try:
        _COMMANDS[args.command](args)
    except PollsenseError as exc:
        print(f"error: {args.command}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
