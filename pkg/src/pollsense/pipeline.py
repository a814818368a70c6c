"""End-to-end orchestration: select -> score -> aggregate -> calibrate
-> evaluate, with re-ingestible file artifacts at every stage.

Configuration is a JSON file; ``POLLSENSE_``-prefixed environment
variables override file values and CLI flags override both. All
randomness flows from the single master seed echoed in the report
header, and outputs are byte-deterministic given (config, seed).
"""

import csv
import dataclasses
import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path

from . import aggregation as agg
from . import calibration, evaluation, keywords, lexicon, scoring
from .corpus import PARTIES, build_time_instances, load_polls, load_tweets
from .errors import ConfigError, ValidationError

log = logging.getLogger(__name__)

METHODS = ("snpos", "spos", "sposw")
BUNDLED_KEYWORDS = {
    party: Path(__file__).parent / "data" / "keywords" / f"{party.lower()}.txt"
    for party in PARTIES
}

# configuration fields that may be overridden from the environment,
# e.g. POLLSENSE_METHOD=sposw
ENV_FIELDS = {
    "tweets": str, "polls": str, "lexicon": str, "synonyms": str,
    "method": str, "agg_method": str, "delta": float, "remove_top": int,
    "tagger": str, "mode": str, "train_ranges": str, "permutations": int,
    "permute": str, "seed": int, "output_dir": str,
}


@dataclass
class PipelineConfig:
    tweets: Path
    polls: Path
    lexicon: Path
    synonyms: Path | None = None
    keywords: dict = None  # party -> path; bundled lists by default
    method: str = "snpos"
    agg_method: str = "MTS"
    delta: float = 0.0
    remove_top: int | None = None
    tagger: str = "embedded"
    mode: str = "loocv"
    train_ranges: str = "1-30,47-58"
    permutations: int = 0
    permute: str = "joint"
    seed: int = 0
    output_dir: Path = Path("pollsense-out")
    lenient: bool = False
    drop_equal_pos_aware: bool = False

    def __post_init__(self):
        self.tweets = Path(self.tweets)
        self.polls = Path(self.polls)
        self.lexicon = Path(self.lexicon)
        self.synonyms = Path(self.synonyms) if self.synonyms else None
        self.output_dir = Path(self.output_dir)
        if not self.keywords:
            self.keywords = dict(BUNDLED_KEYWORDS)
        self.keywords = {party.upper(): Path(path)
                         for party, path in self.keywords.items()}

    def validate(self):
        if self.method not in METHODS:
            raise ConfigError(f"method must be one of {METHODS}, got {self.method!r}")
        if self.agg_method not in agg.METHODS:
            raise ConfigError(
                f"aggregation method must be one of {agg.METHODS}, "
                f"got {self.agg_method!r}")
        if self.tagger not in ("embedded", "pretagged"):
            raise ConfigError(f"tagger must be embedded or pretagged, "
                              f"got {self.tagger!r}")
        if self.mode not in ("loocv", "split"):
            raise ConfigError(f"mode must be loocv or split, got {self.mode!r}")
        if self.permute not in ("joint", "independent"):
            raise ConfigError(f"permute must be joint or independent, "
                              f"got {self.permute!r}")
        paths = {"tweets": self.tweets, "polls": self.polls,
                 "lexicon": self.lexicon}
        if self.method == "sposw":
            if self.synonyms is None:
                raise ConfigError("method sposw needs a synonyms file")
            paths["synonyms"] = self.synonyms
        for party in PARTIES:
            if party not in self.keywords:
                raise ConfigError(f"no keyword file for {party}")
            paths[f"keywords[{party}]"] = self.keywords[party]
        for name, path in paths.items():
            if not Path(path).is_file():
                raise ConfigError(f"{name} file not found: {path}")

    def aggregation_config(self) -> agg.AggregationConfig:
        return agg.AggregationConfig(method=self.agg_method, delta=self.delta,
                                     removal_target=self.remove_top)


def _env_overrides(environ=None) -> dict:
    environ = os.environ if environ is None else environ
    overrides = {}
    for field, cast in ENV_FIELDS.items():
        raw = environ.get("POLLSENSE_" + field.upper())
        if raw is not None:
            try:
                overrides[field] = cast(raw)
            except ValueError as exc:
                raise ConfigError(f"POLLSENSE_{field.upper()}={raw!r}: {exc}")
    return overrides


def load_config(path, flag_overrides=None, environ=None) -> PipelineConfig:
    """File values < environment overrides < CLI flag overrides."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    known = {f.name for f in dataclasses.fields(PipelineConfig)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"{path}: unknown config keys {sorted(unknown)}")
    data.update(_env_overrides(environ))
    for key, value in (flag_overrides or {}).items():
        if value is not None:
            data[key] = value
    missing = {"tweets", "polls", "lexicon"} - set(data)
    if missing:
        raise ConfigError(f"{path}: missing required keys {sorted(missing)}")
    return PipelineConfig(**data)


# ---------------------------------------------------------------------------
# stages

def select_tweets(tweets, keyword_paths) -> dict:
    """party -> set of selected tweet ids."""
    selections = {}
    for party in PARTIES:
        ks = keywords.parse_keyword_file(keyword_paths[party], party=party)
        selections[party] = keywords.select_party_tweets(tweets, ks)
        log.info("%s: %d tweets selected", party, len(selections[party]))
    return selections


def _strip_tags(tweet):
    return dataclasses.replace(tweet, tagged_tokens=None)


def score_tweets(tweets, method, lexicon_rows, synonyms=None,
                 tagger_mode="embedded", drop_equal_pos_aware=False) -> dict:
    """tweet id -> SentimentScore under the chosen scheme.

    embedded: the rule tagger runs on tokenized text, stored tags are
    ignored; pretagged: every tweet must carry stored tags.
    """
    if method == "snpos":
        table = lexicon.build_pos_agnostic_table(lexicon_rows)
    else:
        table = lexicon.build_pos_aware_table(
            lexicon_rows, drop_equal_weights=drop_equal_pos_aware)
    scores = {}
    for tweet in tweets:
        if method != "snpos":
            if tagger_mode == "pretagged":
                if tweet.tagged_tokens is None:
                    raise ValidationError(
                        f"tweet {tweet.id}: pretagged mode but no stored tags")
            else:
                tweet = _strip_tags(tweet)
        if method == "snpos":
            score = scoring.score_snpos(tweet, table)
        elif method == "spos":
            score = scoring.score_spos(tweet, table)
        else:
            score = scoring.score_sposw(tweet, table, synonyms)
        scores[tweet.id] = score
    return scores


def run_pipeline(cfg: PipelineConfig):
    """Execute the full pipeline and write all artifacts. Returns the
    evaluation report and the output directory."""
    cfg.validate()
    out = cfg.output_dir
    out.mkdir(parents=True, exist_ok=True)

    tweets = load_tweets(cfg.tweets, lenient=cfg.lenient)
    polls = load_polls(cfg.polls)
    selections = select_tweets(tweets, cfg.keywords)
    save_selections(selections, out / "selections.tsv")

    selected_ids = set().union(*selections.values()) if selections else set()
    relevant = [t for t in tweets if t.id in selected_ids]
    rows = lexicon.parse_sentiwordnet(cfg.lexicon)
    synonyms = lexicon.load_synonyms(cfg.synonyms) if cfg.method == "sposw" else None
    scores = score_tweets(relevant, cfg.method, rows, synonyms,
                          tagger_mode=cfg.tagger,
                          drop_equal_pos_aware=cfg.drop_equal_pos_aware)
    save_scores(scores, out / "scores.tsv")

    instances = build_time_instances(relevant, polls, selections)
    series = agg.build_series(instances, scores, cfg.aggregation_config())
    save_series(series, out / "series.csv")

    weights = calibration.calibrate(series, polls)
    save_weights(weights, out / "weights.csv")

    if cfg.mode == "loocv":
        report = evaluation.loocv(series, polls)
    else:
        train = evaluation.parse_ranges(cfg.train_ranges)
        test = tuple(o for o in range(1, len(polls) + 1) if o not in set(train))
        split = evaluation.SplitSpec(train=train, test=test)
        report = evaluation.split_eval(series, polls, split)
        if cfg.permutations:
            p = evaluation.permutation_pvalue(series, polls, split,
                                              rounds=cfg.permutations,
                                              seed=cfg.seed, scheme=cfg.permute)
            report = dataclasses.replace(report, p_value=p)

    save_inferences(report, out / "inferences.csv")
    emit_plot_data(report, polls, out / "plot_data.csv")
    (out / "report.txt").write_text(format_report(report, cfg))
    log.info("pipeline complete; artifacts in %s", out)
    return report, out


# ---------------------------------------------------------------------------
# artifact IO (every writer has a matching reader so stages can run
# standalone)

def save_selections(selections: dict, path):
    with open(path, "w", encoding="utf-8") as fh:
        for party in PARTIES:
            for tweet_id in sorted(selections.get(party, ())):
                fh.write(f"{party}\t{tweet_id}\n")


def load_selections(path) -> dict:
    selections = {party: set() for party in PARTIES}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            party, _, tweet_id = line.partition("\t")
            selections.setdefault(party, set()).add(tweet_id)
    return selections


def save_scores(scores: dict, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("id\tpos\tneg\tmatched\n")
        for tweet_id in sorted(scores):
            s = scores[tweet_id]
            fh.write(f"{tweet_id}\t{s.pos!r}\t{s.neg!r}\t{s.matched_terms}\n")


def load_scores(path) -> dict:
    scores = {}
    with open(path, encoding="utf-8") as fh:
        next(fh)
        for line in fh:
            tweet_id, pos, neg, matched = line.rstrip("\n").split("\t")
            scores[tweet_id] = scoring.SentimentScore(
                pos=float(pos), neg=float(neg), matched_terms=int(matched))
    return scores


def save_series(series: dict, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["instance", "party", "senti", "m"])
        n = len(series[PARTIES[0]].values)
        for i in range(n):
            for party in PARTIES:
                value = series[party].values[i]
                writer.writerow([i + 1, party,
                                 "" if value is None else repr(value),
                                 series[party].kept_counts[i]])


def load_series(path) -> dict:
    values = {party: {} for party in PARTIES}
    counts = {party: {} for party in PARTIES}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        next(reader)
        for instance, party, senti, m in reader:
            values[party][int(instance)] = float(senti) if senti else None
            counts[party][int(instance)] = int(m)
    series = {}
    for party in PARTIES:
        ordinals = sorted(values[party])
        series[party] = agg.SentimentSeries(
            party=party,
            values=tuple(values[party][o] for o in ordinals),
            kept_counts=tuple(counts[party][o] for o in ordinals))
    return series


def save_weights(weights, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["party", "weight"])
        for party in PARTIES:
            writer.writerow([party, repr(weights.for_party(party))])


def load_weights(path):
    values = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        next(reader)
        for party, weight in reader:
            values[party] = float(weight)
    return calibration.CalibrationWeights(
        w_con=values["CON"], w_lab=values["LAB"], w_lib=values["LIB"])


def save_inferences(report, path):
    """instance,con,lab,lib,normalized for every evaluated instance."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["instance", "con", "lab", "lib", "normalized"])
        for instance, triplet in sorted(report.triplets):
            writer.writerow([instance, repr(triplet.con), repr(triplet.lab),
                             repr(triplet.lib),
                             str(triplet.normalized).lower()])


def emit_plot_data(report, polls, path):
    """instance,party,target,inferred rows for external plotting."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["instance", "party", "target", "inferred"])
        for row in report.residuals:
            writer.writerow([row.instance, row.party, repr(row.target),
                             repr(row.inferred)])
    return path


def format_report(report, cfg=None) -> str:
    """Plain-text summary laid out like the published results tables,
    in percentage points, with a share-unit detail block."""
    lines = ["pollsense evaluation report"]
    if cfg is not None:
        lines += [
            f"seed: {cfg.seed}",
            f"method: {cfg.method}  aggregation: {cfg.agg_method}"
            f"  delta: {cfg.delta}  remove_top: {cfg.remove_top}",
            f"mode: {cfg.mode}" + (f"  train: {cfg.train_ranges}"
                                   if cfg.mode == "split" else ""),
        ]
    lines.append("")
    header = (f"{'':10s}{'CON':>16s}{'LAB':>16s}{'LIB':>16s}"
              f"{'All Parties':>16s}{'MRE':>9s}{'p-value':>9s}")
    lines.append(header)

    def cell(pair):
        m, sd = pair
        return f"{m * 100:.2f} +/- {sd * 100:.2f}"

    row = f"{'MAE (pp)':10s}"
    for party in PARTIES:
        row += f"{cell(report.per_party[party]):>16s}"
    row += f"{cell((report.all_mae, report.all_sd)):>16s}"
    row += f"{report.mre:>9.4f}"
    row += f"{report.p_value:>9.3f}" if report.p_value is not None else f"{'-':>9s}"
    lines.append(row)
    lines.append("")
    lines.append(f"mode: {report.mode}  instances evaluated: {report.n_evaluated}"
                 + (f"  skipped: {list(report.skipped)}" if report.skipped else ""))
    lines.append("share units: all-parties MAE = "
                 f"{report.all_mae!r} +/- {report.all_sd!r}")
    if report.weights is not None:
        lines.append("weights: " + "  ".join(
            f"{party}={report.weights.for_party(party)!r}" for party in PARTIES))
    return "\n".join(lines) + "\n"
