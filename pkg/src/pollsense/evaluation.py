"""Error metrics, cross-validation, fixed-split evaluation and the
permutation significance test.

MAE is reported with its sample standard deviation (n-1), in share
units. The ranking error of a triplet sums each party's rank
displacement between the inferred and target orderings (descending
share, ties broken CON > LAB > LIB) and is always 0, 2 or 4; MRE
divides the total by 4 per triplet.

The permutation test shuffles the sentiment series (one shared
permutation per round across the three parties by default, independent
per-party permutations as an option) over the full instance range while
poll targets stay in place, refits on the training split, and counts
rounds whose all-parties MAE is strictly lower than the actual one.
Rounds are driven by per-round seeds pre-split from the master seed.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from .corpus import PARTIES
from .errors import DegenerateFitError, DegenerateInferenceError, ValidationError
from .calibration import calibrate, infer_triplets

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResidualRow:
    instance: int  # 1-based poll ordinal
    party: str
    target: float
    inferred: float


@dataclass(frozen=True)
class EvaluationReport:
    mode: str
    per_party: dict  # party -> (mae, sd)
    all_mae: float
    all_sd: float
    mre: float
    n_evaluated: int
    p_value: float | None = None
    residuals: tuple = ()
    triplets: tuple = ()  # (1-based ordinal, InferredTriplet) pairs
    skipped: tuple = ()  # 1-based ordinals with missing inferences
    weights: object = None


@dataclass(frozen=True)
class SplitSpec:
    train: tuple
    test: tuple

    def __post_init__(self):
        if not self.train or not self.test:
            raise ValidationError("train and test must both be non-empty")
        if set(self.train) & set(self.test):
            raise ValidationError("train and test overlap")

    def validate_for(self, n: int):
        for ordinal in (*self.train, *self.test):
            if not 1 <= ordinal <= n:
                raise ValidationError(f"split ordinal {ordinal} outside 1..{n}")


def parse_ranges(text: str) -> tuple:
    """'1-30,47-58' -> (1, ..., 30, 47, ..., 58); 1-based, inclusive."""
    ordinals = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            ordinals.extend(range(int(lo), int(hi) + 1))
        else:
            ordinals.append(int(part))
    return tuple(ordinals)


def paper_split(n: int = 68) -> SplitSpec:
    """Training on polls 1-30 and 47-58, testing on the rest."""
    train = parse_ranges("1-30,47-58")
    test = tuple(i for i in range(1, n + 1) if i not in set(train))
    return SplitSpec(train=train, test=test)


def mae(inferred, target):
    """Mean absolute error and its sample standard deviation."""
    inferred = np.asarray(inferred, dtype=float)
    target = np.asarray(target, dtype=float)
    if inferred.shape != target.shape:
        raise ValidationError(
            f"length mismatch: {inferred.shape} vs {target.shape}")
    if inferred.size == 0:
        raise ValidationError("mae of empty series")
    errors = np.abs(inferred - target)
    sd = float(np.std(errors, ddof=1)) if errors.size > 1 else 0.0
    return float(np.mean(errors)), sd


def _ranks(triplet) -> dict:
    # descending share; ties resolved by fixed party order CON > LAB > LIB
    order = sorted(range(3), key=lambda i: (-triplet[i], i))
    ranks = {}
    for position, idx in enumerate(order, start=1):
        ranks[PARTIES[idx]] = position
    return ranks


def ranking_error(inferred, target) -> int:
    """Sum over parties of |inferred rank - target rank|; 0, 2 or 4."""
    ri = _ranks(inferred)
    rt = _ranks(target)
    return sum(abs(ri[party] - rt[party]) for party in PARTIES)


def mre(errors) -> float:
    """Ranking errors averaged against the per-triplet maximum of 4."""
    errors = list(errors)
    if not errors:
        raise ValidationError("mre of empty error list")
    return sum(errors) / (len(errors) * 4)


def _triplet_tuple(triplet):
    return (triplet.con, triplet.lab, triplet.lib)


def _report(mode, rows, skipped, p_value=None, weights=None):
    """Assemble metrics from (ordinal, inferred triplet, poll) rows."""
    if not rows:
        raise ValidationError("no evaluated instances")
    per_party = {}
    for party in PARTIES:
        inferred = [t.share(party) for _, t, _ in rows]
        target = [poll.share(party) for _, _, poll in rows]
        per_party[party] = mae(inferred, target)
    all_inferred = [t.share(p) for _, t, _ in rows for p in PARTIES]
    all_target = [poll.share(p) for _, _, poll in rows for p in PARTIES]
    all_mae, all_sd = mae(all_inferred, all_target)
    ranking = mre([ranking_error(_triplet_tuple(t),
                                 (poll.con, poll.lab, poll.lib))
                   for _, t, poll in rows])
    residuals = tuple(ResidualRow(instance=ordinal, party=party,
                                  target=poll.share(party),
                                  inferred=t.share(party))
                      for ordinal, t, poll in rows for party in PARTIES)
    return EvaluationReport(mode=mode, per_party=per_party, all_mae=all_mae,
                            all_sd=all_sd, mre=ranking,
                            n_evaluated=len(rows), p_value=p_value,
                            residuals=residuals,
                            triplets=tuple((ordinal, t) for ordinal, t, _ in rows),
                            skipped=tuple(skipped), weights=weights)


def _series_columns(series_by_party):
    cols = {}
    for party in PARTIES:
        series = series_by_party[party]
        cols[party] = list(series.values if hasattr(series, "values") else series)
    lengths = {len(v) for v in cols.values()}
    if len(lengths) != 1:
        raise ValidationError(f"party series lengths differ: {lengths}")
    return cols


def loocv(series_by_party, polls) -> EvaluationReport:
    """Leave-one-out: fit on all other instances, infer the held-out
    one; metrics aggregate over all held-out triplets."""
    cols = _series_columns(series_by_party)
    n = len(polls)
    if n < 2:
        raise ValidationError("leave-one-out needs at least 2 instances")
    if len(cols[PARTIES[0]]) != n:
        raise ValidationError("series and poll lengths differ")
    rows = []
    skipped = []
    for i in range(n):
        rest = [j for j in range(n) if j != i]
        train = {p: [cols[p][j] for j in rest] for p in PARTIES}
        train_polls = [polls[j] for j in rest]
        held_out = {p: [cols[p][i]] for p in PARTIES}
        try:
            weights = calibrate(train, train_polls)
        except DegenerateFitError as exc:
            raise DegenerateFitError(f"fold {i + 1}: {exc}") from None
        try:
            triplet = infer_triplets(held_out, weights)[0]
        except DegenerateInferenceError as exc:
            raise DegenerateInferenceError(f"fold {i + 1}: {exc}") from None
        if triplet is None:
            skipped.append(i + 1)
            continue
        rows.append((i + 1, triplet, polls[i]))
    return _report("loocv", rows, skipped)


def split_eval(series_by_party, polls, split: SplitSpec) -> EvaluationReport:
    """Single fit on the training ordinals, metrics over the test ones."""
    cols = _series_columns(series_by_party)
    n = len(polls)
    if len(cols[PARTIES[0]]) != n:
        raise ValidationError("series and poll lengths differ")
    split.validate_for(n)
    train_idx = [o - 1 for o in split.train]
    test_idx = [o - 1 for o in split.test]
    train = {p: [cols[p][j] for j in train_idx] for p in PARTIES}
    train_polls = [polls[j] for j in train_idx]
    test = {p: [cols[p][j] for j in test_idx] for p in PARTIES}
    weights = calibrate(train, train_polls)
    triplets = infer_triplets(test, weights)
    rows = []
    skipped = []
    for ordinal, triplet in zip(split.test, triplets):
        if triplet is None:
            skipped.append(ordinal)
            continue
        rows.append((ordinal, triplet, polls[ordinal - 1]))
    return _report("split", rows, skipped, weights=weights)


def permutation_pvalue(series_by_party, polls, split: SplitSpec,
                       rounds: int = 1000, seed: int = 0,
                       scheme: str = "joint") -> float:
    """Fraction of permuted refits strictly beating the actual model's
    all-parties MAE. Deterministic given (seed, rounds); ties favor the
    actual model; degenerate permuted fits count as non-better."""
    if rounds < 1:
        raise ValidationError("rounds must be >= 1")
    if scheme not in ("joint", "independent"):
        raise ValidationError(f"unknown permutation scheme {scheme!r}")
    cols = _series_columns(series_by_party)
    actual = split_eval(cols, polls, split).all_mae
    n = len(polls)
    round_seeds = np.random.SeedSequence(seed).spawn(rounds)
    better = 0
    degenerate = 0
    for round_seed in round_seeds:
        rng = np.random.default_rng(round_seed)
        if scheme == "joint":
            perm = rng.permutation(n)
            shuffled = {p: [cols[p][j] for j in perm] for p in PARTIES}
        else:
            shuffled = {p: [cols[p][j] for j in rng.permutation(n)]
                        for p in PARTIES}
        try:
            permuted = split_eval(shuffled, polls, split).all_mae
        except (DegenerateFitError, DegenerateInferenceError, ValidationError):
            degenerate += 1
            continue
        if permuted < actual:
            better += 1
    if degenerate:
        log.info("%d of %d permutation rounds degenerate (counted non-better)",
                 degenerate, rounds)
    return better / rounds
