"""Clarity thresholding and per-window sentiment aggregation.

A tweet's clarity is |pos - neg|; tweets below the threshold are
"semantically unclear" and dropped, as are tweets with no lexicon hit.
Two collapse functions turn the kept tweets of one poll window into a
single value:

  * MTS: mean positive minus mean negative score;
  * DSC: (#{pos > neg} - #{neg > pos}) / m, where ties count toward m
    but toward neither class.

The threshold is compared with >= (kept iff clarity >= delta), so
delta = 0 keeps tied tweets. A removal target selects the exact k
lowest-clarity tweets over the global pool, ties broken by tweet id.
Windows whose kept set is empty yield None rather than a fabricated
neutral value; calibration drops them pairwise.
"""

import logging
import math
from dataclasses import dataclass

from .corpus import PARTIES
from .errors import ValidationError

log = logging.getLogger(__name__)

METHODS = ("MTS", "DSC")


@dataclass(frozen=True)
class AggregationConfig:
    method: str = "MTS"
    delta: float = 0.0
    removal_target: int | None = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValidationError(f"unknown aggregation method {self.method!r}")
        if self.delta < 0:
            raise ValidationError(f"delta must be >= 0, got {self.delta}")
        if self.removal_target is not None and self.removal_target <= 0:
            raise ValidationError(
                f"removal target must be positive, got {self.removal_target}")


@dataclass(frozen=True)
class SentimentSeries:
    party: str
    values: tuple
    kept_counts: tuple

    def __post_init__(self):
        if len(self.values) != len(self.kept_counts):
            raise ValidationError("values and kept_counts lengths differ")


def delta_for_removal(scores, k: int) -> float:
    """Smallest delta for which at least k tweets fall below it
    (strict <). With the >= keep rule this is the successor of the k-th
    smallest clarity."""
    clarities = sorted(s.clarity for s in scores)
    if k > len(clarities):
        raise ValidationError(
            f"removal target {k} exceeds pool size {len(clarities)}")
    if k == 0:
        return 0.0
    kth = clarities[k - 1]
    for value in clarities[k:]:
        if value > kth:
            return value
    return math.nextafter(kth, math.inf)


def filter_by_delta(scored, delta: float) -> list:
    """Keep scores with clarity >= delta and at least one lexicon hit."""
    return [s for s in scored if s.matched_terms > 0 and s.clarity >= delta]


def lowest_clarity_ids(scores_by_id: dict, k: int) -> set:
    """Ids of the exact k lowest-clarity tweets (ties broken by id)."""
    pool = [(score.clarity, tweet_id)
            for tweet_id, score in scores_by_id.items()
            if score.matched_terms > 0]
    if k > len(pool):
        raise ValidationError(f"removal target {k} exceeds pool size {len(pool)}")
    pool.sort()
    return {tweet_id for _, tweet_id in pool[:k]}


def senti_mts(kept) -> float | None:
    """Mean positive minus mean negative score over the kept tweets."""
    if not kept:
        return None
    m = len(kept)
    return sum(s.pos for s in kept) / m - sum(s.neg for s in kept) / m


def senti_dsc(kept) -> float | None:
    """Normalized difference of positive- vs negative-dominant counts."""
    if not kept:
        return None
    positive = sum(1 for s in kept if s.pos > s.neg)
    negative = sum(1 for s in kept if s.neg > s.pos)
    return (positive - negative) / len(kept)


_SENTI_FUNCS = {"MTS": senti_mts, "DSC": senti_dsc}


def build_series(instances, scores_by_id: dict, cfg: AggregationConfig) -> dict:
    """Collapse scored tweets into one value per party per instance.

    ``scores_by_id`` maps tweet id -> SentimentScore; every bucketed
    tweet must be scored. With a removal target, the k lowest-clarity
    tweets of the global pool (all parties, zero-signal tweets already
    excluded) are removed instead of delta filtering.
    """
    removed = None
    if cfg.removal_target is not None:
        removed = lowest_clarity_ids(scores_by_id, cfg.removal_target)
        log.info("removal target %d: effective delta %.6g", cfg.removal_target,
                 delta_for_removal([s for s in scores_by_id.values()
                                    if s.matched_terms > 0],
                                   cfg.removal_target))
    collapse = _SENTI_FUNCS[cfg.method]
    values = {party: [] for party in PARTIES}
    kept_counts = {party: [] for party in PARTIES}
    for idx, instance in enumerate(instances, start=1):
        for party in PARTIES:
            bucket = instance.party_tweets.get(party, ())
            scored = [scores_by_id[t.id] for t in bucket]
            if removed is not None:
                kept = [s for t, s in zip(bucket, scored)
                        if s.matched_terms > 0 and t.id not in removed]
            else:
                kept = filter_by_delta(scored, cfg.delta)
            value = collapse(kept)
            if value is None:
                log.warning("instance %d: empty kept set for %s", idx, party)
            values[party].append(value)
            kept_counts[party].append(len(kept))
    return {party: SentimentSeries(party=party, values=tuple(values[party]),
                                   kept_counts=tuple(kept_counts[party]))
            for party in PARTIES}
