"""Bias-free per-party calibration and share inference.

Each party's weight is the closed-form minimizer of
sum_i (poll_i - senti_i * w)^2, i.e. w = sum(poll*senti) / sum(senti^2);
no intercept is fitted. Inferred raw values senti * w are normalized to
a valid triplet: divided by their sum when all are non-negative,
otherwise negatives are clamped to zero and the clamped values are
normalized only if they sum above 1.
"""

import logging
import math
from dataclasses import dataclass

from .corpus import PARTIES
from .errors import DegenerateFitError, DegenerateInferenceError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CalibrationWeights:
    w_con: float
    w_lab: float
    w_lib: float

    def for_party(self, party: str) -> float:
        return getattr(self, "w_" + party.lower())


@dataclass(frozen=True)
class InferredTriplet:
    con: float
    lab: float
    lib: float
    normalized: bool

    def share(self, party: str) -> float:
        return getattr(self, party.lower())


def fit_weight(senti, polls) -> float:
    """Closed-form bias-free OLS weight. Pairs whose sentiment value is
    None (empty window) are dropped pairwise."""
    pairs = [(s, p) for s, p in zip(senti, polls, strict=True) if s is not None]
    if not pairs:
        raise DegenerateFitError("no usable (senti, poll) pairs")
    denom = math.fsum(s * s for s, _ in pairs)
    if denom == 0.0:
        raise DegenerateFitError("all-zero sentiment series")
    return math.fsum(s * p for s, p in pairs) / denom


def infer(senti: float, weight: float) -> float:
    """Raw inference; may be negative before normalization."""
    return senti * weight


def normalize_triplet(raw) -> InferredTriplet:
    """Turn three raw inferences into a valid share triplet.

    All non-negative: divide by the sum. Any negative: clamp negatives
    to zero, then normalize only if the clamped sum exceeds 1; otherwise
    the clamped values are returned as-is with normalized=False.
    """
    con, lab, lib = raw
    if con <= 0 and lab <= 0 and lib <= 0:
        raise DegenerateInferenceError(f"all raw inferences non-positive: {raw}")
    if con >= 0 and lab >= 0 and lib >= 0:
        total = con + lab + lib
        return InferredTriplet(con / total, lab / total, lib / total,
                               normalized=True)
    clamped = [max(0.0, v) for v in (con, lab, lib)]
    total = sum(clamped)
    if total > 1:
        return InferredTriplet(*(v / total for v in clamped), normalized=True)
    return InferredTriplet(*clamped, normalized=False)


def _values(series):
    """Accept either a SentimentSeries or a plain value sequence."""
    return series.values if hasattr(series, "values") else series


def calibrate(series_by_party: dict, polls) -> CalibrationWeights:
    """Fit the three per-party weights on aligned series and polls."""
    weights = {}
    for party in PARTIES:
        shares = [poll.share(party) for poll in polls]
        try:
            weights[party] = fit_weight(_values(series_by_party[party]), shares)
        except DegenerateFitError as exc:
            raise DegenerateFitError(f"{party}: {exc}") from None
    return CalibrationWeights(w_con=weights["CON"], w_lab=weights["LAB"],
                              w_lib=weights["LIB"])


def infer_triplets(series_by_party: dict, weights: CalibrationWeights) -> list:
    """Per-instance normalized triplets; None where any party's
    sentiment value is missing."""
    columns = {party: _values(series_by_party[party]) for party in PARTIES}
    n = len(columns[PARTIES[0]])
    triplets = []
    for i in range(n):
        values = [columns[party][i] for party in PARTIES]
        if any(v is None for v in values):
            log.warning("instance %d: missing sentiment, no inference", i + 1)
            triplets.append(None)
            continue
        raw = [infer(v, weights.for_party(party))
               for v, party in zip(values, PARTIES)]
        triplets.append(normalize_triplet(raw))
    return triplets


def calibrate_and_infer(train_series: dict, train_polls,
                        test_series: dict) -> list:
    """Fit on the training series and infer a normalized triplet for
    every test instance."""
    weights = calibrate(train_series, train_polls)
    return infer_triplets(test_series, weights)
